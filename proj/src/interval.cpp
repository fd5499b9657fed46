#include "shulga/interval.hpp"

namespace shulga {

bool OrientedInterval::contains(const Rational& x) const {
    if (included_end < excluded_end) return included_end <= x && x < excluded_end;
    return excluded_end < x && x <= included_end;
}

std::string OrientedInterval::str() const {
    if (included_end < excluded_end)
        return "[" + to_string(included_end) + ", " + to_string(excluded_end) + ")";
    return "(" + to_string(excluded_end) + ", " + to_string(included_end) + "]";
}

OrientedInterval shift(const OrientedInterval& i, const Rational& z) {
    return {i.included_end + z, i.excluded_end + z};
}

Region Region::unit() { return {Rational(0), Rational(1), true, true}; }

Region Region::of(const OrientedInterval& i) {
    if (i.included_end < i.excluded_end) return {i.included_end, i.excluded_end, true, false};
    return {i.excluded_end, i.included_end, false, true};
}

bool Region::contains(const Rational& x) const {
    if (x < lo || (x == lo && !lo_in)) return false;
    if (x > hi || (x == hi && !hi_in)) return false;
    return true;
}

bool Region::contains(const QuadraticIrrational& x) const {
    return x.compare(lo) > 0 && x.compare(hi) < 0;
}

bool Region::contains(const Region& inner) const {
    if (inner.lo < lo || (inner.lo == lo && inner.lo_in && !lo_in)) return false;
    if (inner.hi > hi || (inner.hi == hi && inner.hi_in && !hi_in)) return false;
    return true;
}

std::string Region::str() const {
    return std::string(lo_in ? "[" : "(") + to_string(lo) + ", " + to_string(hi) +
           (hi_in ? "]" : ")");
}

std::optional<Region> intersect(const std::optional<Region>& a, const Region& b) {
    if (!a) return std::nullopt;
    Region r = *a;
    if (b.lo > r.lo) {
        r.lo = b.lo;
        r.lo_in = b.lo_in;
    } else if (b.lo == r.lo) {
        r.lo_in = r.lo_in && b.lo_in;
    }
    if (b.hi < r.hi) {
        r.hi = b.hi;
        r.hi_in = b.hi_in;
    } else if (b.hi == r.hi) {
        r.hi_in = r.hi_in && b.hi_in;
    }
    if (r.lo > r.hi) return std::nullopt;
    if (r.lo == r.hi && !(r.lo_in && r.hi_in)) return std::nullopt;
    return r;
}

OrientedInterval cylinder(const std::vector<Integer>& digits) {
    if (digits.empty()) throw std::domain_error("cylinder needs at least one digit");
    std::vector<Integer> bumped = digits;
    bumped.back() += 1;
    return {cf_value(digits), cf_value(bumped)};
}

namespace {

std::vector<Integer> take(const std::vector<Integer>& v, std::size_t k) {
    return {v.begin(), v.begin() + k};
}

}  // namespace

OrientedInterval b_interval(const DigitPrefix& prefix, std::size_t k) {
    if (k == 0 || k > prefix.b.size() || k - 1 > prefix.c.size())
        throw std::out_of_range("digit unavailable");
    std::vector<Integer> lowered = take(prefix.b, k);
    lowered.back() -= 1;
    OrientedInterval base{cf_value(lowered), cf_value(take(prefix.b, k))};
    return shift(base, cf_value(take(prefix.c, k - 1)));
}

OrientedInterval c_interval(const DigitPrefix& prefix, std::size_t k) {
    if (k == 0 || k > prefix.c.size() || k > prefix.b.size())
        throw std::out_of_range("digit unavailable");
    std::vector<Integer> bumped = take(prefix.c, k);
    bumped.back() += 1;
    OrientedInterval base{cf_value(take(prefix.c, k)), cf_value(bumped)};
    return shift(base, cf_value(take(prefix.b, k)));
}

std::optional<Region> feasible_region(const DigitPrefix& prefix, std::size_t n) {
    std::optional<Region> r = Region::unit();
    for (std::size_t k = 1; k <= n && r; ++k) {
        r = intersect(r, Region::of(b_interval(prefix, k)));
        if (r) r = intersect(r, Region::of(c_interval(prefix, k)));
    }
    return r;
}

std::optional<Region> staggered_region(const DigitPrefix& prefix) {
    std::optional<Region> r = feasible_region(prefix, prefix.c.size());
    if (r && prefix.b.size() == prefix.c.size() + 1)
        r = intersect(r, Region::of(b_interval(prefix, prefix.b.size())));
    return r;
}

namespace {

struct Tables {
    ConvergentTable q;  // over b digits
    ConvergentTable t;  // over c digits
};

Tables tables_for(const DigitPrefix& prefix, std::size_t nb, std::size_t nc) {
    Tables out;
    for (std::size_t i = 0; i < nb; ++i) out.q.extend(prefix.b[i]);
    for (std::size_t i = 0; i < nc; ++i) out.t.extend(prefix.c[i]);
    return out;
}

}  // namespace

bool criterion_BnCn(const DigitPrefix& prefix) {
    std::size_t n = prefix.b.size();
    if (n < 1 || prefix.c.size() < n) throw std::out_of_range("criterion needs n >= 1");
    auto [qt, tt] = tables_for(prefix, n, n);
    // 1/(t_{n-1}(t_n+t_{n-1})) < 1/(q_n(q_n-q_{n-1}))
    return qt.q(n) * (qt.q(n) - qt.q(n - 1)) < tt.q(n - 1) * (tt.q(n) + tt.q(n - 1));
}

bool criterion_CnCn1(const DigitPrefix& prefix) {
    std::size_t n = prefix.b.size();
    if (n < 2 || prefix.c.size() < n) throw std::out_of_range("criterion needs n >= 2");
    auto [qt, tt] = tables_for(prefix, n, n);
    // 1/(q_n q_{n-1}) < c_n/((t_n+t_{n-1})(t_{n-1}+t_{n-2}))
    return (tt.q(n) + tt.q(n - 1)) * (tt.q(n - 1) + tt.q(n - 2)) <
           prefix.c[n - 1] * qt.q(n) * qt.q(n - 1);
}

bool criterion_BnCn1(const DigitPrefix& prefix) {
    std::size_t n = prefix.b.size();
    if (n < 2 || prefix.c.size() + 1 < n) throw std::out_of_range("criterion needs n >= 2");
    auto [qt, tt] = tables_for(prefix, n, n - 1);
    // 1/(q_n q_{n-1}) < 1/(t_{n-1}(t_{n-1}+t_{n-2}))
    return tt.q(n - 1) * (tt.q(n - 1) + tt.q(n - 2)) < qt.q(n) * qt.q(n - 1);
}

Rational lower_bound_c(const DigitPrefix& prefix, std::size_t n) {
    if (n < 2) throw std::out_of_range("lower_bound_c needs n >= 2");
    Rational one(1);
    return (one + cf_value_reversed(prefix.c, n - 1)) *
           (Rational(prefix.b[n - 1]) - one + cf_value_reversed(prefix.b, n - 1));
}

Rational lower_bound_b(const DigitPrefix& prefix, std::size_t n) {
    if (n < 2) throw std::out_of_range("lower_bound_b needs n >= 2");
    Rational one(1);
    return (one + one / Rational(prefix.c[n - 1])) *
               (Rational(prefix.c[n - 2]) + one + cf_value_reversed(prefix.c, n - 2)) *
               (one - cf_value_reversed(prefix.b, n - 1)) -
           one;
}

bool partition_check(const DigitPrefix& prefix, std::size_t n) {
    if (n < 1 || prefix.b.size() < n || prefix.c.size() < n)
        throw std::out_of_range("partition_check needs n >= 1");
    auto [qt, tt] = tables_for(prefix, n, n);
    // C_n is covered by the union of B_{n+1}(b) tiles plus its endpoint iff
    // t_n(t_n+t_{n-1}) >= q_n(q_n+q_{n-1}).
    if (tt.q(n) * (tt.q(n) + tt.q(n - 1)) < qt.q(n) * (qt.q(n) + qt.q(n - 1))) return false;
    // Each B_{n+1}(b) that meets C_n is covered by its C_{n+1}(b,c) tiles iff
    // t_n(t_n+t_{n-1}) < q_{n+1}(q_{n+1}-q_n). The right-hand side grows with
    // b, so the smallest intersecting b decides. That b is the least one with
    // B_{n+1}(b) cap C_n nonempty, i.e. with t_n(t_n+t_{n-1}) < q_{n+1} q_n,
    // which solves to b q_n^2 > t_n(t_n+t_{n-1}) - q_{n-1} q_n.
    Integer T = tt.q(n) * (tt.q(n) + tt.q(n - 1));
    Integer bb = floor_int(make_rational(T - qt.q(n - 1) * qt.q(n), qt.q(n) * qt.q(n))) + 1;
    if (bb < 2) bb = 2;
    // Cross-check the arithmetic minimum against the geometry.
    Region cn = Region::of(c_interval(prefix, n));
    DigitPrefix ext{take(prefix.b, n), take(prefix.c, n)};
    ext.b.push_back(bb);
    bool meets = intersect(cn, Region::of(b_interval(ext, n + 1))).has_value();
    bool meets_below = false;
    if (bb > 2) {
        ext.b.back() = bb - 1;
        meets_below = intersect(cn, Region::of(b_interval(ext, n + 1))).has_value();
    }
    if (!meets || meets_below)
        throw std::logic_error("partition_check: minimal tile disagrees with geometry");
    Integer qn1 = bb * qt.q(n) + qt.q(n - 1);
    return T < qn1 * (qn1 - qt.q(n));
}

}  // namespace shulga
