#include "shulga/growth.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>
#include <thread>

namespace shulga {

bool AuditReport::all_ok() const {
    for (const auto& [name, flag] : entries())
        if (!flag->ok) return false;
    return true;
}

std::vector<std::pair<std::string, const CheckFlag*>> AuditReport::entries() const {
    return {{"sum_exact", &sum_exact},
            {"digit_consistency", &digit_consistency},
            {"strict_c_gt_b", &strict_c_gt_b},
            {"c1_ge_b1", &c1_ge_b1},
            {"b_monotone", &b_monotone},
            {"b_skip_growth", &b_skip_growth},
            {"b_linear", &b_linear},
            {"ratio_strictly_increasing", &ratio_strictly_increasing},
            {"ratio_le_q", &ratio_le_q},
            {"partition_ok", &partition_ok},
            {"region_membership", &region_membership},
            {"b_ratio_bound", &b_ratio_bound},
            {"conditional_c_growth", &conditional_c_growth}};
}

namespace {

std::string at_index(std::size_t k, const std::string& detail) {
    return "n=" + std::to_string(k) + ": " + detail;
}

}  // namespace

AuditReport audit(const RealInput& alpha, const DecompositionResult& result) {
    AuditReport rep;
    const std::size_t n = result.steps;
    const auto& b = result.b;
    const auto& c = result.c;

    ConvergentTable qt, tt;
    for (const auto& d : b) qt.extend(d);
    for (const auto& d : c) tt.extend(d);

    if (result.terminated) {
        Rational sum = *result.beta + *result.gamma;
        if (compare(alpha, sum) != 0)
            rep.sum_exact.fail("beta+gamma = " + to_string(sum) + " != alpha");
    }

    // The defining digit equalities, re-derived from scratch differences:
    // b_k = a_k(alpha - [0;c_1..c_{k-1}]) + 1 and
    // c_k = a_k(alpha - [0;b_1..b_k]) at every step, and on termination the
    // full expansions of alpha - gamma and alpha - beta are exactly b and c.
    {
        ConvergentTable bpart, cpart;
        for (std::size_t k = 1; k <= n && rep.digit_consistency.ok; ++k) {
            auto db = partial_quotient(sub_rational(alpha, cpart.value()), k);
            if (!db || *db + 1 != b[k - 1]) {
                rep.digit_consistency.fail(at_index(k, "b_k != a_k(alpha-[0;c_1..c_{k-1}]) + 1"));
                break;
            }
            bpart.extend(b[k - 1]);
            auto dc = partial_quotient(sub_rational(alpha, bpart.value()), k);
            if (!dc || *dc != c[k - 1]) {
                rep.digit_consistency.fail(at_index(k, "c_k != a_k(alpha-[0;b_1..b_k])"));
                break;
            }
            cpart.extend(c[k - 1]);
        }
        if (rep.digit_consistency.ok && result.terminated && n > 0) {
            const auto& r = std::get<Rational>(alpha);
            CFExpansion eb = cf_expand(r - *result.gamma);
            CFExpansion ec = cf_expand(r - *result.beta);
            if (eb.a0 != 0 || eb.digits != b)
                rep.digit_consistency.fail("expansion of alpha - gamma differs from b");
            else if (ec.a0 != 0 || ec.digits != c)
                rep.digit_consistency.fail("expansion of alpha - beta differs from c");
        }
    }

    if (n >= 1 && c[0] < b[0])
        rep.c1_ge_b1.fail("c_1 = " + to_string(c[0]) + " < b_1 = " + to_string(b[0]));
    for (std::size_t k = 2; k <= n; ++k)
        if (c[k - 1] <= b[k - 1])
            rep.strict_c_gt_b.fail(
                at_index(k, "c_n = " + to_string(c[k - 1]) + " <= b_n = " + to_string(b[k - 1])));
    for (std::size_t k = 1; k + 1 <= n; ++k)
        if (b[k] < b[k - 1]) rep.b_monotone.fail(at_index(k + 1, "b decreases"));
    for (std::size_t k = 1; k + 2 <= n; ++k)
        if (b[k + 1] < b[k - 1] + 1) rep.b_skip_growth.fail(at_index(k + 2, "b_{n+2} < b_n + 1"));
    for (std::size_t k = 1; k <= n; ++k)
        if (b[k - 1] < Integer(static_cast<unsigned long>(k)))
            rep.b_linear.fail(at_index(k, "b_n = " + to_string(b[k - 1]) + " < n"));

    for (std::size_t k = 1; k + 1 <= n; ++k)
        if (tt.q(k + 1) * qt.q(k) <= tt.q(k) * qt.q(k + 1))
            rep.ratio_strictly_increasing.fail(at_index(k + 1, "t_n/q_n did not increase"));

    if (const auto* r = std::get_if<Rational>(&alpha)) {
        const Integer& den = r->get_den();
        for (std::size_t k = 1; k <= n; ++k)
            if (tt.q(k) > den * qt.q(k))
                rep.ratio_le_q.fail(at_index(k, "t_n > q*q_n"));
    }

    DigitPrefix prefix{b, c};
    for (std::size_t k = 1; k <= n; ++k)
        if (!partition_check(prefix, k)) {
            rep.partition_ok.fail(at_index(k, "partition inequalities fail"));
            break;
        }

    // alpha in A_n at every step; exact membership is decidable for rational
    // and quadratic inputs only. A_k = A_{k-1} cap B_k cap C_k, so the region
    // is carried across k instead of being rebuilt.
    if (!std::holds_alternative<DigitStream>(alpha)) {
        auto inside = [&](const Region& region) {
            if (const auto* r = std::get_if<Rational>(&alpha)) return region.contains(*r);
            return region.contains(std::get<QuadraticIrrational>(alpha));
        };
        std::optional<Region> region = Region::unit();
        for (std::size_t k = 1; k <= n; ++k) {
            region = intersect(region, Region::of(b_interval(prefix, k)));
            if (region) region = intersect(region, Region::of(c_interval(prefix, k)));
            if (!region || !inside(*region)) {
                rep.region_membership.fail(at_index(k, "alpha not in A_n"));
                break;
            }
        }
    }

    // b_{n+1} > (t_n/q_n)^2 - 1, cleared of division.
    for (std::size_t k = 1; k + 1 <= n; ++k)
        if (b[k] * qt.q(k) * qt.q(k) <= tt.q(k) * tt.q(k) - qt.q(k) * qt.q(k))
            rep.b_ratio_bound.fail(at_index(k + 1, "b_{n+1} q_n^2 <= t_n^2 - q_n^2"));

    for (std::size_t k = 1; k + 1 <= n; ++k)
        if (b[k - 1] >= 8 && b[k] < c[k - 1] && 2 * c[k] <= 3 * b[k - 1])
            rep.conditional_c_growth.fail(at_index(k + 1, "2 c_{n+1} <= 3 b_n"));

    return rep;
}

namespace {

ScanRecord make_record(const Integer& p, const Integer& q, const DecompositionResult& res,
                       unsigned long qmax_for_len) {
    (void)qmax_for_len;
    ScanRecord rec;
    rec.p = p;
    rec.q = q;
    rec.steps = res.steps;
    rec.terminated = res.terminated;
    rec.max_b = 0;
    rec.max_c = 0;
    for (const auto& d : res.b) rec.max_b = std::max(rec.max_b, d);
    for (const auto& d : res.c) rec.max_c = std::max(rec.max_c, d);
    for (std::size_t k = 1; k < res.c.size(); ++k) {
        if (res.c[k] < res.c[k - 1]) rec.c_monotone = false;
        if (res.c[k] < res.c[0]) rec.c_drop_indices.push_back(k + 1);
    }
    if (res.steps > 0) {
        ConvergentTable qt, tt;
        for (const auto& d : res.b) qt.extend(d);
        for (const auto& d : res.c) tt.extend(d);
        rec.ratio_final = make_rational(tt.q(res.steps), qt.q(res.steps));
    }
    double lg = std::log2(q.get_d());
    rec.length_vs_log2q = lg > 0 ? static_cast<double>(res.steps) / lg : 0.0;
    return rec;
}

void scan_one(const Integer& p, const Integer& q, std::vector<ScanRecord>& out) {
    Rational alpha = make_rational(p, q);
    DecompositionResult res = decompose(alpha);
    if (!res.terminated)
        throw audit_failure("scan: step cap reached for " + to_string(alpha));
    AuditReport rep = audit(alpha, res);
    if (!rep.all_ok()) {
        std::string why;
        for (const auto& [name, flag] : rep.entries())
            if (!flag->ok) why = name + " (" + flag->witness + ")";
        throw audit_failure("scan: audit failed for " + to_string(alpha) + ": " + why);
    }
    out.push_back(make_record(p, q, res, 0));
}

// Records for one denominator, in increasing p order.
std::vector<ScanRecord> scan_denominator(unsigned long q, unsigned long /*q_max*/) {
    std::vector<ScanRecord> out;
    Integer qq(q);
    if (q == 1) {
        scan_one(0, 1, out);
        scan_one(1, 1, out);
        return out;
    }
    for (unsigned long p = 1; p < q; ++p) {
        Integer pp(p);
        if (mpz_gcd_ui(nullptr, pp.get_mpz_t(), q) != 1) continue;
        scan_one(pp, qq, out);
    }
    return out;
}

}  // namespace

ScanSummary scan(unsigned long q_max, const ScanOptions& options) {
    if (q_max < 2) throw std::domain_error("scan needs q_max >= 2");
    unsigned jobs = std::max(1u, options.jobs);

    std::vector<std::vector<ScanRecord>> per_q(q_max + 1);
    std::exception_ptr error;
    std::mutex error_mutex;
    std::atomic<unsigned long> next_q{1};
    auto worker = [&] {
        for (;;) {
            unsigned long q = next_q.fetch_add(1);
            if (q > q_max) return;
            try {
                per_q[q] = scan_denominator(q, q_max);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                next_q = q_max + 1;
                return;
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);

    ScanSummary summary;
    summary.q_max = q_max;
    unsigned long band = 4;
    for (unsigned long q = 1; q <= q_max; ++q) {
        for (const auto& rec : per_q[q]) {
            summary.fractions += 1;
            if (rec.steps > summary.max_steps) {
                summary.max_steps = rec.steps;
                summary.argmax_p = rec.p;
                summary.argmax_q = rec.q;
            }
            if (!rec.c_monotone) summary.c_monotone_violations += 1;
            if (options.sink) options.sink(rec);
        }
        if (q == band || q == q_max) {
            summary.trend.push_back({q, summary.max_steps, 2.0 * std::log2(double(q))});
            while (band <= q) band *= 2;
        }
    }
    return summary;
}

std::string scan_csv_header() {
    return "p,q,steps,terminated,max_b,max_c,c_monotone,first_c_drop_index,len_over_log2q";
}

std::string scan_csv_row(const ScanRecord& r) {
    std::ostringstream os;
    os << r.p.get_str() << ',' << r.q.get_str() << ',' << r.steps << ','
       << (r.terminated ? 1 : 0) << ',' << r.max_b.get_str() << ',' << r.max_c.get_str() << ','
       << (r.c_monotone ? 1 : 0) << ','
       << (r.c_drop_indices.empty() ? 0 : r.c_drop_indices.front()) << ',';
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.length_vs_log2q);
    os << buf;
    return os.str();
}

namespace {

struct Enumerator {
    std::size_t depth;
    Integer b_cap;
    std::vector<DigitPrefix> found;

    void choose_b(DigitPrefix& prefix, const Region& region) {
        std::size_t k = prefix.b.size() + 1;
        Integer lo = prefix.b.empty() ? Integer(2) : prefix.b.back();
        for (Integer bb = lo; bb <= b_cap; ++bb) {
            prefix.b.push_back(bb);
            auto r = intersect(region, Region::of(b_interval(prefix, k)));
            if (r) {
                if (k == depth)
                    found.push_back(prefix);
                else
                    choose_c(prefix, *r);
            }
            prefix.b.pop_back();
        }
    }

    void choose_c(DigitPrefix& prefix, const Region& region) {
        std::size_t k = prefix.c.size() + 1;
        ConvergentTable qt;
        for (const auto& d : prefix.b) qt.extend(d);
        Integer qk1_max = b_cap * qt.q(k) + qt.q(k - 1);
        Integer start(1);
        if (k >= 2) {
            // c_k exceeds the exact lower bound; start at the next integer.
            Rational lb = lower_bound_c(prefix, k);
            start = floor_int(lb) + 1;
            if (start < 1) start = 1;
        }
        ConvergentTable tt;
        for (const auto& d : prefix.c) tt.extend(d);
        for (Integer cc = start;; ++cc) {
            Integer tk = cc * tt.q(k - 1) + (k >= 2 ? tt.q(k - 2) : Integer(0));
            if (k == 1) tk = cc;  // t_1 = c_1
            // B_{k+1} cap C_k needs t_k(t_k+t_{k-1}) < q_{k+1} q_k, and
            // q_{k+1} <= b_cap q_k + q_{k-1}; beyond that no extension exists.
            if (tk * (tk + tt.q(k - 1)) >= qk1_max * qt.q(k)) break;
            prefix.c.push_back(cc);
            auto r = intersect(region, Region::of(c_interval(prefix, k)));
            if (r) choose_b(prefix, *r);
            prefix.c.pop_back();
        }
    }
};

}  // namespace

std::vector<DigitPrefix> enumerate_prefixes(std::size_t depth, const Integer& b_cap) {
    if (depth < 2 || b_cap < 2) throw std::domain_error("enumerate needs depth >= 2, b_cap >= 2");
    Enumerator e{depth, b_cap, {}};
    DigitPrefix prefix;
    e.choose_b(prefix, Region::unit());
    return e.found;
}

std::optional<Rational> find_c_drop(std::size_t l, unsigned long q_max) {
    if (l < 2) throw std::domain_error("find_c_drop needs l >= 2");
    for (unsigned long q = 2; q <= q_max; ++q) {
        for (unsigned long p = 1; p < q; ++p) {
            Integer pp(p);
            if (mpz_gcd_ui(nullptr, pp.get_mpz_t(), q) != 1) continue;
            Rational alpha = make_rational(pp, Integer(q));
            DecompositionResult res = decompose(alpha);
            if (res.c.size() >= l && res.c[l - 1] < res.c[0]) return alpha;
        }
    }
    return std::nullopt;
}

}  // namespace shulga
