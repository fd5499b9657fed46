#include "shulga/quadratic.hpp"

#include <map>
#include <utility>

namespace shulga {

QuadraticIrrational::QuadraticIrrational(Integer P, Integer D, Integer Q)
    : p_(std::move(P)), d_(std::move(D)), q_(std::move(Q)) {
    if (q_ == 0) throw std::domain_error("zero denominator in quadratic irrational");
    if (d_ <= 0 || is_perfect_square(d_)) throw std::domain_error("D must be a positive nonsquare");
    normalize();
}

void QuadraticIrrational::normalize() {
    if ((d_ - p_ * p_) % q_ != 0) {
        // Rescale (P+sqrt(D))/Q = (P|Q| + sqrt(D Q^2)) / (Q|Q|).
        Integer a = abs(q_);
        p_ *= a;
        d_ *= q_ * q_;
        q_ *= a;
    }
}

Integer QuadraticIrrational::floor() const {
    Integer r = isqrt_floor(d_);  // sqrt(D) in (r, r+1), irrational
    Integer out;
    if (q_ > 0) {
        Integer num = p_ + r;
        mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), q_.get_mpz_t());
    } else {
        Integer num = -p_ - r - 1;
        Integer den = -q_;
        mpz_fdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    return out;
}

QuadraticIrrational QuadraticIrrational::minus(const Rational& r) const {
    const Integer& a = r.get_num();
    const Integer& b = r.get_den();
    return QuadraticIrrational(p_ * b - a * q_, d_ * b * b, q_ * b);
}

int QuadraticIrrational::compare(const Rational& r) const {
    // (P + sqrt(D))/Q vs a/b  <=>  sign(Q)*sign(b): bP + b sqrt(D) vs aQ
    const Integer& a = r.get_num();
    const Integer& b = r.get_den();  // b > 0
    Integer rhs = a * q_ - b * p_;   // compare b*sqrt(D) vs rhs
    int cmp;
    if (rhs < 0) {
        cmp = 1;
    } else {
        Integer lhs2 = b * b * d_;
        Integer rhs2 = rhs * rhs;
        cmp = lhs2 > rhs2 ? 1 : -1;  // equality impossible, D nonsquare
    }
    return q_ > 0 ? cmp : -cmp;
}

std::string QuadraticIrrational::str() const {
    return "(" + p_.get_str() + "+sqrt(" + d_.get_str() + "))/" + q_.get_str();
}

namespace {

// One digit-extraction state of the P,Q recursion: value (P + sqrt(D))/Q.
struct PQState {
    Integer P, Q;
};

}  // namespace

QIExpansion qi_expand(const QuadraticIrrational& x, std::size_t n) {
    QIExpansion out;
    out.a0 = x.floor();
    const Integer& D = x.D();
    Integer P = x.P() - out.a0 * x.Q();
    Integer Q = x.Q();
    std::map<std::pair<std::string, std::string>, std::size_t> seen;
    for (std::size_t k = 0; k < n; ++k) {
        // reciprocal of (P + sqrt(D))/Q, then floor
        P = -P;
        Q = (D - P * P) / Q;
        auto key = std::make_pair(P.get_str(), Q.get_str());
        auto it = seen.find(key);
        if (it != seen.end() && out.period_length == 0) {
            out.period_start = it->second;
            out.period_length = k - it->second;
        }
        seen.emplace(key, k);
        QuadraticIrrational cur(P, D, Q);
        Integer a = cur.floor();
        out.digits.push_back(a);
        P -= a * Q;
    }
    return out;
}

Integer partial_quotient(const QuadraticIrrational& x, std::size_t n) {
    if (n == 0) throw std::out_of_range("partial quotient index must be >= 1");
    const Integer& D = x.D();
    Integer a0 = x.floor();
    Integer P = x.P() - a0 * x.Q();
    Integer Q = x.Q();
    Integer a;
    for (std::size_t k = 0; k < n; ++k) {
        P = -P;
        Q = (D - P * P) / Q;
        a = QuadraticIrrational(P, D, Q).floor();
        P -= a * Q;
    }
    return a;
}

QuadraticIrrational parse_quadratic(const std::string& text) {
    auto bad = [&] { return parse_error("not a quadratic irrational: \"" + text + "\""); };
    auto sq = text.find("sqrt(");
    if (sq == std::string::npos) throw bad();
    auto close = text.find(')', sq);
    if (close == std::string::npos) throw bad();
    try {
        Integer D(text.substr(sq + 5, close - sq - 5));
        if (sq == 0) {
            if (close + 1 != text.size()) throw bad();
            return QuadraticIrrational(0, D, 1);  // "sqrt(D)"
        }
        // "(P+sqrt(D))/Q"
        if (text.front() != '(' || sq < 2 || text[sq - 1] != '+') throw bad();
        Integer P(text.substr(1, sq - 2));
        if (close + 2 >= text.size() || text[close + 1] != ')' || text[close + 2] != '/') throw bad();
        Integer Q(text.substr(close + 3));
        return QuadraticIrrational(P, D, Q);
    } catch (const std::invalid_argument&) {
        throw bad();
    }
}

}  // namespace shulga
