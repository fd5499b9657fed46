#pragma once

#include <cstddef>
#include <vector>

#include "shulga/numeric.hpp"

namespace shulga {

/// Exact quadratic surd (P + sqrt(D)) / Q with D a positive nonsquare.
///
/// The normalization Q | D - P^2 is maintained so that digit extraction
/// stays in integer arithmetic.
class QuadraticIrrational {
public:
    QuadraticIrrational(Integer P, Integer D, Integer Q);

    const Integer& P() const { return p_; }
    const Integer& D() const { return d_; }
    const Integer& Q() const { return q_; }

    Integer floor() const;
    QuadraticIrrational minus(const Rational& r) const;

    /// Sign of *this - r.
    int compare(const Rational& r) const;

    std::string str() const;  // "(P+sqrt(D))/Q"

private:
    Integer p_, d_, q_;
    void normalize();
};

struct QIExpansion {
    Integer a0;
    std::vector<Integer> digits;
    // Preperiod/period of the digit sequence (0-based index into digits);
    // period_length == 0 means the period was not detected within n digits.
    std::size_t period_start = 0;
    std::size_t period_length = 0;
};

/// First n fractional digits of x plus the detected period of the tail.
QIExpansion qi_expand(const QuadraticIrrational& x, std::size_t n);

/// The nth fractional digit a_n(x), n >= 1. Always defined.
Integer partial_quotient(const QuadraticIrrational& x, std::size_t n);

/// Accepts "sqrt(D)" or "(P+sqrt(D))/Q" (also "(P-sqrt(D))/Q" is rejected;
/// negate via P and Q instead).
QuadraticIrrational parse_quadratic(const std::string& text);

}  // namespace shulga
