// Brute-force cross-check for the decomposition engine. Deliberately written
// against raw fractions with a floor/reciprocal digit loop: no CFExpansion,
// no convergent tables, no interval calculus. Keep it that way.

#include "shulga/growth.hpp"

namespace shulga {

namespace {

// Canonical nth fractional digit of x (1-based), with the a_1(1) = 1
// convention; nullopt when the expansion is shorter than n.
std::optional<Integer> gauss_digit(Rational x, std::size_t n) {
    if (x == 1) return n == 1 ? std::optional<Integer>(1) : std::nullopt;
    x -= Rational(floor_int(x));
    for (std::size_t k = 0; k < n; ++k) {
        if (x == 0) return std::nullopt;
        x = Rational(1) / x;
        Integer a = floor_int(x);
        if (k + 1 == n) return a;
        x -= Rational(a);
    }
    return std::nullopt;  // unreachable
}

// Value of [0; d_1, ..., d_k] by the backward recurrence.
Rational tail_value(const std::vector<Integer>& digits) {
    Rational v(0);
    for (std::size_t i = digits.size(); i-- > 0;) v = Rational(1) / (Rational(digits[i]) + v);
    return v;
}

}  // namespace

DecompositionResult oracle_decompose(const Rational& alpha, std::size_t max_steps) {
    if (alpha < 0 || alpha > 1) throw std::domain_error("input outside [0,1]");
    std::size_t cap = max_steps ? max_steps : default_step_cap(RealInput(alpha));
    DecompositionResult out;
    out.alpha = alpha;
    while (out.steps < cap) {
        Rational bv = tail_value(out.b);
        Rational cv = tail_value(out.c);
        if (alpha == bv + cv) {
            out.terminated = true;
            out.stop_reason = StopReason::Terminated;
            out.beta = bv;
            out.gamma = cv;
            return out;
        }
        auto bd = gauss_digit(alpha - cv, out.steps + 1);
        if (!bd) throw std::logic_error("oracle: b digit undefined");
        out.b.push_back(*bd + 1);
        auto cd = gauss_digit(alpha - tail_value(out.b), out.steps + 1);
        if (!cd) throw std::logic_error("oracle: c digit undefined");
        out.c.push_back(*cd);
        out.steps += 1;
    }
    out.stop_reason = StopReason::StepCapReached;
    return out;
}

}  // namespace shulga
