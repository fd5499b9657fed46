#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "shulga/cf.hpp"
#include "shulga/quadratic.hpp"

namespace shulga {

/// Bounded-precision input: the represented value is [a0; digits...] - offset,
/// where the digit list pins the base value to a cylinder. `budget` bounds how
/// many base digits a single query may consume. Queries are pure; they never
/// mutate the stream.
struct DigitStream {
    Integer a0;
    std::vector<Integer> digits;  // all >= 1
    std::size_t budget = 0;
    Rational offset = Rational(0);
};

using RealInput = std::variant<Rational, QuadraticIrrational, DigitStream>;

/// The nth canonical digit of the fractional expansion of x (n >= 1).
/// Returns nullopt exactly when x is rational and its canonical expansion is
/// shorter than n. Throws precision_exhausted for streams that cannot pin the
/// digit within budget.
std::optional<Integer> partial_quotient(const RealInput& x, std::size_t n);

/// Exact x - r within the same variant class.
RealInput sub_rational(const RealInput& x, const Rational& r);

/// Sign of x - r. Throws precision_exhausted when a stream enclosure cannot
/// separate x from r.
int compare(const RealInput& x, const Rational& r);

/// Accepts "p/q", "p", "sqrt(D)", "(P+sqrt(D))/Q", or "[a0;a1,...]"
/// (the last becomes a DigitStream whose budget is the digit count).
RealInput parse_real_input(const std::string& text);

std::string format_real_input(const RealInput& x);

}  // namespace shulga
