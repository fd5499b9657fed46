#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace shulga {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a digit-stream input runs out of refinement budget before a
/// requested digit is determined.
class precision_exhausted : public std::runtime_error {
public:
    explicit precision_exhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed textual input.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

Integer floor_int(const Rational& r);

/// Reduced fraction num/den; den may be negative on input.
Rational make_rational(const Integer& num, const Integer& den);

/// Accepts "p/q" or a bare integer "p".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

Integer isqrt_floor(const Integer& n);
bool is_perfect_square(const Integer& n);

}  // namespace shulga
