#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shulga/numeric.hpp"

namespace shulga {

/// Canonical continued fraction expansion [a0; a1, a2, ...].
///
/// Canonical means: every digit is >= 1, and a finite expansion of length >= 2
/// ends with a digit >= 2. The single exception is the designated expansion
/// 1 = [0;1], a library-wide convention that makes a_1(1) = 1 and the
/// decomposition algorithm total on [0,1].
struct CFExpansion {
    Integer a0;
    std::vector<Integer> digits;

    bool operator==(const CFExpansion&) const = default;
};

CFExpansion cf_expand(const Rational& r);

/// Exact value of the (optionally truncated) expansion. Throws
/// std::out_of_range("digit unavailable") when up_to exceeds the digits.
Rational cf_value(const CFExpansion& e, std::optional<std::size_t> up_to = std::nullopt);

/// Value of [0; digits...]. Empty digits give 0.
Rational cf_value(const std::vector<Integer>& digits);

/// Value of [0; d_count, d_{count-1}, ..., d_1] for the first count entries.
Rational cf_value_reversed(const std::vector<Integer>& digits, std::size_t count);

std::string format_expansion(const CFExpansion& e);
CFExpansion parse_expansion(const std::string& text);

/// Convergent rows p_n/q_n of a digit sequence, with the seeds
/// p_{-1}=1, q_{-1}=0, p_0=a0, q_0=1, and the three-term recurrence
/// p_n = a_n p_{n-1} + p_{n-2}, q_n = a_n q_{n-1} + q_{n-2}.
class ConvergentTable {
public:
    explicit ConvergentTable(Integer a0 = Integer(0));

    void extend(const Integer& digit);
    void shrink(std::size_t rows);  // drop rows beyond `rows` digits

    std::size_t rows() const { return p_.size() - 1; }  // digits consumed
    const Integer& p(std::size_t n) const { return p_.at(n); }
    const Integer& q(std::size_t n) const { return q_.at(n); }
    Rational value(std::size_t n) const { return make_rational(p_.at(n), q_.at(n)); }
    Rational value() const { return value(rows()); }

private:
    std::vector<Integer> p_, q_;
};

/// Table for rows 0..n of e. Throws std::out_of_range("digit unavailable")
/// when n exceeds the available digits.
ConvergentTable convergents(const CFExpansion& e, std::size_t n);

ConvergentTable convergents(const std::vector<Integer>& digits);

}  // namespace shulga
