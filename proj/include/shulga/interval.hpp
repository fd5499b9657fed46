#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "shulga/cf.hpp"
#include "shulga/quadratic.hpp"

namespace shulga {

/// Half-open interval recorded by which endpoint belongs to it.
///
/// Membership is min < x <= max when the included end is the max, and
/// min <= x < max when the included end is the min. This accommodates the
/// parity-dependent endpoint order of continued-fraction cylinders: for odd
/// prefix length the endpoints swap.
struct OrientedInterval {
    Rational included_end;
    Rational excluded_end;

    const Rational& lo() const { return included_end < excluded_end ? included_end : excluded_end; }
    const Rational& hi() const { return included_end < excluded_end ? excluded_end : included_end; }
    bool contains(const Rational& x) const;
    std::string str() const;  // "(lo, hi]" or "[lo, hi)"
};

OrientedInterval shift(const OrientedInterval& i, const Rational& z);

/// Generalized interval with per-endpoint inclusion flags; the closure of the
/// oriented intervals under intersection. Ties between equal endpoints with
/// different flags resolve to the stricter (excluded) flag.
struct Region {
    Rational lo, hi;
    bool lo_in = true, hi_in = true;

    static Region unit();  // [0, 1]
    static Region of(const OrientedInterval& i);

    bool contains(const Rational& x) const;
    bool contains(const QuadraticIrrational& x) const;
    bool contains(const Region& inner) const;
    std::string str() const;
};

std::optional<Region> intersect(const std::optional<Region>& a, const Region& b);

/// Staggered digit state: b digits are >= 2, c digits are >= 1, and
/// |b| is |c| or |c|+1 for the states the decomposition algorithm visits.
struct DigitPrefix {
    std::vector<Integer> b, c;
};

/// Reals whose fractional expansion starts with the given digits:
/// [ [0;a1..an], [0;a1..an+1] ) under the endpoint convention above.
OrientedInterval cylinder(const std::vector<Integer>& digits);

/// B_k = [ [0;b1..bk-1], [0;b1..bk] ) + [0;c1..c_{k-1}]
OrientedInterval b_interval(const DigitPrefix& prefix, std::size_t k);
/// C_k = [ [0;c1..ck], [0;c1..ck+1] ) + [0;b1..bk]
OrientedInterval c_interval(const DigitPrefix& prefix, std::size_t k);

/// A_n = intersection over k=1..n of B_k and C_k; absent when empty.
/// Requires |b| >= n and |c| >= n.
std::optional<Region> feasible_region(const DigitPrefix& prefix, std::size_t n);

/// Region of the staggered state: all B_k/C_k pairs plus the trailing B when
/// |b| = |c|+1.
std::optional<Region> staggered_region(const DigitPrefix& prefix);

// Exact nonemptiness criteria, as pure integer cross-multiplications over the
// convergent denominators q (of b) and t (of c), with the seeds t_0 = q_0 = 1.
bool criterion_BnCn(const DigitPrefix& prefix);    // B_n cap C_n,      n >= 1
bool criterion_CnCn1(const DigitPrefix& prefix);   // C_n cap C_{n-1},  n >= 2
bool criterion_BnCn1(const DigitPrefix& prefix);   // B_n cap C_{n-1},  n >= 2

/// RHS of c_n > (1+[0;c_{n-1},..,c_1]) (b_n - 1 + [0;b_{n-1},..,b_1]),
/// valid under B_n cap C_n cap C_{n-1} != empty.
Rational lower_bound_c(const DigitPrefix& prefix, std::size_t n);

/// RHS of b_n > (1 + 1/c_n) (c_{n-1}+1+[0;c_{n-2},..,c_1]) (1-[0;b_{n-1},..,b_1]) - 1,
/// valid under B_{n-1} cap C_n cap C_{n-1} != empty.
Rational lower_bound_b(const DigitPrefix& prefix, std::size_t n);

/// True iff C_n is covered by the B_{n+1}(b) tiles plus the shared endpoint,
/// and every B_{n+1}(b) meeting C_n is covered by its C_{n+1}(b,c) tiles.
bool partition_check(const DigitPrefix& prefix, std::size_t n);

}  // namespace shulga
