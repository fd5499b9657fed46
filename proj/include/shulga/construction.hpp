#pragma once

#include "shulga/growth.hpp"

namespace shulga {

/// Deterministic digit-pair sequence with linearly growing digits, built by
/// the seed b_1 = 2, c_1 = 4 and the rule b_{n+1} = c_n + 2 with
/// c_{n+1} chosen from the two candidates b_{n+1} + 2 and b_{n+1} + 3.
///
/// The low candidate is taken exactly when it keeps the window invariant
/// 0 < c_{n+1} - (t_{n+1}/q_{n+1})^2 < 1, tested as integers; otherwise the
/// high candidate is taken unconditionally. verify_window() re-checks the
/// invariant on the digits actually produced and reports every violation it
/// finds instead of assuming the rule enforces it.
struct ConstructionState {
    std::vector<Integer> b, c;
    ConvergentTable beta_table;   // p_n / q_n over b
    ConvergentTable gamma_table;  // s_n / t_n over c

    struct Selection {
        Integer c_low, t_low;    // candidate b_{n+1}+2 and its denominator
        Integer c_high, t_high;  // candidate b_{n+1}+3 and its denominator
        int taken;               // 2 or 3
    };
    std::vector<Selection> selections;  // selections[i] produced c_{i+2}

    std::size_t size() const { return b.size(); }
    DigitPrefix prefix() const { return {b, c}; }
};

/// Seed state plus n_terms - 1 extensions; requires n_terms >= 1.
ConstructionState construct(std::size_t n_terms);

/// Append one digit pair.
void extend(ConstructionState& state);

/// Window invariant 0 < c_n q_n^2 - t_n^2 < q_n^2 for n >= 2 (the selection
/// rule only steers it from the second digit on; at n = 1 the margin is 0 by
/// construction). The witness carries the first failing n with both margins.
CheckFlag verify_window(const ConstructionState& state);

/// The regions A_n are nonempty and nested, checked two ways: geometrically
/// through the interval calculus, and through the integer nonemptiness
/// criteria on truncated prefixes. Both must hold and agree.
CheckFlag verify_nesting(const ConstructionState& state);

/// 4n - 2 <= b_n < c_n < 5n for every n.
CheckFlag verify_growth_bounds(const ConstructionState& state);

/// A rational inside the deepest region A_n; decomposing it must reproduce
/// the digit prefix.
Rational witness_point(const ConstructionState& state);

/// The two digit tails [0;b_1,b_2,...] and [0;c_1,c_2,...] as streams with
/// budget = size().
std::pair<DigitStream, DigitStream> as_real_inputs(const ConstructionState& state);

std::string construction_csv_header();
/// One row per n (1-based): digits, selection, exact window margin against
/// q_n^2, and the slack in both growth bounds.
std::string construction_csv_row(const ConstructionState& state, std::size_t n);

}  // namespace shulga
