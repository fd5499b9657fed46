#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shulga/engine.hpp"

namespace shulga {

struct CheckFlag {
    bool ok = true;
    std::string witness;  // violating index and exact values when !ok

    void fail(std::string w) {
        if (ok) {
            ok = false;
            witness = std::move(w);
        }
    }
};

/// Per-run verdicts for every computer-checkable consequence of the theorems.
/// Failures are data, not errors; each false flag carries its first witness.
struct AuditReport {
    CheckFlag sum_exact;                  // beta + gamma = alpha on termination
    CheckFlag digit_consistency;          // b_k = a_k(alpha-[0;c_1..c_n]), c_k likewise
    CheckFlag strict_c_gt_b;              // c_n > b_n for n >= 2
    CheckFlag c1_ge_b1;                   // c_1 >= b_1
    CheckFlag b_monotone;                 // b_{n+1} >= b_n
    CheckFlag b_skip_growth;              // b_{n+2} >= b_n + 1
    CheckFlag b_linear;                   // b_n >= n
    CheckFlag ratio_strictly_increasing;  // t_n q_{n-1} > t_{n-1} q_n, n >= 1
    CheckFlag ratio_le_q;                 // t_n <= q*q_n for alpha = p/q
    CheckFlag partition_ok;               // partition_check at every state
    CheckFlag region_membership;          // alpha in A_n at every state
    CheckFlag b_ratio_bound;              // b_{n+1} q_n^2 > t_n^2 - q_n^2
    CheckFlag conditional_c_growth;       // b_n>=8 and b_{n+1}<c_n imply 2c_{n+1}>3b_n

    bool all_ok() const;
    std::vector<std::pair<std::string, const CheckFlag*>> entries() const;
};

/// Exact audit of a finished run. `result` must come from decompose(alpha).
/// Region membership is checked for rational and quadratic inputs and skipped
/// for streams (their enclosure cannot witness membership exactly).
AuditReport audit(const RealInput& alpha, const DecompositionResult& result);

/// Independent re-implementation of the decomposition: plain fraction
/// arithmetic and a floor/reciprocal digit loop, no interval calculus and no
/// convergent tables. Used as the cross-check oracle.
DecompositionResult oracle_decompose(const Rational& alpha, std::size_t max_steps = 0);

struct ScanRecord {
    Integer p, q;
    std::size_t steps = 0;
    bool terminated = false;
    Integer max_b, max_c;
    bool c_monotone = true;
    std::vector<std::size_t> c_drop_indices;  // 1-based l with c_l < c_1
    Rational ratio_final;                     // t_n/q_n at the last step
    double length_vs_log2q = 0.0;             // presentation only
};

struct TrendRow {
    unsigned long q_band;
    std::size_t max_steps;
    double two_log2_q;
};

struct ScanSummary {
    unsigned long q_max = 0;
    std::size_t fractions = 0;
    std::size_t max_steps = 0;
    Integer argmax_p, argmax_q;
    std::size_t c_monotone_violations = 0;
    std::vector<TrendRow> trend;  // max steps per dyadic q band vs 2*log2(q)
};

/// Raised when a scan hits a failing audit or a step cap; carries the witness.
class audit_failure : public std::runtime_error {
public:
    explicit audit_failure(const std::string& what) : std::runtime_error(what) {}
};

struct ScanOptions {
    unsigned jobs = 1;
    // Called for every record in deterministic order (increasing q, then p).
    std::function<void(const ScanRecord&)> sink;
};

/// Decompose and audit every reduced p/q in [0,1] with q <= q_max.
/// Aborts with audit_failure on the first failing fraction.
ScanSummary scan(unsigned long q_max, const ScanOptions& options = {});

std::string scan_csv_header();
std::string scan_csv_row(const ScanRecord& r);

/// All staggered prefixes (b_1..b_depth, c_1..c_{depth-1}) with nonempty
/// region and every b digit <= b_cap. Exhaustive: b digits are nondecreasing
/// by the monotonicity theorem, and c digits are bounded above through the
/// B_{k+1} cap C_k criterion with q_{k+1} maximized at b_cap, below by the
/// exact lower-bound lemma.
std::vector<DigitPrefix> enumerate_prefixes(std::size_t depth, const Integer& b_cap);

/// First fraction in scan order whose decomposition has c_l < c_1, if any.
std::optional<Rational> find_c_drop(std::size_t l, unsigned long q_max);

}  // namespace shulga
