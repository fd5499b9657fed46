#pragma once

#include <optional>
#include <utility>

#include "shulga/interval.hpp"
#include "shulga/real_input.hpp"

namespace shulga {

enum class RunStatus { Ongoing, Terminated };
enum class StopReason { Terminated, StepCapReached, PrecisionExhausted };

const char* to_string(StopReason r);

/// Running state of the staggered decomposition. Immutable: step() returns a
/// new state. After init/step the status answers the termination test for the
/// next round, i.e. Terminated means alpha equals the sum of the two prefix
/// values exactly.
struct ShulgaState {
    RealInput alpha;
    std::size_t n = 0;
    std::vector<Integer> b, c;
    ConvergentTable beta_table;   // p_n / q_n over the b digits
    ConvergentTable gamma_table;  // s_n / t_n over the c digits
    RunStatus status = RunStatus::Ongoing;

    DigitPrefix prefix() const { return {b, c}; }
};

/// Requires alpha in [0,1] (endpoints included); throws std::domain_error
/// otherwise. Terminates immediately iff alpha = 0.
ShulgaState init(RealInput alpha);

/// One round: append b_{n+1} = a_{n+1}(alpha - [0;c_1..c_n]) + 1 and
/// c_{n+1} = a_{n+1}(alpha - [0;b_1..b_{n+1}]), then re-evaluate the
/// termination test. Requires status Ongoing. Throws std::logic_error if a
/// needed digit is undefined while ongoing (an internal invariant violation),
/// precision_exhausted for streams.
ShulgaState step(const ShulgaState& state);

struct DecompositionResult {
    RealInput alpha;
    std::vector<Integer> b, c;
    bool terminated = false;
    std::size_t steps = 0;
    std::optional<Rational> beta, gamma;  // present iff terminated
    StopReason stop_reason = StopReason::StepCapReached;
};

/// Step cap used when the caller passes 0: for rational p/q it is
/// 10*ceil(log2 q) + 64 (the observed lengths stay far below this; the hard
/// theoretical bound q^2 is available via an explicit max_steps), and 64 for
/// irrational inputs.
std::size_t default_step_cap(const RealInput& alpha);

/// Iterate step() until termination or the cap. For rational alpha the
/// algorithm provably terminates, so StepCapReached on a rational is an
/// anomaly the caller should report.
DecompositionResult decompose(const RealInput& alpha, std::size_t max_steps = 0);

/// Extension to all of R via the integer-part split alpha = m + alpha',
/// alpha' in [0,1). Returns m and the decomposition of alpha'; the reported
/// beta is m + beta'.
std::pair<Integer, DecompositionResult> decompose_real(const RealInput& alpha,
                                                       std::size_t max_steps = 0);

}  // namespace shulga
