#include "shulga/engine.hpp"

namespace shulga {

const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::Terminated: return "terminated";
        case StopReason::StepCapReached: return "step_cap_reached";
        case StopReason::PrecisionExhausted: return "precision_exhausted";
    }
    return "?";
}

ShulgaState init(RealInput alpha) {
    ShulgaState s;
    if (const auto* stream = std::get_if<DigitStream>(&alpha)) {
        if (stream->a0 != 0 || stream->digits.empty() || stream->offset != 0)
            throw std::domain_error("stream input must be [0;d1,...] with at least one digit");
        s.alpha = std::move(alpha);
        return s;  // value lies in (0,1); never equal to 0
    }
    if (compare(alpha, Rational(0)) < 0 || compare(alpha, Rational(1)) > 0)
        throw std::domain_error("input outside [0,1]");
    if (compare(alpha, Rational(0)) == 0) s.status = RunStatus::Terminated;
    s.alpha = std::move(alpha);
    return s;
}

ShulgaState step(const ShulgaState& state) {
    if (state.status != RunStatus::Ongoing) throw std::logic_error("step on a terminated state");
    ShulgaState s = state;
    auto bd = partial_quotient(sub_rational(s.alpha, s.gamma_table.value()), s.n + 1);
    if (!bd) throw std::logic_error("internal invariant violation: b digit undefined");
    s.b.push_back(*bd + 1);
    s.beta_table.extend(s.b.back());
    auto cd = partial_quotient(sub_rational(s.alpha, s.beta_table.value()), s.n + 1);
    if (!cd) throw std::logic_error("internal invariant violation: c digit undefined");
    s.c.push_back(*cd);
    s.gamma_table.extend(s.c.back());
    s.n += 1;
    // Termination test for the next round. Exact for rationals; a quadratic
    // irrational never equals a rational sum, and for streams equality is
    // undecidable, so both stay Ongoing.
    if (const auto* r = std::get_if<Rational>(&s.alpha)) {
        if (*r == s.beta_table.value() + s.gamma_table.value()) s.status = RunStatus::Terminated;
    }
    return s;
}

std::size_t default_step_cap(const RealInput& alpha) {
    if (const auto* r = std::get_if<Rational>(&alpha)) {
        std::size_t bits = mpz_sizeinbase(r->get_den().get_mpz_t(), 2);
        return 10 * bits + 64;
    }
    return 64;
}

DecompositionResult decompose(const RealInput& alpha, std::size_t max_steps) {
    std::size_t cap = max_steps ? max_steps : default_step_cap(alpha);
    ShulgaState s = init(alpha);
    DecompositionResult out;
    out.alpha = s.alpha;
    try {
        while (s.status == RunStatus::Ongoing && s.n < cap) s = step(s);
        out.stop_reason =
            s.status == RunStatus::Terminated ? StopReason::Terminated : StopReason::StepCapReached;
    } catch (const precision_exhausted&) {
        out.stop_reason = StopReason::PrecisionExhausted;
    }
    out.b = s.b;
    out.c = s.c;
    out.steps = s.n;
    out.terminated = s.status == RunStatus::Terminated;
    if (out.terminated) {
        out.beta = s.beta_table.value();
        out.gamma = s.gamma_table.value();
    }
    return out;
}

std::pair<Integer, DecompositionResult> decompose_real(const RealInput& alpha,
                                                       std::size_t max_steps) {
    Integer m;
    RealInput frac = alpha;
    if (const auto* r = std::get_if<Rational>(&alpha)) {
        m = floor_int(*r);
        frac = Rational(*r - Rational(m));
    } else if (const auto* x = std::get_if<QuadraticIrrational>(&alpha)) {
        m = x->floor();
        frac = x->minus(Rational(m));
    } else {
        const auto& stream = std::get<DigitStream>(alpha);
        if (stream.offset != 0) throw std::domain_error("stream input must have no offset");
        m = stream.a0;
        DigitStream f = stream;
        f.a0 = 0;
        frac = f;
    }
    return {m, decompose(frac, max_steps)};
}

}  // namespace shulga
