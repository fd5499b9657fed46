#include "shulga/construction.hpp"

#include <sstream>

namespace shulga {

namespace {

ConstructionState seed() {
    ConstructionState s;
    s.b.push_back(2);
    s.c.push_back(4);
    s.beta_table.extend(2);
    s.gamma_table.extend(4);
    return s;
}

DigitPrefix take(const ConstructionState& state, std::size_t n) {
    return {{state.b.begin(), state.b.begin() + n}, {state.c.begin(), state.c.begin() + n}};
}

}  // namespace

void extend(ConstructionState& state) {
    std::size_t n = state.size();
    Integer bb = state.c.back() + 2;
    state.b.push_back(bb);
    state.beta_table.extend(bb);
    const Integer& q = state.beta_table.q(n + 1);
    const Integer& tn = state.gamma_table.q(n);
    const Integer& tn1 = state.gamma_table.q(n - 1);

    ConstructionState::Selection sel;
    sel.c_low = bb + 2;
    sel.c_high = bb + 3;
    sel.t_low = sel.c_low * tn + tn1;
    sel.t_high = sel.c_high * tn + tn1;
    Integer margin_low = sel.c_low * q * q - sel.t_low * sel.t_low;
    sel.taken = (margin_low > 0 && margin_low < q * q) ? 2 : 3;

    Integer cc = sel.taken == 2 ? sel.c_low : sel.c_high;
    state.c.push_back(cc);
    state.gamma_table.extend(cc);
    state.selections.push_back(sel);
}

ConstructionState construct(std::size_t n_terms) {
    if (n_terms < 1) throw std::domain_error("construct needs n_terms >= 1");
    ConstructionState s = seed();
    while (s.size() < n_terms) extend(s);
    return s;
}

CheckFlag verify_window(const ConstructionState& state) {
    CheckFlag flag;
    for (std::size_t n = 2; n <= state.size(); ++n) {
        const Integer& q = state.beta_table.q(n);
        const Integer& t = state.gamma_table.q(n);
        Integer margin = state.c[n - 1] * q * q - t * t;
        if (!(margin > 0 && margin < q * q)) {
            flag.fail("n=" + std::to_string(n) + ": c_n q_n^2 - t_n^2 = " + margin.get_str() +
                      ", q_n^2 = " + Integer(q * q).get_str());
        }
    }
    return flag;
}

CheckFlag verify_nesting(const ConstructionState& state) {
    CheckFlag flag;
    DigitPrefix prefix = state.prefix();
    std::optional<Region> previous;
    for (std::size_t n = 1; n <= state.size(); ++n) {
        auto region = feasible_region(prefix, n);
        if (!region) {
            flag.fail("n=" + std::to_string(n) + ": A_n is empty");
            return flag;
        }
        if (previous && !previous->contains(*region)) {
            flag.fail("n=" + std::to_string(n) + ": A_n not inside A_{n-1}");
            return flag;
        }
        previous = region;

        DigitPrefix head = take(state, n);
        bool geom_bncn =
            intersect(Region::of(b_interval(prefix, n)), Region::of(c_interval(prefix, n)))
                .has_value();
        if (criterion_BnCn(head) != geom_bncn) {
            flag.fail("n=" + std::to_string(n) + ": B_n cap C_n criterion disagrees with geometry");
            return flag;
        }
        if (!geom_bncn) {
            flag.fail("n=" + std::to_string(n) + ": B_n cap C_n empty");
            return flag;
        }
        if (n >= 2) {
            bool geom_cncn1 =
                intersect(Region::of(c_interval(prefix, n)), Region::of(c_interval(prefix, n - 1)))
                    .has_value();
            bool geom_bncn1 =
                intersect(Region::of(b_interval(prefix, n)), Region::of(c_interval(prefix, n - 1)))
                    .has_value();
            if (criterion_CnCn1(head) != geom_cncn1 || criterion_BnCn1(head) != geom_bncn1) {
                flag.fail("n=" + std::to_string(n) + ": consecutive-level criterion disagrees");
                return flag;
            }
            if (!geom_cncn1 || !geom_bncn1) {
                flag.fail("n=" + std::to_string(n) + ": consecutive levels do not meet");
                return flag;
            }
        }
    }
    return flag;
}

CheckFlag verify_growth_bounds(const ConstructionState& state) {
    CheckFlag flag;
    for (std::size_t n = 1; n <= state.size(); ++n) {
        Integer nn(static_cast<unsigned long>(n));
        const Integer& bn = state.b[n - 1];
        const Integer& cn = state.c[n - 1];
        if (!(4 * nn - 2 <= bn && bn < cn && cn < 5 * nn)) {
            flag.fail("n=" + std::to_string(n) + ": b_n = " + bn.get_str() +
                      ", c_n = " + cn.get_str());
            return flag;
        }
    }
    return flag;
}

Rational witness_point(const ConstructionState& state) {
    auto region = feasible_region(state.prefix(), state.size());
    if (!region) throw std::logic_error("witness_point: empty region");
    Rational mid = (region->lo + region->hi) / 2;
    if (!region->contains(mid)) throw std::logic_error("witness_point: midpoint outside region");
    return mid;
}

std::pair<DigitStream, DigitStream> as_real_inputs(const ConstructionState& state) {
    DigitStream beta{0, state.b, state.size(), 0};
    DigitStream gamma{0, state.c, state.size(), 0};
    return {beta, gamma};
}

std::string construction_csv_header() {
    return "n,b,c,taken,window_margin,q_sq,b_slack,c_slack";
}

std::string construction_csv_row(const ConstructionState& state, std::size_t n) {
    if (n < 1 || n > state.size()) throw std::out_of_range("construction row index");
    const Integer& q = state.beta_table.q(n);
    const Integer& t = state.gamma_table.q(n);
    Integer margin = state.c[n - 1] * q * q - t * t;
    Integer nn(static_cast<unsigned long>(n));
    std::ostringstream os;
    os << n << ',' << state.b[n - 1].get_str() << ',' << state.c[n - 1].get_str() << ','
       << (n == 1 ? 0 : state.selections[n - 2].taken) << ',' << margin.get_str() << ','
       << Integer(q * q).get_str() << ',' << Integer(state.b[n - 1] - (4 * nn - 2)).get_str() << ','
       << Integer(5 * nn - state.c[n - 1]).get_str();
    return os.str();
}

}  // namespace shulga
