#include "shulga/real_input.hpp"

namespace shulga {

namespace {

// Cylinder endpoints of the first k known digits of a stream's base value.
std::pair<Rational, Rational> stream_enclosure(const DigitStream& s, std::size_t k) {
    CFExpansion lo{s.a0, std::vector<Integer>(s.digits.begin(), s.digits.begin() + k)};
    CFExpansion hi = lo;
    hi.digits.back() += 1;
    return {cf_value(lo), cf_value(hi)};
}

std::optional<Integer> stream_digit(const DigitStream& s, std::size_t n) {
    std::size_t limit = std::min<std::size_t>(s.digits.size(), s.budget);
    if (s.offset == 0) {
        if (n <= limit) return s.digits[n - 1];
        throw precision_exhausted("digit " + std::to_string(n) + " beyond stream budget");
    }
    for (std::size_t k = 1; k <= limit; ++k) {
        auto [e1, e2] = stream_enclosure(s, k);
        CFExpansion y1 = cf_expand(e1 - s.offset);
        CFExpansion y2 = cf_expand(e2 - s.offset);
        if (y1.a0 != y2.a0) continue;
        if (y1.digits.size() < n || y2.digits.size() < n) continue;
        bool agree = true;
        for (std::size_t i = 0; i < n && agree; ++i) agree = y1.digits[i] == y2.digits[i];
        if (agree) return y1.digits[n - 1];
    }
    throw precision_exhausted("stream budget exhausted before digit " + std::to_string(n) +
                              " was pinned");
}

}  // namespace

std::optional<Integer> partial_quotient(const RealInput& x, std::size_t n) {
    if (n == 0) throw std::out_of_range("partial quotient index must be >= 1");
    return std::visit(
        [n](const auto& v) -> std::optional<Integer> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>) {
                CFExpansion e = cf_expand(v);
                if (n > e.digits.size()) return std::nullopt;
                return e.digits[n - 1];
            } else if constexpr (std::is_same_v<T, QuadraticIrrational>) {
                return partial_quotient(v, n);
            } else {
                return stream_digit(v, n);
            }
        },
        x);
}

RealInput sub_rational(const RealInput& x, const Rational& r) {
    return std::visit(
        [&r](const auto& v) -> RealInput {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return Rational(v - r);
            } else if constexpr (std::is_same_v<T, QuadraticIrrational>) {
                return v.minus(r);
            } else {
                DigitStream out = v;
                out.offset += r;
                return out;
            }
        },
        x);
}

int compare(const RealInput& x, const Rational& r) {
    return std::visit(
        [&r](const auto& v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return v < r ? -1 : (v == r ? 0 : 1);
            } else if constexpr (std::is_same_v<T, QuadraticIrrational>) {
                return v.compare(r);
            } else {
                std::size_t limit = std::min<std::size_t>(v.digits.size(), v.budget);
                Rational target = v.offset + r;
                for (std::size_t k = 1; k <= limit; ++k) {
                    auto [e1, e2] = stream_enclosure(v, k);
                    int s1 = e1 < target ? -1 : (e1 == target ? 0 : 1);
                    int s2 = e2 < target ? -1 : (e2 == target ? 0 : 1);
                    if (s1 == s2 && s1 != 0) return s1;
                }
                throw precision_exhausted("stream budget exhausted in comparison");
            }
        },
        x);
}

RealInput parse_real_input(const std::string& text) {
    if (text.find("sqrt(") != std::string::npos) return parse_quadratic(text);
    if (!text.empty() && text.front() == '[') {
        CFExpansion e = parse_expansion(text);
        return DigitStream{e.a0, e.digits, e.digits.size(), Rational(0)};
    }
    return parse_rational(text);
}

std::string format_real_input(const RealInput& x) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Rational>) {
                return to_string(v);
            } else if constexpr (std::is_same_v<T, QuadraticIrrational>) {
                return v.str();
            } else {
                std::string s = format_expansion(CFExpansion{v.a0, v.digits});
                if (v.offset != 0) s += " - " + to_string(v.offset);
                return s;
            }
        },
        x);
}

}  // namespace shulga
