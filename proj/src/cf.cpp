#include "shulga/cf.hpp"

#include <sstream>

namespace shulga {

CFExpansion cf_expand(const Rational& r) {
    if (r == 1) return CFExpansion{Integer(0), {Integer(1)}};
    CFExpansion e;
    e.a0 = floor_int(r);
    // Euclid on the fractional part. The quotient sequence is canonical by
    // itself: remainders strictly decrease, so the last quotient is >= 2
    // whenever the expansion has length >= 2.
    Rational x = r - Rational(e.a0);
    Integer num = x.get_num(), den = x.get_den();
    while (num != 0) {
        Integer quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), den.get_mpz_t(), num.get_mpz_t());
        e.digits.push_back(quot);
        den = num;
        num = rem;
    }
    return e;
}

Rational cf_value(const CFExpansion& e, std::optional<std::size_t> up_to) {
    std::size_t n = up_to.value_or(e.digits.size());
    if (n > e.digits.size()) throw std::out_of_range("digit unavailable");
    Rational v(0);
    for (std::size_t i = n; i-- > 0;) v = make_rational(Integer(1), 1) / (Rational(e.digits[i]) + v);
    return Rational(e.a0) + v;
}

Rational cf_value(const std::vector<Integer>& digits) {
    return cf_value(CFExpansion{Integer(0), digits});
}

Rational cf_value_reversed(const std::vector<Integer>& digits, std::size_t count) {
    if (count > digits.size()) throw std::out_of_range("digit unavailable");
    Rational v(0);
    for (std::size_t i = 0; i < count; ++i) v = make_rational(Integer(1), 1) / (Rational(digits[i]) + v);
    return v;
}

std::string format_expansion(const CFExpansion& e) {
    std::ostringstream os;
    os << "[" << e.a0.get_str() << ";";
    for (std::size_t i = 0; i < e.digits.size(); ++i) {
        if (i) os << ",";
        os << e.digits[i].get_str();
    }
    os << "]";
    return os.str();
}

CFExpansion parse_expansion(const std::string& text) {
    if (text.size() < 3 || text.front() != '[' || text.back() != ']')
        throw parse_error("not an expansion: \"" + text + "\"");
    auto semi = text.find(';');
    if (semi == std::string::npos) throw parse_error("expansion lacks ';': \"" + text + "\"");
    CFExpansion e;
    try {
        e.a0 = Integer(text.substr(1, semi - 1));
        std::string rest = text.substr(semi + 1, text.size() - semi - 2);
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) continue;
            Integer d(tok);
            if (d < 1) throw parse_error("expansion digit < 1: \"" + text + "\"");
            e.digits.push_back(d);
        }
    } catch (const std::invalid_argument&) {
        throw parse_error("not an expansion: \"" + text + "\"");
    }
    return e;
}

ConvergentTable::ConvergentTable(Integer a0) {
    p_.push_back(std::move(a0));
    q_.push_back(Integer(1));
}

void ConvergentTable::extend(const Integer& digit) {
    std::size_t n = p_.size();
    Integer pm2 = n >= 2 ? p_[n - 2] : Integer(1);
    Integer qm2 = n >= 2 ? q_[n - 2] : Integer(0);
    p_.push_back(digit * p_[n - 1] + pm2);
    q_.push_back(digit * q_[n - 1] + qm2);
}

void ConvergentTable::shrink(std::size_t rows) {
    p_.resize(rows + 1);
    q_.resize(rows + 1);
}

ConvergentTable convergents(const CFExpansion& e, std::size_t n) {
    if (n > e.digits.size()) throw std::out_of_range("digit unavailable");
    ConvergentTable t(e.a0);
    for (std::size_t i = 0; i < n; ++i) t.extend(e.digits[i]);
    return t;
}

ConvergentTable convergents(const std::vector<Integer>& digits) {
    ConvergentTable t;
    for (const auto& d : digits) t.extend(d);
    return t;
}

}  // namespace shulga
