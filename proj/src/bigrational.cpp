#include "seqlab/bigrational.hpp"

#include <stdexcept>

namespace seqlab {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("BigRational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational::BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("not an integer: '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
}

BigRational BigRational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw std::invalid_argument("sign not allowed in denominator: '" + std::string(text) + "'");
    }
    return BigRational(num, parse_bigint(den_text));
}

BigRational BigRational::abs() const {
    return BigRational(mpq_class(::abs(value_)));
}

BigRational BigRational::reciprocal() const {
    if (is_zero()) throw std::domain_error("BigRational: reciprocal of zero");
    return BigRational(mpq_class(1 / value_));
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    value_ /= o.value_;
    return *this;
}

BigRational BigRational::operator-() const {
    return BigRational(mpq_class(-value_));
}

std::string BigRational::to_string() const {
    return value_.get_str(10);
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
    return os << q.to_string();
}

}  // namespace seqlab
