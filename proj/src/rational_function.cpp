#include "seqlab/rational_function.hpp"

#include <stdexcept>

namespace seqlab {

RationalFunction ratfunc_reduce(const Polynomial& num, const Polynomial& den) {
    if (den[0].is_zero()) {
        throw std::domain_error("rational function has den(0) = 0 and no power-series expansion at z = 0");
    }
    RationalFunction f;
    if (num.is_zero()) return f;
    Polynomial g = poly_gcd(num, den);
    Polynomial n = num;
    Polynomial d = den;
    if (g.degree() > 0) {
        n = poly_divrem(num, g).quotient;
        d = poly_divrem(den, g).quotient;
    }
    BigRational scale = d[0].reciprocal();
    f.num_ = n * scale;
    f.den_ = d * scale;
    return f;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return ratfunc_reduce(a.num_ + b.num_, a.den_);
    return ratfunc_reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return ratfunc_reduce(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator*(const BigRational& c, const RationalFunction& f) {
    RationalFunction r = f;
    r.num_ *= c;
    return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return ratfunc_reduce(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RationalFunction::to_string() const {
    if (den_.degree() == 0) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::vector<BigRational> series_prefix(const RationalFunction& f, int n) {
    if (n < 0) throw std::invalid_argument("series_prefix: negative length");
    std::vector<BigRational> a(static_cast<std::size_t>(n));
    const auto& den = f.den().coeffs();
    const int d = f.den().degree();
    // den(0) = 1, so a_k = num_k - sum_{i>=1} den_i a_{k-i}
    for (int k = 0; k < n; ++k) {
        BigRational acc = f.num()[k];
        for (int i = 1; i <= d && i <= k; ++i) {
            const auto& c = den[static_cast<std::size_t>(i)];
            if (!c.is_zero()) acc -= c * a[static_cast<std::size_t>(k - i)];
        }
        a[static_cast<std::size_t>(k)] = std::move(acc);
    }
    return a;
}

PolynomialSplit split_polynomial_part(const RationalFunction& f) {
    if (f.is_proper()) return {Polynomial{}, f};
    DivRem qr = poly_divrem(f.num(), f.den());
    return {qr.quotient, ratfunc_reduce(qr.remainder, f.den())};
}

}  // namespace seqlab
