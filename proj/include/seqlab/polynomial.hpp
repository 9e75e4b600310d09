#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over Q.
 *
 * coeffs()[i] is the coefficient of z^i. The highest stored coefficient is
 * always nonzero; the zero polynomial has no coefficients and degree -1.
 */

#include "seqlab/bigrational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace seqlab {

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigRational> coeffs);
    Polynomial(std::initializer_list<BigRational> coeffs);

    static Polynomial constant(const BigRational& c);
    /// c * z^k
    static Polynomial monomial(const BigRational& c, int k);

    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == BigRational(1); }

    /// Coefficient of z^i, zero outside the stored range.
    BigRational operator[](int i) const;
    const BigRational& leading() const { return coeffs_.back(); }

    BigRational eval(const BigRational& z) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    /// z^n p(1/z) for n >= degree.
    Polynomial reversed(int n) const;
    /// Coefficients of z^0 .. z^{n-1}.
    Polynomial truncated(int n) const;
    /// p(z) / z^k; the dropped low coefficients must be zero.
    Polynomial divided_by_z_power(int k) const;
    /// z^k p(z)
    Polynomial times_z_power(int k) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const BigRational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const BigRational& c) { return a *= c; }
    friend Polynomial operator*(const BigRational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human readable, parseable by the GF expression grammar, e.g. "1 - 2*z + z^5".
    std::string to_string() const;

private:
    void trim();

    std::vector<BigRational> coeffs_;
};

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};

/// p = quotient * q + remainder with deg remainder < deg q.
/// Throws std::domain_error when q is zero.
DivRem poly_divrem(const Polynomial& p, const Polynomial& q);

/// Monic gcd by the Euclidean algorithm over Q. Throws std::domain_error
/// when both inputs are zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

/// Builds a polynomial from small integer coefficients (ascending powers).
Polynomial poly_from_ints(std::initializer_list<long> coeffs);

}  // namespace seqlab
