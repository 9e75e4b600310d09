#pragma once

/**
 * @file rational_function.hpp
 * @brief Rational generating functions P(z)/Q(z) in canonical form.
 *
 * Canonical means gcd(P, Q) = 1 and Q(0) = 1. The form is unique, so
 * structural equality is rational-function equality.
 */

#include "seqlab/polynomial.hpp"

#include <string>
#include <vector>

namespace seqlab {

class RationalFunction {
public:
    /// The zero function 0/1.
    RationalFunction() : den_(Polynomial::constant(1)) {}
    /// A polynomial p/1.
    explicit RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1)) {}

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// deg num < deg den (the zero function counts as proper).
    bool is_proper() const { return num_.degree() < den_.degree(); }

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const BigRational& c, const RationalFunction& f);
    /// Throws std::domain_error if the quotient has no expansion at 0.
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator-() const;

    /// "(num)/(den)" in the GF expression grammar.
    std::string to_string() const;

private:
    friend RationalFunction ratfunc_reduce(const Polynomial& num, const Polynomial& den);

    Polynomial num_;
    Polynomial den_;
};

/// Cancels gcd(num, den) and rescales so den(0) = 1. Throws
/// std::domain_error when den(0) = 0.
RationalFunction ratfunc_reduce(const Polynomial& num, const Polynomial& den);

/// First n power-series coefficients at z = 0, via the recurrence of den.
std::vector<BigRational> series_prefix(const RationalFunction& f, int n);

struct PolynomialSplit {
    Polynomial polynomial_part;
    RationalFunction proper_part;
};

/// f = polynomial_part + proper_part with proper_part proper.
PolynomialSplit split_polynomial_part(const RationalFunction& f);

}  // namespace seqlab
