#pragma once

/**
 * @file binet.hpp
 * @brief Roots of 1 - 2z + z^{h+1} via generalized binomial series, and the
 *        resulting Binet-type closed forms for k-bonacci numbers.
 *
 * The generalized binomial series is
 *
 *   B_t(x)^r = sum_{n>=0} binom(tn + r, n) * r / (tn + r) * x^n,
 *
 * with B_t = 1 + x B_t^t. For u = 1/2 and zeta = exp(2 pi i / h) the roots
 * of 1 - z/u + z^{h+1} are
 *
 *   r_h = u B_{h+1}(u^{h+1}),
 *   r_j = zeta^{-j} u^{-1/h} B_{(h+1)/h}(zeta^j u^{(h+1)/h})^{-1/h},  0 <= j < h.
 *
 * All fractional powers use the principal branch.
 */

#include "seqlab/bigrational.hpp"
#include "seqlab/cfinite.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace seqlab {

using ComplexValue = std::complex<double>;

/// Series evaluation or linear-solve failure.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenBinomialParams {
    BigRational t;
    BigRational r;
    ComplexValue x;
};

/// (t-1)^{t-1} / t^t; the series converges for |x| below this. Requires t >= 1.
double gen_binom_radius(const BigRational& t);

/// Exact coefficient binom(tn + r, n) r / (tn + r), taken in the limit form
/// r (tn+r-1)(tn+r-2)...(tn+r-n+1) / n!, which is also defined where tn + r = 0.
BigRational gen_binom_coefficient(const BigRational& t, const BigRational& r, int n);

/// Sums the series until |term| < 1e-18 |sum|. Throws NumericError if x is
/// outside the radius of convergence, t < 1, or 1e5 terms are not enough.
ComplexValue gen_binom_series(const GenBinomialParams& p);

/// [r_0, ..., r_{h-1}, r_h] as described above. Requires 2 <= h <= 12.
std::vector<ComplexValue> roots(int h);

/// Closed under conjugation, up to tol.
bool conjugate_root_pairing(const std::vector<ComplexValue>& roots, double tol = 1e-9);

struct BinetData {
    int order = 0;
    std::vector<ComplexValue> roots;
    std::vector<ComplexValue> coefficients;
    double tolerance = 1e-10;
};

/// Solves u_n = sum_i c_i roots_i^{-n}, n = 0..h, by Gaussian elimination with
/// partial pivoting. Coefficients of conjugate roots are made exact
/// conjugates, and real roots get real coefficients. Throws NumericError on
/// a pivot below 1e-12.
BinetData binet_coefficients(int h, const CFiniteSequence& seq);

/// sum_i c_i roots_i^{-n}. Throws NumericError if |Im| >= 1e-6.
ComplexValue binet_eval(const BinetData& d, long n);

/// [z^n] 1/(1 - 2z + z^{h+1}) = -sum_i r_i^{-(n+1)} prod_{j != i} (r_i - r_j)^{-1}.
/// Throws NumericError when two roots coincide within 1e-9.
ComplexValue resolvent_coefficient(int h, long n);

/// |B_t(x) - 1 - x B_t(x)^t|.
double functional_equation_check(const BigRational& t, ComplexValue x);

/// Coefficients, in powers of X = u^{(h+1)/h}, of
///   1 - sum_n c_n(-1/h) X^{n-1} + sum_n c_n(-(h+1)/h) X^{n-1}
/// where c_n(r) = gen_binom_coefficient((h+1)/h, r, n): the result of
/// substituting the j = 0 root into 1 - z/u + z^{h+1}, scaled by u^{(h+1)/h}.
/// Entry k is the coefficient of X^{k-1}; all entries vanish exactly.
std::vector<BigRational> root_substitution_residual(int h, int terms);

}  // namespace seqlab
