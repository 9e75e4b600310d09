#pragma once

/**
 * @file hadamard.hpp
 * @brief Exact Hadamard (coefficientwise) product of rational power series.
 *
 * If f has reciprocal poles a_i and g has b_j, the product sequence is a
 * combination of (a_i b_j)^n times polynomials in n. Those are exactly the
 * eigenvalues of companion(f.den) (x) companion(g.den), so the reversed
 * characteristic polynomial of the Kronecker product annihilates the
 * product sequence. The numerator then follows from the first few terms.
 */

#include "seqlab/cfinite.hpp"
#include "seqlab/matrix.hpp"

#include <stdexcept>

namespace seqlab {

/// Raised when a constructed result fails its own verification. This is
/// never expected and indicates a bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct HadamardResult {
    RationalFunction gf;
    /// Number of leading coefficients checked against pointwise products.
    int verified_to = 0;
};

/// Companion matrix of x^d - c_1 x^{d-1} - ... - c_d, for
/// den = 1 - c_1 z - ... - c_d z^d. First row is (c_1, ..., c_d), ones on
/// the subdiagonal. Throws std::invalid_argument if deg den < 1 or den(0) != 1.
RationalMatrix companion(const Polynomial& den);

/// Candidate denominator: reversal of charpoly(companion(a) (x) companion(b)).
Polynomial hadamard_denominator(const Polynomial& den_a, const Polynomial& den_b);

HadamardResult hadamard_product(const RationalFunction& f, const RationalFunction& g);

/// GF of n -> u_{n-i} u_{n-j}, zero at negative indices.
RationalFunction shifted_product_gf(const CFiniteSequence& s, int i, int j);

}  // namespace seqlab
