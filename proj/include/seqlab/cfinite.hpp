#pragma once

/**
 * @file cfinite.hpp
 * @brief C-finite sequences: linear recurrence + initial values, and the
 *        equivalent rational generating function.
 *
 * Module-wide convention: terms at negative indices are zero.
 */

#include "seqlab/rational_function.hpp"

#include <vector>

namespace seqlab {

/// u_{n+h} = sum_{i=1..h} c_i u_{n+h-i}, with u_0 .. u_{h-1} given.
class CFiniteSequence {
public:
    /// Throws std::invalid_argument if the lengths differ, are zero, or c_h = 0.
    CFiniteSequence(std::vector<BigRational> recurrence, std::vector<BigRational> initial);

    int order() const { return static_cast<int>(recurrence_.size()); }
    const std::vector<BigRational>& recurrence() const { return recurrence_; }
    const std::vector<BigRational>& initial() const { return initial_; }

    /// u_0 .. u_{count-1}
    std::vector<BigRational> terms(int count) const;

    friend bool operator==(const CFiniteSequence&, const CFiniteSequence&) = default;

private:
    std::vector<BigRational> recurrence_;
    std::vector<BigRational> initial_;
};

/// Generalized Fibonacci numbers of order h with GF z/(1 - z - ... - z^h).
/// Throws std::invalid_argument("order must be >= 2") for h < 2.
CFiniteSequence kbonacci(int h);

/// N(z)/(1 - c_1 z - ... - c_h z^h), reduced.
RationalFunction to_gf(const CFiniteSequence& s);

/// Inverse of to_gf. Throws std::invalid_argument for improper f or a
/// constant denominator.
CFiniteSequence from_gf(const RationalFunction& f);

/// u_n, zero for n < 0.
BigRational term(const CFiniteSequence& s, long n);

/// k >= 0: z^k f, the GF of a_{n-k}. k < 0: the GF of a_{n+|k|}.
RationalFunction shift_gf(const RationalFunction& f, int k);

/// f / (1 - z): coefficient n becomes sum_{k<=n} a_k.
RationalFunction partial_sum(const RationalFunction& f);

}  // namespace seqlab
