#pragma once

#include "seqlab/polynomial.hpp"

#include <vector>

namespace seqlab {

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    /// Zero matrix. Throws std::invalid_argument on a zero dimension.
    RationalMatrix(int rows, int cols);
    RationalMatrix(int rows, int cols, std::vector<BigRational> entries);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const std::vector<BigRational>& entries() const { return entries_; }

    BigRational& operator()(int r, int c) { return entries_[index(r, c)]; }
    const BigRational& operator()(int r, int c) const { return entries_[index(r, c)]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
    }

    int rows_;
    int cols_;
    std::vector<BigRational> entries_;
};

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);

/// det(xI - m), monic of degree = dimension. Faddeev-LeVerrier recursion:
///   M_1 = I, c_{n-1} = -tr(A M_1),
///   M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
/// Zero entries of A are skipped in the products, which matters for the
/// sparse Kronecker-of-companion matrices fed in by the Hadamard product.
/// Throws std::invalid_argument for non-square input.
Polynomial charpoly(const RationalMatrix& m);

}  // namespace seqlab
