#include "seqlab/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace seqlab {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("RationalMatrix: dimensions must be positive");
    entries_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

RationalMatrix::RationalMatrix(int rows, int cols, std::vector<BigRational> entries)
    : RationalMatrix(rows, cols) {
    if (entries.size() != entries_.size()) throw std::invalid_argument("RationalMatrix: entry count != rows * cols");
    entries_ = std::move(entries);
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            const BigRational& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (int p = 0; p < b.rows(); ++p) {
                for (int q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
            }
        }
    }
    return k;
}

namespace {

struct SparseEntry {
    int row;
    int col;
    BigRational value;
};

}  // namespace

Polynomial charpoly(const RationalMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("charpoly: matrix is not square");
    const int n = m.rows();

    std::vector<SparseEntry> nz;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!m(i, j).is_zero()) nz.push_back({i, j, m(i, j)});
        }
    }

    std::vector<BigRational> c(static_cast<std::size_t>(n) + 1);
    c[static_cast<std::size_t>(n)] = 1;

    RationalMatrix mk = RationalMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        // AM = A * M_k; only the trace is needed after the last step
        RationalMatrix am(n, n);
        for (const auto& e : nz) {
            for (int j = 0; j < n; ++j) {
                const BigRational& x = mk(e.col, j);
                if (!x.is_zero()) am(e.row, j) += e.value * x;
            }
        }
        BigRational trace;
        for (int i = 0; i < n; ++i) trace += am(i, i);
        BigRational ck = -trace / BigRational(k);
        c[static_cast<std::size_t>(n - k)] = ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i) am(i, i) += ck;
        mk = std::move(am);
    }
    return Polynomial(std::move(c));
}

}  // namespace seqlab
