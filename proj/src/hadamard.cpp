#include "seqlab/hadamard.hpp"

#include <algorithm>
#include <string>

namespace seqlab {

RationalMatrix companion(const Polynomial& den) {
    const int d = den.degree();
    if (d < 1) throw std::invalid_argument("companion: denominator must have degree >= 1");
    if (den[0] != BigRational(1)) throw std::invalid_argument("companion: denominator must satisfy den(0) = 1");
    RationalMatrix m(d, d);
    for (int j = 0; j < d; ++j) m(0, j) = -den[j + 1];
    for (int i = 1; i < d; ++i) m(i, i - 1) = 1;
    return m;
}

Polynomial hadamard_denominator(const Polynomial& den_a, const Polynomial& den_b) {
    Polynomial chi = charpoly(kronecker(companion(den_a), companion(den_b)));
    return chi.reversed(chi.degree());
}

namespace {

RationalFunction proper_product(const RationalFunction& f, const RationalFunction& g) {
    if (f.is_zero() || g.is_zero()) return {};
    Polynomial den = hadamard_denominator(f.den(), g.den());
    const int d = den.degree();
    auto a = series_prefix(f, d);
    auto b = series_prefix(g, d);
    std::vector<BigRational> c(static_cast<std::size_t>(d));
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = a[n] * b[n];
    // den annihilates the product sequence from n = 0, so den * series is a
    // polynomial of degree < d
    Polynomial num = (den * Polynomial(std::move(c))).truncated(d);
    return ratfunc_reduce(num, den);
}

}  // namespace

HadamardResult hadamard_product(const RationalFunction& f, const RationalFunction& g) {
    PolynomialSplit sf = split_polynomial_part(f);
    PolynomialSplit sg = split_polynomial_part(g);

    RationalFunction h = proper_product(sf.proper_part, sg.proper_part);

    // polynomial parts only touch coefficients up to the larger of their degrees
    const int head = std::max(sf.polynomial_part.degree(), sg.polynomial_part.degree());
    if (head >= 0) {
        auto a = series_prefix(f, head + 1);
        auto b = series_prefix(g, head + 1);
        auto c = series_prefix(h, head + 1);
        std::vector<BigRational> fix(static_cast<std::size_t>(head) + 1);
        for (std::size_t n = 0; n < fix.size(); ++n) fix[n] = a[n] * b[n] - c[n];
        h = h + RationalFunction(Polynomial(std::move(fix)));
    }

    HadamardResult result{h, h.num().degree() + h.den().degree() + 1 + 16};
    auto a = series_prefix(f, result.verified_to);
    auto b = series_prefix(g, result.verified_to);
    auto c = series_prefix(h, result.verified_to);
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (c[n] != a[n] * b[n]) {
            throw ConsistencyError("hadamard_product: coefficient " + std::to_string(n) +
                                   " disagrees with the pointwise product");
        }
    }
    return result;
}

RationalFunction shifted_product_gf(const CFiniteSequence& s, int i, int j) {
    RationalFunction f = to_gf(s);
    return hadamard_product(shift_gf(f, i), shift_gf(f, j)).gf;
}

}  // namespace seqlab
