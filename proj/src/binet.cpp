#include "seqlab/binet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace seqlab {

namespace {

constexpr double kRelativeStop = 1e-18;
constexpr long kMaxTerms = 100000;
constexpr double kPivotFloor = 1e-12;
constexpr double kImagLimit = 1e-6;
constexpr double kDistinctRoots = 1e-9;

/// exp(2 pi i j / h), exact at multiples of a quarter turn.
ComplexValue unit_root(int j, int h) {
    j %= h;
    if (j < 0) j += h;
    if ((4 * j) % h == 0) {
        switch ((4 * j) / h) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * j / h);
}

/// z^{-n} by binary powering of 1/z.
ComplexValue inverse_power(ComplexValue z, long n) {
    ComplexValue base = 1.0 / z;
    ComplexValue acc{1.0, 0.0};
    for (long e = n; e > 0; e >>= 1) {
        if (e & 1) acc *= base;
        base *= base;
    }
    return acc;
}

/// r_j for 0 <= j < h.
ComplexValue small_root(int j, int h) {
    const double expo = static_cast<double>(h + 1) / h;
    GenBinomialParams p{BigRational(h + 1, h), BigRational(-1, h), unit_root(j, h) * std::pow(0.5, expo)};
    return unit_root(-j, h) * std::pow(2.0, 1.0 / h) * gen_binom_series(p);
}

}  // namespace

double gen_binom_radius(const BigRational& t) {
    const double td = t.to_double();
    if (td < 1.0) throw NumericError("generalized binomial series: t must be >= 1");
    if (td == 1.0) return 1.0;
    return std::exp((td - 1.0) * std::log(td - 1.0) - td * std::log(td));
}

BigRational gen_binom_coefficient(const BigRational& t, const BigRational& r, int n) {
    if (n < 0) throw std::invalid_argument("gen_binom_coefficient: negative index");
    if (n == 0) return BigRational(1);
    const BigRational top = t * BigRational(n) + r;
    BigRational c = r;
    for (int k = 1; k < n; ++k) c *= top - BigRational(k);
    for (int k = 2; k <= n; ++k) c /= BigRational(k);
    return c;
}

ComplexValue gen_binom_series(const GenBinomialParams& p) {
    const double radius = gen_binom_radius(p.t);
    if (!(std::abs(p.x) < radius)) {
        throw NumericError("generalized binomial series: |x| = " + std::to_string(std::abs(p.x)) +
                           " is not inside the radius of convergence " + std::to_string(radius));
    }
    const double t = p.t.to_double();
    const double r = p.r.to_double();
    if (p.r.is_zero() || p.x == ComplexValue{}) return {1.0, 0.0};

    // Exact zero coefficients can appear while (t-1) n + r <= -1; the
    // stopping rule only applies past that point.
    double last_zero = 0.0;
    if (t > 1.0) last_zero = (-1.0 - r) / (t - 1.0);

    ComplexValue sum{1.0, 0.0};
    for (long n = 1; n <= kMaxTerms; ++n) {
        // r/n * prod_{k<n} (tn + r - k)/k * x^n, with x folded into each factor
        const double top = t * static_cast<double>(n) + r;
        ComplexValue term = p.x * (r / static_cast<double>(n));
        for (long k = 1; k < n; ++k) term *= p.x * ((top - static_cast<double>(k)) / static_cast<double>(k));
        if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
            throw NumericError("generalized binomial series: non-finite term at n = " + std::to_string(n));
        }
        sum += term;
        if (static_cast<double>(n) > last_zero && std::abs(term) < kRelativeStop * std::abs(sum)) return sum;
    }
    throw NumericError("generalized binomial series: no convergence within " + std::to_string(kMaxTerms) + " terms");
}

std::vector<ComplexValue> roots(int h) {
    if (h < 2 || h > 12) throw std::invalid_argument("roots: order must be in [2, 12]");
    std::vector<ComplexValue> out(static_cast<std::size_t>(h) + 1);
    // coefficients are real, so r_{h-j} = conj(r_j)
    for (int j = 0; 2 * j <= h; ++j) {
        out[static_cast<std::size_t>(j)] = small_root(j, h);
        if (j > 0 && 2 * j < h) out[static_cast<std::size_t>(h - j)] = std::conj(out[static_cast<std::size_t>(j)]);
    }
    GenBinomialParams big{BigRational(h + 1), BigRational(1), {std::ldexp(1.0, -(h + 1)), 0.0}};
    out[static_cast<std::size_t>(h)] = 0.5 * gen_binom_series(big);
    return out;
}

bool conjugate_root_pairing(const std::vector<ComplexValue>& rts, double tol) {
    std::vector<bool> used(rts.size(), false);
    for (std::size_t i = 0; i < rts.size(); ++i) {
        if (used[i]) continue;
        const ComplexValue want = std::conj(rts[i]);
        bool found = false;
        if (std::abs(rts[i].imag()) <= tol) {
            used[i] = true;
            continue;
        }
        for (std::size_t k = 0; k < rts.size(); ++k) {
            if (k == i || used[k]) continue;
            if (std::abs(rts[k] - want) <= tol) {
                used[i] = used[k] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

BinetData binet_coefficients(int h, const CFiniteSequence& seq) {
    BinetData d;
    d.order = h;
    d.roots = roots(h);
    const std::size_t m = d.roots.size();
    if (seq.order() != h) throw std::invalid_argument("binet_coefficients: sequence order must equal h");
    auto u = seq.terms(static_cast<int>(m));

    // augmented Vandermonde system in the reciprocal roots
    std::vector<std::vector<ComplexValue>> a(m, std::vector<ComplexValue>(m + 1));
    for (std::size_t n = 0; n < m; ++n) {
        for (std::size_t i = 0; i < m; ++i) a[n][i] = inverse_power(d.roots[i], static_cast<long>(n));
        a[n][m] = u[n].to_double();
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t piv = col;
        for (std::size_t row = col + 1; row < m; ++row) {
            if (std::abs(a[row][col]) > std::abs(a[piv][col])) piv = row;
        }
        if (std::abs(a[piv][col]) < kPivotFloor) {
            throw NumericError("binet_coefficients: near-singular system (duplicate roots?)");
        }
        std::swap(a[piv], a[col]);
        for (std::size_t row = col + 1; row < m; ++row) {
            const ComplexValue f = a[row][col] / a[col][col];
            if (f == ComplexValue{}) continue;
            for (std::size_t k = col; k <= m; ++k) a[row][k] -= f * a[col][k];
        }
    }
    d.coefficients.assign(m, {});
    for (std::size_t col = m; col-- > 0;) {
        ComplexValue acc = a[col][m];
        for (std::size_t k = col + 1; k < m; ++k) acc -= a[col][k] * d.coefficients[k];
        d.coefficients[col] = acc / a[col][col];
    }

    // real data: conjugate roots carry conjugate coefficients
    for (int j = 0; 2 * j <= h; ++j) {
        auto& cj = d.coefficients[static_cast<std::size_t>(j)];
        if (j == 0 || 2 * j == h) {
            cj = {cj.real(), 0.0};
            continue;
        }
        auto& ck = d.coefficients[static_cast<std::size_t>(h - j)];
        ComplexValue avg = 0.5 * (cj + std::conj(ck));
        cj = avg;
        ck = std::conj(avg);
    }
    auto& ch = d.coefficients[static_cast<std::size_t>(h)];
    ch = {ch.real(), 0.0};
    return d;
}

ComplexValue binet_eval(const BinetData& d, long n) {
    if (n < 0) throw std::invalid_argument("binet_eval: negative index");
    ComplexValue acc{};
    for (std::size_t i = 0; i < d.roots.size(); ++i) acc += d.coefficients[i] * inverse_power(d.roots[i], n);
    if (!(std::abs(acc.imag()) < kImagLimit)) {
        throw NumericError("binet_eval: imaginary residue " + std::to_string(acc.imag()) + " at n = " + std::to_string(n));
    }
    return acc;
}

ComplexValue resolvent_coefficient(int h, long n) {
    if (n < 0) throw std::invalid_argument("resolvent_coefficient: negative index");
    auto rts = roots(h);
    ComplexValue acc{};
    for (std::size_t i = 0; i < rts.size(); ++i) {
        ComplexValue prod{1.0, 0.0};
        for (std::size_t j = 0; j < rts.size(); ++j) {
            if (j == i) continue;
            ComplexValue diff = rts[i] - rts[j];
            if (std::abs(diff) < kDistinctRoots) throw NumericError("resolvent_coefficient: duplicate roots");
            prod *= diff;
        }
        acc -= inverse_power(rts[i], n + 1) / prod;
    }
    return acc;
}

double functional_equation_check(const BigRational& t, ComplexValue x) {
    ComplexValue b = gen_binom_series({t, BigRational(1), x});
    return std::abs(b - 1.0 - x * std::pow(b, t.to_double()));
}

std::vector<BigRational> root_substitution_residual(int h, int terms) {
    if (h < 1) throw std::invalid_argument("root_substitution_residual: h must be positive");
    const BigRational t(h + 1, h);
    const BigRational r_first(-1, h);
    const BigRational r_second(-(h + 1), h);
    std::vector<BigRational> out(static_cast<std::size_t>(std::max(terms, 0)));
    for (int n = 0; n < terms; ++n) {
        BigRational c = gen_binom_coefficient(t, r_second, n) - gen_binom_coefficient(t, r_first, n);
        if (n == 1) c += BigRational(1);
        out[static_cast<std::size_t>(n)] = c;
    }
    return out;
}

}  // namespace seqlab
