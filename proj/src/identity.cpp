#include "seqlab/identity.hpp"

#include "seqlab/hadamard.hpp"

#include <stdexcept>
#include <string>

namespace seqlab {

namespace {

const RationalFunction& carrier_z_over_one_minus_z() {
    static const RationalFunction f = ratfunc_reduce(poly_from_ints({0, 1}), poly_from_ints({1, -1}));
    return f;
}

void record(TermwiseCheck& check, long n, const BigRational& lhs, const BigRational& rhs) {
    BigRational diff = (lhs - rhs).abs();
    if (diff.is_zero()) return;
    if (!check.witness) check.witness = n;
    if (diff > check.max_abs_discrepancy) check.max_abs_discrepancy = diff;
}

}  // namespace

PoleSplit split_pole_at_one(const RationalFunction& f) {
    if (f.num().degree() > f.den().degree()) throw std::domain_error("split_pole_at_one: input has a polynomial part");
    const BigRational one(1);
    if (!f.den().eval(one).is_zero()) throw std::domain_error("split_pole_at_one: no pole at z = 1");
    const BigRational slope = f.den().derivative().eval(one);
    if (slope.is_zero()) throw std::domain_error("split_pole_at_one: pole at z = 1 has order >= 2");
    // near z = 1, f ~ num(1) / (den'(1) (z - 1)) and c z/(1-z) ~ -c / (z - 1)
    BigRational c = -f.num().eval(one) / slope;
    RationalFunction rest = f - c * carrier_z_over_one_minus_z();
    if (rest.den().eval(one).is_zero()) throw ConsistencyError("split_pole_at_one: remainder still has a pole at 1");
    return {c, rest};
}

ShiftBasisExpansion express_in_shift_basis(const RationalFunction& target, const RationalFunction& basis) {
    if (target.den() != basis.den()) throw std::domain_error("express_in_shift_basis: denominators differ");
    const Polynomial& bn = basis.num();
    if (bn.degree() != 1 || !bn[0].is_zero()) {
        throw std::domain_error("express_in_shift_basis: basis numerator is not of the form m*z");
    }
    const BigRational m = bn[1];
    if (!target.num()[0].is_zero()) {
        throw std::domain_error("express_in_shift_basis: target numerator has a constant term");
    }
    std::vector<BigRational> v;
    for (int i = 1; i <= target.num().degree(); ++i) v.push_back(target.num()[i] / m);

    // content: gcd of numerators over lcm of denominators
    BigInt g = 0;
    BigInt l = 1;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        BigInt n = x.numerator();
        BigInt d = x.denominator();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    if (g == 0) return {BigRational(0), {}};
    BigRational content(g, l);
    for (auto& x : v) x /= content;
    return {content, std::move(v)};
}

RationalFunction assemble_gf(const IdentityReport& report) {
    Polynomial lambda(report.coefficients);
    RationalFunction shift_sum = report.global_factor * RationalFunction(lambda) * report.basis_gf;
    return report.constant * carrier_z_over_one_minus_z() + shift_sum;
}

TermwiseCheck check_report_termwise(const IdentityReport& report, long n_lo, long n_hi) {
    CFiniteSequence s = kbonacci(report.order);
    auto u = s.terms(static_cast<int>(n_hi) + report.basis_shift + 1);
    auto t_at = [&](long n) -> BigRational {
        if (n < 0) return BigRational(0);
        return report.scale * u[static_cast<std::size_t>(n)] * u[static_cast<std::size_t>(n + report.basis_shift)];
    };

    TermwiseCheck check{n_lo, n_hi, BigRational(0), std::nullopt};
    BigRational lhs;
    for (long n = 0; n <= n_hi; ++n) {
        lhs += u[static_cast<std::size_t>(n)] * u[static_cast<std::size_t>(n)];
        if (n < n_lo) continue;
        BigRational rhs = report.constant;
        for (std::size_t i = 0; i < report.coefficients.size(); ++i) {
            rhs += report.global_factor * report.coefficients[i] * t_at(n - static_cast<long>(i));
        }
        record(check, n, lhs, rhs);
    }
    return check;
}

IdentityReport sum_of_squares_identity(int h, long verify_to) {
    if (h < 2 || h > 8) throw std::invalid_argument("sum_of_squares_identity: order must be in [2, 8]");
    CFiniteSequence s = kbonacci(h);
    RationalFunction f = to_gf(s);
    RationalFunction squares = hadamard_product(f, f).gf;
    RationalFunction sums = partial_sum(squares);
    // without a pole at 1 (h = 2) there is no constant part
    PoleSplit split = sums.den().eval(BigRational(1)).is_zero() ? split_pole_at_one(sums) : PoleSplit{BigRational(0), sums};

    // u_n u_{n+ceil(h/2)} is the product whose GF numerator is a monomial
    const int shift = (h + 1) / 2;
    RationalFunction raw_basis = shifted_product_gf(s, 0, -shift);
    const Polynomial& bn = raw_basis.num();
    if (bn.degree() != 1 || !bn[0].is_zero()) {
        throw std::domain_error("sum_of_squares_identity: GF of u_n u_{n+" + std::to_string(shift) +
                                "} has numerator " + bn.to_string() + ", not m*z");
    }

    IdentityReport report;
    report.order = h;
    report.constant = split.constant;
    report.scale = bn[1].reciprocal();
    report.basis_shift = shift;
    report.basis_gf = report.scale * raw_basis;

    ShiftBasisExpansion expansion = express_in_shift_basis(split.remainder, report.basis_gf);
    report.global_factor = expansion.global_factor;
    report.coefficients = std::move(expansion.coefficients);

    if (assemble_gf(report) != sums) {
        throw ConsistencyError("sum_of_squares_identity: reassembled GF differs from the partial-sum GF");
    }
    report.termwise = check_report_termwise(report, 1, verify_to);
    if (!report.termwise.ok()) {
        throw ConsistencyError("sum_of_squares_identity: term-wise check failed at n = " +
                               std::to_string(*report.termwise.witness));
    }
    return report;
}

RationalFunction schumacher_rhs_gf(const SchumacherForm& form) {
    CFiniteSequence s = kbonacci(4);
    // u_{n-i} u_{n-j}
    auto p = [&](int i, int j) { return shifted_product_gf(s, i, j); };
    RationalFunction constant = form.constant * ratfunc_reduce(Polynomial::constant(1), poly_from_ints({1, -1}));
    // (u_{n+1} - u_{n-1})^2 = u_{n+1}^2 - 2 u_{n+1} u_{n-1} + u_{n-1}^2
    RationalFunction gap = p(-1, -1) - BigRational(2) * p(-1, 1) + p(1, 1);
    return constant + form.adjacent * p(0, -1) + form.gap_square * gap + form.skip_two * p(0, 2) +
           form.tail * p(2, 3);
}

SchumacherCheck verify_schumacher(long n_max, const SchumacherForm& form) {
    if (n_max < 1) throw std::invalid_argument("verify_schumacher: n_max must be >= 1");
    CFiniteSequence s = kbonacci(4);
    auto terms = s.terms(static_cast<int>(n_max) + 2);
    auto u = [&](long n) -> const BigRational& {
        static const BigRational zero;
        return n < 0 ? zero : terms[static_cast<std::size_t>(n)];
    };

    SchumacherCheck result;
    result.termwise = {1, n_max, BigRational(0), std::nullopt};
    BigRational lhs = u(0) * u(0);
    for (long n = 1; n <= n_max; ++n) {
        lhs += u(n) * u(n);
        BigRational gap = u(n + 1) - u(n - 1);
        BigRational rhs = form.constant + form.adjacent * u(n) * u(n + 1) + form.gap_square * gap * gap +
                          form.skip_two * u(n) * u(n - 2) + form.tail * u(n - 2) * u(n - 3);
        record(result.termwise, n, lhs, rhs);
    }

    RationalFunction f = to_gf(s);
    RationalFunction lhs_gf = partial_sum(hadamard_product(f, f).gf);
    result.gf_equal = schumacher_rhs_gf(form) == lhs_gf;
    return result;
}

bool equivalence_check(const IdentityReport& report, const RationalFunction& rhs_gf) {
    return assemble_gf(report) == rhs_gf;
}

}  // namespace seqlab
