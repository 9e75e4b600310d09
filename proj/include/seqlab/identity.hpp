#pragma once

/**
 * @file identity.hpp
 * @brief Closed forms for partial sums of squares of k-bonacci numbers.
 *
 * For order h the partial sums satisfy, for n >= 1,
 *
 *   sum_{k<=n} u_k^2 = constant + global_factor * sum_i lambda_i t_{n-i},
 *   t_n = scale * u_n * u_{n+basis_shift},
 *
 * where everything on the right is derived from generating functions:
 * the Hadamard square, the 1/(1-z) partial-sum transform, and the split
 * of the simple pole at z = 1.
 *
 * The basis shift is ceil(h/2): for 2 <= h <= 8 it is the product
 * u_n u_{n+k} whose GF has numerator 2^{k-1} z over the same denominator
 * as the squares (k = 2 at h = 4, k = 3 at h = 5).
 */

#include "seqlab/bigrational.hpp"
#include "seqlab/cfinite.hpp"
#include "seqlab/rational_function.hpp"

#include <optional>
#include <vector>

namespace seqlab {

struct TermwiseCheck {
    long n_lo = 0;
    long n_hi = 0;
    BigRational max_abs_discrepancy;
    /// Smallest n with a nonzero discrepancy.
    std::optional<long> witness;

    bool ok() const { return max_abs_discrepancy.is_zero(); }
};

struct IdentityReport {
    int order = 0;
    BigRational constant;
    BigRational scale;
    int basis_shift = 0;
    std::vector<BigRational> coefficients;
    BigRational global_factor;
    /// GF of t_n.
    RationalFunction basis_gf;
    TermwiseCheck termwise;
};

struct PoleSplit {
    BigRational constant;
    RationalFunction remainder;
};

/// f = constant * z/(1-z) + remainder, remainder regular at z = 1.
/// Requires deg num <= deg den and a simple pole at 1; throws std::domain_error otherwise.
PoleSplit split_pole_at_one(const RationalFunction& f);

struct ShiftBasisExpansion {
    BigRational global_factor;
    std::vector<BigRational> coefficients;
};

/// Writes target = global_factor * (sum_i lambda_i z^i) * basis, where
/// basis = m z / D and target = N / D. The lambda are coprime integers and
/// global_factor > 0 when the coefficients are rational multiples of each
/// other (always, here). Throws std::domain_error when denominators
/// differ, basis is not a monomial over D, or N(0) != 0.
ShiftBasisExpansion express_in_shift_basis(const RationalFunction& target, const RationalFunction& basis);

/// The full derivation for order h, 2 <= h <= 8. The result is verified
/// term-wise for 1 <= n <= verify_to.
IdentityReport sum_of_squares_identity(int h, long verify_to = 200);

/// constant * z/(1-z) + global_factor * (sum lambda_i z^i) * basis_gf.
RationalFunction assemble_gf(const IdentityReport& report);

/// Term-wise check of a report against direct summation of squares.
TermwiseCheck check_report_termwise(const IdentityReport& report, long n_lo, long n_hi);

/// Weights of the tetranacci sum-of-squares identity
///   sum u_k^2 = c0 + c1 u_n u_{n+1} + c2 (u_{n+1} - u_{n-1})^2
///             + c3 u_n u_{n-2} + c4 u_{n-2} u_{n-3}.
struct SchumacherForm {
    BigRational constant{1, 3};
    BigRational adjacent{1};
    BigRational gap_square{-1, 3};
    BigRational skip_two{1, 3};
    BigRational tail{1, 3};
};

struct SchumacherCheck {
    TermwiseCheck termwise;
    bool gf_equal = false;

    bool ok() const { return termwise.ok() && gf_equal; }
};

/// GF of the right-hand side above, assembled from shifted products.
RationalFunction schumacher_rhs_gf(const SchumacherForm& form = {});

/// Checks the identity for 1 <= n <= n_max with u_{<0} = 0, and at the
/// level of generating functions. Throws std::invalid_argument if n_max < 1.
SchumacherCheck verify_schumacher(long n_max, const SchumacherForm& form = {});

/// True iff the report and the given right-hand side define the same GF.
bool equivalence_check(const IdentityReport& report, const RationalFunction& rhs_gf);

}  // namespace seqlab
