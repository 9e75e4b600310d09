#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqlab/hadamard.hpp"
#include "seqlab/identity.hpp"

using namespace seqlab;

namespace {

const Polynomial kD4 = poly_from_ints({1, -2, -4, -6, -12, 4, 6, 0, 2, 0, -1});
const Polynomial kD5 = poly_from_ints({1, -2, -4, -7, -14, -28, 4, 6, 0, 4, 10, 0, -1, 0, 0, -1});

std::vector<BigRational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

RationalFunction squares_gf(int h) {
    auto f = to_gf(kbonacci(h));
    return hadamard_product(f, f).gf;
}

/// sum_{k<=n} u_k^2 by direct summation.
BigRational direct_sum(int h, long n) {
    BigRational acc;
    for (const auto& u : kbonacci(h).terms(static_cast<int>(n) + 1)) acc += u * u;
    return acc;
}

}  // namespace

TEST_CASE("split_pole_at_one") {
    auto ps4 = partial_sum(squares_gf(4));
    auto split4 = split_pole_at_one(ps4);
    CHECK(split4.constant == BigRational(1, 3));
    auto expect = ratfunc_reduce(poly_from_ints({0, 2, 1, -1, -1, 5, 4, 1, 1, -1, -1}), kD4 * BigRational(3));
    CHECK(split4.remainder == expect);

    CHECK(split_pole_at_one(partial_sum(squares_gf(5))).constant == BigRational(3, 8));

    auto simple = split_pole_at_one(ratfunc_reduce(poly_from_ints({0, 1}), poly_from_ints({1, -1})));
    CHECK(simple.constant == BigRational(1));
    CHECK(simple.remainder.is_zero());

    CHECK_THROWS_AS(split_pole_at_one(ratfunc_reduce(poly_from_ints({1}), poly_from_ints({1, -2}))), std::domain_error);
    CHECK_THROWS_AS(split_pole_at_one(ratfunc_reduce(poly_from_ints({1}), poly_from_ints({1, -2, 1}))), std::domain_error);
    CHECK_THROWS_AS(split_pole_at_one(ratfunc_reduce(poly_from_ints({0, 0, 1}), poly_from_ints({1, -1}))), std::domain_error);
}

TEST_CASE("split_pole_at_one reconstructs its input") {
    auto carrier = ratfunc_reduce(poly_from_ints({0, 1}), poly_from_ints({1, -1}));
    for (int h = 3; h <= 6; ++h) {
        auto ps = partial_sum(squares_gf(h));
        auto split = split_pole_at_one(ps);
        CHECK(split.constant * carrier + split.remainder == ps);
        CHECK_FALSE(split.remainder.den().eval(1).is_zero());
    }
}

TEST_CASE("express_in_shift_basis") {
    auto rem4 = split_pole_at_one(partial_sum(squares_gf(4))).remainder;
    auto basis4 = ratfunc_reduce(poly_from_ints({0, 1}), kD4);
    auto e4 = express_in_shift_basis(rem4, basis4);
    CHECK(e4.global_factor == BigRational(1, 3));
    CHECK(e4.coefficients == ints({2, 1, -1, -1, 5, 4, 1, 1, -1, -1}));

    // the negation of the commonly quoted list
    auto rem5 = split_pole_at_one(partial_sum(squares_gf(5))).remainder;
    auto basis5 = ratfunc_reduce(poly_from_ints({0, 1}), kD5);
    auto e5 = express_in_shift_basis(rem5, basis5);
    CHECK(e5.global_factor == BigRational(1, 8));
    CHECK(e5.coefficients == ints({5, 3, -1, -4, -2, 34, 30, 20, 20, 16, -6, -6, -3, -3, -3}));

    auto same = express_in_shift_basis(basis4, basis4);
    CHECK(same.global_factor == BigRational(1));
    CHECK(same.coefficients == ints({1}));

    CHECK_THROWS_AS(express_in_shift_basis(rem4, basis5), std::domain_error);
    CHECK_THROWS_AS(express_in_shift_basis(rem4, ratfunc_reduce(poly_from_ints({0, 1, 1}), kD4)), std::domain_error);
}

TEST_CASE("h = 5 quoted signs fail at n = 1, derived signs hold") {
    // n = 1: sum u_k^2 = 1 and t_1 = u_1 u_4 / 4 = 1
    CHECK(direct_sum(5, 1) == BigRational(1));
    CHECK(BigRational(3, 8) + BigRational(1, 8) * BigRational(-5) != BigRational(1));
    CHECK(BigRational(3, 8) + BigRational(1, 8) * BigRational(5) == BigRational(1));
}

TEST_CASE("sum_of_squares_identity h = 4") {
    auto r = sum_of_squares_identity(4);
    CHECK(r.constant == BigRational(1, 3));
    CHECK(r.scale == BigRational(1, 2));
    CHECK(r.basis_shift == 2);
    CHECK(r.global_factor == BigRational(1, 3));
    CHECK(r.coefficients == ints({2, 1, -1, -1, 5, 4, 1, 1, -1, -1}));
    CHECK(r.termwise.ok());
    CHECK(r.termwise.n_hi == 200);
}

TEST_CASE("sum_of_squares_identity h = 5") {
    auto r = sum_of_squares_identity(5);
    CHECK(r.constant == BigRational(3, 8));
    CHECK(r.scale == BigRational(1, 4));
    CHECK(r.basis_shift == 3);
    CHECK(r.global_factor == BigRational(1, 8));
    CHECK(r.coefficients == ints({5, 3, -1, -4, -2, 34, 30, 20, 20, 16, -6, -6, -3, -3, -3}));
}

TEST_CASE("sum_of_squares_identity h = 6 golden") {
    auto r = sum_of_squares_identity(6);
    CHECK(r.constant == BigRational(2, 5));
    CHECK(r.scale == BigRational(1, 4));
    CHECK(r.basis_shift == 3);
    CHECK(r.global_factor == BigRational(1, 5));
    CHECK(r.coefficients ==
          ints({3, 2, 0, -4, -6, 0, 52, 50, 40, 14, 14, 8, -22, -22, -17, -2, -2, -2, 2, 2, 2}));
}

TEST_CASE("every supported order verifies and reassembles") {
    const BigRational constants[] = {0, BigRational(1, 4), BigRational(1, 3), BigRational(3, 8),
                                     BigRational(2, 5), BigRational(5, 12), BigRational(3, 7)};
    for (int h = 2; h <= 8; ++h) {
        CAPTURE(h);
        auto r = sum_of_squares_identity(h);
        CHECK(r.constant == constants[h - 2]);
        CHECK(r.basis_shift == (h + 1) / 2);
        CHECK(assemble_gf(r) == partial_sum(squares_gf(h)));
        CHECK_FALSE(r.coefficients.empty());
        CHECK_FALSE(r.coefficients.front().is_zero());
        CHECK_FALSE(r.coefficients.back().is_zero());
        BigInt g = 0;
        for (const auto& c : r.coefficients) {
            CHECK(c.is_integer());
            BigInt n = c.numerator();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        }
        CHECK(g == 1);
    }
}

TEST_CASE("term-wise check against direct summation") {
    for (int h : {4, 5, 6}) {
        auto r = sum_of_squares_identity(h, 10);
        auto check = check_report_termwise(r, 1, 200);
        CHECK(check.ok());
        CHECK_FALSE(check.witness.has_value());
    }
    auto broken = sum_of_squares_identity(4, 10);
    broken.coefficients[3] += 1;
    auto check = check_report_termwise(broken, 1, 50);
    CHECK_FALSE(check.ok());
    REQUIRE(check.witness.has_value());
    CHECK(*check.witness == 4);
    CHECK_THROWS_AS(sum_of_squares_identity(1), std::invalid_argument);
    CHECK_THROWS_AS(sum_of_squares_identity(9), std::invalid_argument);
}

TEST_CASE("verify_schumacher") {
    // n = 4 by hand: 0 + 1 + 1 + 4 + 16 = 22 = 1/3 + 4*8 - 36/3 + 4/3 + 1/3
    CHECK(direct_sum(4, 4) == BigRational(22));
    CHECK(BigRational(1, 3) + BigRational(32) - BigRational(36, 3) + BigRational(4, 3) + BigRational(1, 3) == BigRational(22));

    auto one = verify_schumacher(1);
    CHECK(one.ok());
    auto full = verify_schumacher(200);
    CHECK(full.termwise.ok());
    CHECK(full.gf_equal);
    CHECK(full.termwise.n_hi == 200);
    CHECK(schumacher_rhs_gf() == partial_sum(squares_gf(4)));
    CHECK_THROWS_AS(verify_schumacher(0), std::invalid_argument);
}

TEST_CASE("verify_schumacher reports a flipped sign with a witness") {
    SchumacherForm flipped;
    flipped.skip_two = -flipped.skip_two;
    auto bad = verify_schumacher(50, flipped);
    CHECK_FALSE(bad.ok());
    CHECK_FALSE(bad.gf_equal);
    REQUIRE(bad.termwise.witness.has_value());
    // u_n u_{n-2} first becomes nonzero at n = 3
    CHECK(*bad.termwise.witness == 3);
}

TEST_CASE("equivalence_check") {
    auto r4 = sum_of_squares_identity(4);
    auto r5 = sum_of_squares_identity(5);
    CHECK(equivalence_check(r4, schumacher_rhs_gf()));
    CHECK(equivalence_check(r4, assemble_gf(r4)));
    CHECK_FALSE(equivalence_check(r5, schumacher_rhs_gf()));
    CHECK_FALSE(equivalence_check(r4, assemble_gf(r5)));
}
