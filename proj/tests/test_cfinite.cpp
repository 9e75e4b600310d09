#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqlab/cfinite.hpp"

#include <random>

using namespace seqlab;

namespace {

RationalFunction gf(std::initializer_list<long> num, std::initializer_list<long> den) {
    return ratfunc_reduce(poly_from_ints(num), poly_from_ints(den));
}

/// u_n = sum of the previous h terms with zero padding, u_0 = 0, u_1 = 1.
std::vector<BigRational> kbonacci_oracle(int h, int count) {
    std::vector<BigRational> u(static_cast<std::size_t>(count));
    for (int n = 1; n < count; ++n) {
        if (n == 1) {
            u[1] = 1;
            continue;
        }
        for (int i = 1; i <= h && n - i >= 0; ++i) u[static_cast<std::size_t>(n)] += u[static_cast<std::size_t>(n - i)];
    }
    return u;
}

CFiniteSequence random_sequence(std::mt19937& rng) {
    std::uniform_int_distribution<int> order(1, 5);
    std::uniform_int_distribution<int> coef(-3, 3);
    int h = order(rng);
    std::vector<BigRational> rec(static_cast<std::size_t>(h));
    std::vector<BigRational> init(static_cast<std::size_t>(h));
    for (auto& c : rec) c = coef(rng);
    for (auto& c : init) c = coef(rng);
    if (rec.back().is_zero()) rec.back() = 2;
    return CFiniteSequence(rec, init);
}

}  // namespace

TEST_CASE("kbonacci") {
    CHECK(kbonacci(4).initial() == std::vector<BigRational>{0, 1, 1, 2});
    CHECK(kbonacci(5).initial() == std::vector<BigRational>{0, 1, 1, 2, 4});
    CHECK(kbonacci(2).initial() == std::vector<BigRational>{0, 1});
    CHECK(kbonacci(4).recurrence() == std::vector<BigRational>{1, 1, 1, 1});
    CHECK_THROWS_WITH_AS(kbonacci(1), "order must be >= 2", std::invalid_argument);
    CHECK_THROWS_AS(kbonacci(0), std::invalid_argument);
    for (int h = 2; h <= 8; ++h) CHECK(kbonacci(h).terms(40) == kbonacci_oracle(h, 40));
}

TEST_CASE("to_gf") {
    CHECK(to_gf(kbonacci(4)) == gf({0, 1}, {1, -1, -1, -1, -1}));
    CHECK(to_gf(kbonacci(6)) == gf({0, 1}, {1, -1, -1, -1, -1, -1, -1}));
    CHECK(to_gf(CFiniteSequence({1}, {1})) == gf({1}, {1, -1}));
}

TEST_CASE("from_gf") {
    CHECK(from_gf(gf({0, 1}, {1, -1, -1, -1, -1})) == kbonacci(4));

    auto geometric = from_gf(gf({1}, {1, -2}));
    CHECK(geometric.order() == 1);
    CHECK(geometric.terms(5) == std::vector<BigRational>{1, 2, 4, 8, 16});
    // 0, 1, 2, 4, ... has no order-1 recurrence from n = 0
    CHECK_THROWS_AS(from_gf(gf({0, 1}, {1, -2})), std::invalid_argument);

    // 2z / D4 carries u_n u_{n+2}
    auto d4 = gf({0, 2}, {1, -2, -4, -6, -12, 4, 6, 0, 2, 0, -1});
    auto prod = from_gf(d4);
    CHECK(prod.order() == 10);
    auto u = kbonacci_oracle(4, 32);
    auto t = prod.terms(30);
    for (std::size_t n = 0; n < 30; ++n) CHECK(t[n] == u[n] * u[n + 2]);

    CHECK_THROWS_AS(from_gf(gf({1, 0, 1}, {1, -1})), std::invalid_argument);
    CHECK_THROWS_AS(from_gf(RationalFunction(poly_from_ints({3}))), std::invalid_argument);
}

TEST_CASE("term") {
    CHECK(term(kbonacci(4), 7) == BigRational(29));
    CHECK(term(kbonacci(4), 2) == BigRational(1));
    CHECK(term(kbonacci(4), -3) == BigRational(0));
    CHECK(term(kbonacci(4), 10) == BigRational(208));
}

TEST_CASE("term agrees with the series of to_gf") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        auto s = random_sequence(rng);
        auto prefix = series_prefix(to_gf(s), 51);
        for (long n = 0; n <= 50; ++n) CHECK(term(s, n) == prefix[static_cast<std::size_t>(n)]);
    }
}

TEST_CASE("from_gf(to_gf(s)) reproduces the terms") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        auto s = random_sequence(rng);
        auto f = to_gf(s);
        if (f.is_zero()) continue;
        auto back = from_gf(f);
        CHECK(back.terms(2 * s.order()) == s.terms(2 * s.order()));
        CHECK(to_gf(back) == f);
    }
}

TEST_CASE("shift_gf") {
    auto tetra = to_gf(kbonacci(4));
    auto ahead = shift_gf(tetra, -2);
    auto u = kbonacci_oracle(4, 22);
    auto a = series_prefix(ahead, 20);
    for (std::size_t n = 0; n < 20; ++n) CHECK(a[n] == u[n + 2]);
    CHECK(a[0] == BigRational(1));
    CHECK(a[1] == BigRational(2));
    CHECK(a[2] == BigRational(4));

    CHECK(shift_gf(tetra, 0) == tetra);
    CHECK(shift_gf(gf({1}, {1, -1}), 3) == gf({0, 0, 0, 1}, {1, -1}));

    for (int k = 0; k <= 6; ++k) CHECK(shift_gf(shift_gf(tetra, k), -k) == tetra);
}

TEST_CASE("partial_sum") {
    CHECK(partial_sum(RationalFunction(poly_from_ints({1}))) == gf({1}, {1, -1}));
    auto ramp = partial_sum(gf({0, 1}, {1, -1}));
    CHECK(ramp == gf({0, 1}, {1, -2, 1}));
    CHECK(series_prefix(ramp, 4) == std::vector<BigRational>{0, 1, 2, 3});

    auto sq = gf({0, 1, -1, -2, -2, -2, 1, 1}, {1, -2, -4, -6, -12, 4, 6, 0, 2, 0, -1});
    CHECK(partial_sum(sq) == ratfunc_reduce(sq.num(), sq.den() * poly_from_ints({1, -1})));
}

TEST_CASE("partial_sum telescopes") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        auto f = to_gf(random_sequence(rng));
        auto s = series_prefix(partial_sum(f), 30);
        auto a = series_prefix(f, 30);
        CHECK(s[0] == a[0]);
        for (std::size_t n = 1; n < 30; ++n) CHECK(s[n] - s[n - 1] == a[n]);
    }
}
