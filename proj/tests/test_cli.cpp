#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "seqlab/commands.hpp"
#include "seqlab/gf_parser.hpp"
#include "seqlab/hadamard.hpp"

#include <cmath>

using namespace seqlab;

namespace {

const std::string kData = SEQLAB_TEST_DATA;

std::vector<BigRational> rationals_from_json(const json& a) {
    std::vector<BigRational> out;
    for (const auto& x : a) out.push_back(rational_from_json(x));
    return out;
}

std::vector<BigRational> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("cmd_terms") {
    auto doc = cmd_terms(4, 8);
    CHECK(doc.ok);
    CHECK(doc.text == "0 1 1 2 4 8 15 29\n");
    CHECK(rationals_from_json(json::parse(doc.payload.dump())["terms"]) == ints({0, 1, 1, 2, 4, 8, 15, 29}));
    CHECK(cmd_terms(4, 1).text == "0\n");
    CHECK_THROWS_WITH_AS(cmd_terms(1, 5), "order must be >= 2", std::invalid_argument);
    CHECK_THROWS_AS(cmd_terms(4, 0), std::invalid_argument);
}

TEST_CASE("cmd_hadamard") {
    auto doc = cmd_hadamard("z/(1-z-z^2-z^3-z^4)", "z/(1-z-z^2-z^3-z^4)");
    auto sq = ratfunc_reduce(poly_from_ints({0, 1, -1, -2, -2, -2, 1, 1}),
                             poly_from_ints({1, -2, -4, -6, -12, 4, 6, 0, 2, 0, -1}));
    CHECK(ratfunc_from_json(json::parse(doc.payload.dump())["gf"]) == sq);
    CHECK(doc.text == sq.to_string() + "\n");

    auto geo = cmd_hadamard("1/(1-2*z)", "1/(1-3*z)");
    CHECK(geo.text == "(1)/(1 - 6*z)\n");
    CHECK_THROWS_AS(cmd_hadamard("1/(z)", "1"), std::domain_error);
    CHECK_THROWS_AS(cmd_hadamard("1/(1-2z)", "1"), ParseError);
}

TEST_CASE("cmd_sumsq") {
    auto four = cmd_sumsq(4);
    CHECK(four.ok);
    auto r = report_from_json(json::parse(four.payload.dump())["report"]);
    CHECK(r.constant == BigRational(1, 3));
    CHECK(r.coefficients == ints({2, 1, -1, -1, 5, 4, 1, 1, -1, -1}));
    CHECK(four.text.find("coefficients 2 1 -1 -1 5 4 1 1 -1 -1\n") != std::string::npos);
    CHECK(four.text.find("basis t_n = 1/2 * u_n * u_{n+2}\n") != std::string::npos);

    auto five = report_from_json(cmd_sumsq(5).payload["report"]);
    CHECK(five.constant == BigRational(3, 8));
    CHECK(five.global_factor == BigRational(1, 8));

    auto six = cmd_sumsq(6);
    CHECK(six.ok);
    CHECK(report_from_json(six.payload["report"]).constant == BigRational(2, 5));
    CHECK_THROWS_AS(cmd_sumsq(9), std::invalid_argument);
}

TEST_CASE("cmd_binet") {
    auto doc = cmd_binet(4, std::nullopt);
    CHECK(doc.ok);
    CHECK(doc.text.find("r_1 = -0.114070631165 - 1.21674600397i\n") != std::string::npos);
    CHECK(doc.text.find("r_4 = 0.518790063676\n") != std::string::npos);
    CHECK(doc.text.find("c_4 = 0.293813062774\n") != std::string::npos);
    auto parsed = json::parse(doc.payload.dump());
    REQUIRE(parsed["roots"].size() == 5);
    auto d = binet_coefficients(4, kbonacci(4));
    for (std::size_t j = 0; j < 5; ++j) {
        CHECK(complex_from_json(parsed["roots"][j]) == d.roots[j]);
        CHECK(complex_from_json(parsed["coefficients"][j]) == d.coefficients[j]);
    }
    CHECK(parsed["evaluations"].empty());

    auto ten = cmd_binet(4, 10);
    CHECK(ten.ok);
    REQUIRE(ten.payload["evaluations"].size() == 1);
    CHECK(ten.payload["evaluations"][0]["exact"] == "208");
    CHECK(ten.payload["evaluations"][0]["abs_error"].get<double>() < 1e-8 * 208);

    auto table = cmd_binet(4, kBinetTable);
    CHECK(table.ok);
    CHECK(table.payload["evaluations"].size() == 21);

    auto fib = cmd_binet(2, 30);
    CHECK(fib.ok);
    CHECK(fib.payload["evaluations"][0]["exact"] == "832040");
    CHECK_THROWS_AS(cmd_binet(1, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(cmd_binet(13, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(cmd_binet(4, -5), std::invalid_argument);
}

TEST_CASE("cmd_check_bfile") {
    auto oeis = cmd_check_bfile(kData + "/b000078_prefix.txt", 4, -2);
    CHECK(oeis.ok);
    CHECK(oeis.payload["checked"] == 40);
    CHECK(oeis.payload["first_mismatch"].is_null());

    auto unshifted = cmd_check_bfile(kData + "/b000078_prefix.txt", 4);
    CHECK_FALSE(unshifted.ok);

    auto hand = cmd_check_bfile(kData + "/handmade.txt", 4);
    CHECK(hand.ok);
    CHECK(hand.text == "checked 3 entries against order 4 (shift 0): agreement\n");

    auto bad = cmd_check_bfile(kData + "/corrupted.txt", 4);
    CHECK_FALSE(bad.ok);
    CHECK(bad.payload["first_mismatch"]["index"] == 9);
    CHECK(bad.payload["first_mismatch"]["file_value"] == "109");
    CHECK(bad.payload["first_mismatch"]["expected"] == "108");
    CHECK(bad.text.find("mismatch at index 9: file has 109, expected 108") != std::string::npos);

    CHECK_THROWS_AS(cmd_check_bfile(kData + "/missing.txt", 4), std::runtime_error);
}

TEST_CASE("cmd_verify_schumacher") {
    auto full = cmd_verify_schumacher(200);
    CHECK(full.ok);
    CHECK(full.text ==
          "term-wise 1 <= n <= 200: PASS\ngenerating function: PASS\nequivalent to the t_n form (h = 4): PASS\n");
    CHECK(cmd_verify_schumacher(1).ok);

    SchumacherForm flipped;
    flipped.skip_two = -flipped.skip_two;
    auto bad = cmd_verify_schumacher(50, flipped);
    CHECK_FALSE(bad.ok);
    CHECK(bad.payload["witness"] == 3);
    CHECK(bad.text.find("FAIL (first discrepancy at n = 3)") != std::string::npos);
    CHECK_THROWS_AS(cmd_verify_schumacher(0), std::invalid_argument);
}

TEST_CASE("commands are deterministic") {
    CHECK(cmd_binet(5, kBinetTable).text == cmd_binet(5, kBinetTable).text);
    CHECK(cmd_sumsq(5).payload.dump() == cmd_sumsq(5).payload.dump());
    CHECK(cmd_hadamard("z/(1-z-z^2)", "1/(1+z)").text == cmd_hadamard("z/(1-z-z^2)", "1/(1+z)").text);
}
