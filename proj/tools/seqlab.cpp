#include "seqlab/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace seqlab;

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitError = 2;

std::optional<long> parse_binet_n(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s == "table") return kBinetTable;
    std::size_t used = 0;
    long n = 0;
    try {
        n = std::stol(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("n must be an integer or \"table\"");
    return n;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact C-finite sequence toolkit: Hadamard products, sum-of-squares identities, Binet forms"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.fallthrough();

    int h = 0;
    int count = 10;
    auto* terms = app.add_subcommand("terms", "Print u_0..u_{count-1} of the order-h k-bonacci sequence");
    terms->add_option("--h", h, "Order")->required();
    terms->add_option("--count", count, "Number of terms");

    std::string f_expr, g_expr;
    auto* hadamard = app.add_subcommand("hadamard", "Hadamard product of two rational generating functions");
    hadamard->add_option("f", f_expr, "First GF, e.g. z/(1-z-z^2)")->required();
    hadamard->add_option("g", g_expr, "Second GF")->required();

    auto* sumsq = app.add_subcommand("sumsq", "Derive the sum-of-squares identity for order h");
    sumsq->add_option("--h", h, "Order, 2..8")->required();

    std::string binet_n;
    auto* binet = app.add_subcommand("binet", "Roots, Binet coefficients and optional evaluation");
    binet->add_option("--h", h, "Order, 2..12")->required();
    binet->add_option("--n", binet_n, "Index to evaluate, or \"table\" for n = 0..20");

    std::string path;
    long shift = 0;
    auto* check_bfile = app.add_subcommand("check-bfile", "Compare an OEIS b-file with the order-h sequence");
    check_bfile->add_option("path", path, "b-file path")->required();
    check_bfile->add_option("--h", h, "Order")->required();
    check_bfile->add_option("--shift", shift, "File index n is compared with u_{n+shift}");

    long n_max = 200;
    auto* schumacher = app.add_subcommand("verify-schumacher", "Check the tetranacci sum-of-squares identity");
    schumacher->add_option("--n-max", n_max, "Check 1 <= n <= n-max");

    CLI11_PARSE(app, argc, argv);

    OutputDocument doc;
    try {
        if (*terms) doc = cmd_terms(h, count);
        else if (*hadamard) doc = cmd_hadamard(f_expr, g_expr);
        else if (*sumsq) doc = cmd_sumsq(h);
        else if (*binet) doc = cmd_binet(h, parse_binet_n(binet_n));
        else if (*check_bfile) doc = cmd_check_bfile(path, h, shift);
        else doc = cmd_verify_schumacher(n_max);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }

    if (format == "json") std::cout << doc.payload.dump(2) << "\n";
    else std::cout << doc.text;
    return doc.ok ? 0 : kExitFailedCheck;
}
