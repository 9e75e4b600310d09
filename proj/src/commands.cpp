#include "seqlab/commands.hpp"

#include "seqlab/bfile.hpp"
#include "seqlab/binet.hpp"
#include "seqlab/gf_parser.hpp"
#include "seqlab/hadamard.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace seqlab {

namespace {

constexpr long kTableEnd = 20;

std::string join(const std::vector<BigRational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ' ';
        out += v[i].to_string();
    }
    return out;
}

json rationals(const std::vector<BigRational>& v) {
    json a = json::array();
    for (const auto& q : v) a.push_back(to_json(q));
    return a;
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

OutputDocument cmd_terms(int h, int count) {
    auto s = kbonacci(h);
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    auto u = s.terms(count);
    OutputDocument doc;
    doc.payload = {{"command", "terms"}, {"order", h}, {"terms", rationals(u)}};
    doc.text = join(u) + "\n";
    return doc;
}

OutputDocument cmd_hadamard(const std::string& f, const std::string& g) {
    auto result = hadamard_product(parse_gf(f), parse_gf(g));
    OutputDocument doc;
    doc.payload = {{"command", "hadamard"}, {"gf", to_json(result.gf)}, {"verified_to", result.verified_to}};
    doc.text = result.gf.to_string() + "\n";
    return doc;
}

OutputDocument cmd_sumsq(int h) {
    auto r = sum_of_squares_identity(h);
    OutputDocument doc;
    doc.ok = r.termwise.ok();
    doc.payload = {{"command", "sumsq"}, {"report", to_json(r)}};

    std::ostringstream out;
    out << "order " << r.order << "\n"
        << "constant " << r.constant.to_string() << "\n"
        << "basis t_n = " << r.scale.to_string() << " * u_n * u_{n+" << r.basis_shift << "}\n"
        << "global_factor " << r.global_factor.to_string() << "\n"
        << "coefficients " << join(r.coefficients) << "\n"
        << "identity sum_{k=0}^{n} u_k^2 = constant + global_factor * sum_i coefficients[i] * t_{n-i}, n >= 1\n"
        << "verified n = " << r.termwise.n_lo << ".." << r.termwise.n_hi
        << ", max |discrepancy| = " << r.termwise.max_abs_discrepancy.to_string() << "\n";
    doc.text = out.str();
    return doc;
}

OutputDocument cmd_binet(int h, std::optional<long> n) {
    if (n && *n < 0 && *n != kBinetTable) throw std::invalid_argument("n must be >= 0 or \"table\"");
    auto s = kbonacci(h);
    auto d = binet_coefficients(h, s);

    OutputDocument doc;
    json roots_json = json::array();
    json coeffs_json = json::array();
    std::ostringstream out;
    out << "order " << h << "\nroots\n";
    for (std::size_t j = 0; j < d.roots.size(); ++j) {
        roots_json.push_back(to_json(d.roots[j]));
        out << "  r_" << j << " = " << format_complex(d.roots[j]) << "\n";
    }
    out << "coefficients of r_j^{-n}\n";
    for (std::size_t j = 0; j < d.coefficients.size(); ++j) {
        coeffs_json.push_back(to_json(d.coefficients[j]));
        out << "  c_" << j << " = " << format_complex(d.coefficients[j]) << "\n";
    }

    json evals = json::array();
    if (n) {
        long lo = *n == kBinetTable ? 0 : *n;
        long hi = *n == kBinetTable ? kTableEnd : *n;
        for (long k = lo; k <= hi; ++k) {
            BigRational exact = term(s, k);
            ComplexValue b = binet_eval(d, k);
            double x = exact.to_double();
            double err = std::abs(b - x);
            bool ok = err <= kBinetAgreement * std::max(1.0, std::abs(x));
            doc.ok = doc.ok && ok;
            evals.push_back({{"n", k}, {"exact", to_json(exact)}, {"binet", to_json(b)}, {"abs_error", err}, {"ok", ok}});
            out << "n = " << k << "  exact = " << exact.to_string() << "  binet = " << format_complex(b)
                << "  |error| = " << format_real(err, 3) << (ok ? "" : "  FAIL") << "\n";
        }
    }
    doc.payload = {{"command", "binet"}, {"order", h}, {"roots", roots_json}, {"coefficients", coeffs_json},
                   {"evaluations", evals}};
    doc.text = out.str();
    return doc;
}

OutputDocument cmd_check_bfile(const std::string& path, int h, long shift) {
    auto s = kbonacci(h);
    auto cmp = compare_bfile(read_bfile(path), s, shift);
    OutputDocument doc;
    doc.ok = cmp.ok();
    json mismatch = nullptr;
    std::ostringstream out;
    out << "checked " << cmp.checked << " entries against order " << h << " (shift " << shift << "): ";
    if (cmp.first_mismatch) {
        const auto& m = *cmp.first_mismatch;
        mismatch = {{"index", m.index}, {"file_value", m.file_value.get_str()}, {"expected", to_json(m.expected)}};
        out << "mismatch at index " << m.index << ": file has " << m.file_value.get_str() << ", expected "
            << m.expected.to_string() << "\n";
    } else {
        out << "agreement\n";
    }
    doc.payload = {{"command", "check-bfile"}, {"order", h},       {"shift", shift},
                   {"checked", cmp.checked},   {"agreement", doc.ok}, {"first_mismatch", mismatch}};
    doc.text = out.str();
    return doc;
}

OutputDocument cmd_verify_schumacher(long n_max, const SchumacherForm& form) {
    auto check = verify_schumacher(n_max, form);
    bool equivalent = equivalence_check(sum_of_squares_identity(4), schumacher_rhs_gf(form));
    OutputDocument doc;
    doc.ok = check.ok() && equivalent;

    json witness = nullptr;
    std::ostringstream out;
    out << "term-wise 1 <= n <= " << n_max << ": " << pass_fail(check.termwise.ok());
    if (check.termwise.witness) {
        witness = *check.termwise.witness;
        out << " (first discrepancy at n = " << *check.termwise.witness << ")";
    }
    out << "\ngenerating function: " << pass_fail(check.gf_equal) << "\n"
        << "equivalent to the t_n form (h = 4): " << pass_fail(equivalent) << "\n";
    doc.payload = {{"command", "verify-schumacher"},
                   {"n_max", n_max},
                   {"termwise", check.termwise.ok()},
                   {"witness", witness},
                   {"max_abs_discrepancy", to_json(check.termwise.max_abs_discrepancy)},
                   {"gf_equal", check.gf_equal},
                   {"equivalent", equivalent}};
    doc.text = out.str();
    return doc;
}

}  // namespace seqlab
