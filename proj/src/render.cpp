#include "seqlab/render.hpp"

#include "seqlab/hadamard.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace seqlab {

json to_json(const BigRational& q) { return q.to_string(); }

json to_json(const Polynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

json to_json(const RationalFunction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const ComplexValue& c) { return {{"re", c.real()}, {"im", c.imag()}}; }

json to_json(const IdentityReport& r) {
    json lambda = json::array();
    for (const auto& c : r.coefficients) lambda.push_back(c.to_string());
    return {
        {"order", r.order},
        {"constant", r.constant.to_string()},
        {"scale", r.scale.to_string()},
        {"basis_shift", r.basis_shift},
        {"coefficients", lambda},
        {"global_factor", r.global_factor.to_string()},
        {"verified_from", r.termwise.n_lo},
        {"verified_to", r.termwise.n_hi},
        {"max_abs_discrepancy", r.termwise.max_abs_discrepancy.to_string()},
    };
}

BigRational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected an exact rational string");
    return BigRational::parse(j.get<std::string>());
}

Polynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a coefficient array");
    std::vector<BigRational> v;
    for (const auto& c : j) v.push_back(rational_from_json(c));
    return Polynomial(std::move(v));
}

RationalFunction ratfunc_from_json(const json& j) {
    return ratfunc_reduce(polynomial_from_json(j.at("num")), polynomial_from_json(j.at("den")));
}

ComplexValue complex_from_json(const json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

IdentityReport report_from_json(const json& j) {
    IdentityReport r;
    r.order = j.at("order").get<int>();
    r.constant = rational_from_json(j.at("constant"));
    r.scale = rational_from_json(j.at("scale"));
    r.basis_shift = j.at("basis_shift").get<int>();
    for (const auto& c : j.at("coefficients")) r.coefficients.push_back(rational_from_json(c));
    r.global_factor = rational_from_json(j.at("global_factor"));
    r.termwise.n_lo = j.at("verified_from").get<long>();
    r.termwise.n_hi = j.at("verified_to").get<long>();
    r.termwise.max_abs_discrepancy = rational_from_json(j.at("max_abs_discrepancy"));
    r.basis_gf = r.scale * shifted_product_gf(kbonacci(r.order), 0, -r.basis_shift);
    return r;
}

std::string format_real(double x, int digits) {
    std::ostringstream os;
    os << std::setprecision(digits) << (x == 0.0 ? 0.0 : x);
    return os.str();
}

std::string format_complex(const ComplexValue& c, int digits) {
    if (c.imag() == 0.0) return format_real(c.real(), digits);
    std::string out = format_real(c.real(), digits);
    out += c.imag() < 0 ? " - " : " + ";
    out += format_real(std::abs(c.imag()), digits);
    out += "i";
    return out;
}

}  // namespace seqlab
