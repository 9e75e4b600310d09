#pragma once

/**
 * @file render.hpp
 * @brief JSON and text renderings of library values.
 *
 * JSON: polynomials are arrays of exact rationals as strings ("p/q"),
 * rational functions are {"num": [...], "den": [...]}, complex numbers are
 * {"re": x, "im": y}. Every to_json has a from_json inverse.
 */

#include "seqlab/binet.hpp"
#include "seqlab/identity.hpp"
#include "seqlab/polynomial.hpp"
#include "seqlab/rational_function.hpp"

#include <json.hpp>

#include <string>

namespace seqlab {

using json = nlohmann::json;

json to_json(const BigRational& q);
json to_json(const Polynomial& p);
json to_json(const RationalFunction& f);
json to_json(const ComplexValue& c);
json to_json(const IdentityReport& r);

BigRational rational_from_json(const json& j);
Polynomial polynomial_from_json(const json& j);
RationalFunction ratfunc_from_json(const json& j);
ComplexValue complex_from_json(const json& j);
/// Restores the report fields; basis_gf is rebuilt from order, scale and shift.
IdentityReport report_from_json(const json& j);

/// Fixed 12 significant digits, e.g. "-0.114070631165 - 1.21674600397i".
std::string format_complex(const ComplexValue& c, int digits = 12);
std::string format_real(double x, int digits = 12);

}  // namespace seqlab
