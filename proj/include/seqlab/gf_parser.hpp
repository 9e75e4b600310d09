#pragma once

/**
 * @file gf_parser.hpp
 * @brief Parser for rational generating functions written in ASCII.
 *
 * Grammar (whitespace ignored, no implicit multiplication):
 *
 *   expr    := term (('+' | '-') term)*
 *   term    := unary (('*' | '/') unary)*
 *   unary   := ('+' | '-') unary | power
 *   power   := primary ('^' integer)?
 *   primary := integer | 'z' | '(' expr ')'
 *
 * Example: "z/(1-z-z^2-z^3-z^4)".
 */

#include "seqlab/rational_function.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace seqlab {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t column, const std::string& what);
    /// 1-based column of the offending character.
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

/// Throws ParseError on syntax errors and std::domain_error when the
/// reduced denominator vanishes at z = 0.
RationalFunction parse_gf(std::string_view text);

}  // namespace seqlab
