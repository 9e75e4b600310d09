#include "seqlab/gf_parser.hpp"

#include <cctype>
#include <limits>

namespace seqlab {

ParseError::ParseError(std::size_t column, const std::string& what)
    : std::runtime_error("parse error at column " + std::to_string(column) + ": " + what), column_(column) {}

namespace {

/// num/den kept coprime; den may vanish at 0 until the final normalization.
struct Fraction {
    Polynomial num;
    Polynomial den = Polynomial::constant(1);
};

Fraction make_fraction(Polynomial num, Polynomial den) {
    if (num.is_zero()) return {};
    Polynomial g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_divrem(num, g).quotient;
        den = poly_divrem(den, g).quotient;
    }
    BigRational lead = den.leading().reciprocal();
    return {num * lead, den * lead};
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Fraction parse() {
        Fraction f = expr();
        skip_ws();
        if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_ + 1, what); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Fraction expr() {
        Fraction acc = term();
        for (;;) {
            if (accept('+')) {
                Fraction rhs = term();
                acc = make_fraction(acc.num * rhs.den + rhs.num * acc.den, acc.den * rhs.den);
            } else if (accept('-')) {
                Fraction rhs = term();
                acc = make_fraction(acc.num * rhs.den - rhs.num * acc.den, acc.den * rhs.den);
            } else {
                return acc;
            }
        }
    }

    Fraction term() {
        Fraction acc = unary();
        for (;;) {
            if (accept('*')) {
                Fraction rhs = unary();
                acc = make_fraction(acc.num * rhs.num, acc.den * rhs.den);
            } else if (accept('/')) {
                std::size_t at = pos_;
                Fraction rhs = unary();
                if (rhs.num.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                acc = make_fraction(acc.num * rhs.den, acc.den * rhs.num);
            } else {
                return acc;
            }
        }
    }

    Fraction unary() {
        if (accept('-')) {
            Fraction f = unary();
            return {-f.num, f.den};
        }
        if (accept('+')) return unary();
        return power();
    }

    Fraction power() {
        Fraction base = primary();
        if (!accept('^')) return base;
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("exponent must be a non-negative integer");
        }
        std::size_t start = pos_;
        unsigned long e = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
            if (e > 4096) {
                pos_ = start;
                fail("exponent too large");
            }
            ++pos_;
        }
        Fraction out{Polynomial::constant(1), Polynomial::constant(1)};
        for (unsigned long i = 0; i < e; ++i) out = {out.num * base.num, out.den * base.den};
        return make_fraction(out.num, out.den);
    }

    Fraction primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == 'z') {
            ++pos_;
            return {Polynomial::monomial(1, 1), Polynomial::constant(1)};
        }
        if (c == '(') {
            ++pos_;
            Fraction f = expr();
            if (!accept(')')) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            BigRational v(parse_bigint(text_.substr(start, pos_ - start)));
            return {Polynomial::constant(v), Polynomial::constant(1)};
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_gf(std::string_view text) {
    Fraction f = Parser(text).parse();
    return ratfunc_reduce(f.num, f.den);
}

}  // namespace seqlab
