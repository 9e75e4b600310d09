#pragma once

/**
 * @file bigrational.hpp
 * @brief Arbitrary-precision rationals with a canonical p/q representation.
 *
 * Thin value type over GMP's mpq. Every value is kept canonical:
 * gcd(|p|, q) = 1, q > 0, and zero is 0/1.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace seqlab {

using BigInt = mpz_class;

class BigRational {
public:
    BigRational() = default;
    BigRational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(int v) : value_(v) {}   // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
    BigRational(const BigInt& num, const BigInt& den);
    BigRational(long num, long den);

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input
    /// or a zero denominator.
    static BigRational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }

    BigRational abs() const;
    BigRational reciprocal() const;

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    BigRational& operator+=(const BigRational& o) { value_ += o.value_; return *this; }
    BigRational& operator-=(const BigRational& o) { value_ -= o.value_; return *this; }
    BigRational& operator*=(const BigRational& o) { value_ *= o.value_; return *this; }
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const;

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    const mpq_class& raw() const { return value_; }

private:
    explicit BigRational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

/// Parses a (possibly signed) decimal integer. Throws std::invalid_argument.
BigInt parse_bigint(std::string_view text);

}  // namespace seqlab
