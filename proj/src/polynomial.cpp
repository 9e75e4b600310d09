#include "seqlab/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace seqlab {

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const BigRational& c) { return Polynomial(std::vector<BigRational>{c}); }

Polynomial Polynomial::monomial(const BigRational& c, int k) {
    if (k < 0) throw std::invalid_argument("monomial: negative exponent");
    std::vector<BigRational> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
}

Polynomial poly_from_ints(std::initializer_list<long> coeffs) {
    std::vector<BigRational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational Polynomial::operator[](int i) const {
    if (i < 0 || i > degree()) return BigRational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

BigRational Polynomial::eval(const BigRational& z) const {
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= z;
        acc += *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return {};
    std::vector<BigRational> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * BigRational(static_cast<long>(i));
    return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return {};
    return *this * leading().reciprocal();
}

Polynomial Polynomial::reversed(int n) const {
    if (n < degree()) throw std::invalid_argument("reversed: n below degree");
    std::vector<BigRational> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= degree(); ++i) v[static_cast<std::size_t>(n - i)] = coeffs_[static_cast<std::size_t>(i)];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::truncated(int n) const {
    if (n <= 0) return {};
    auto end = coeffs_.begin() + std::min<std::ptrdiff_t>(n, static_cast<std::ptrdiff_t>(coeffs_.size()));
    return Polynomial(std::vector<BigRational>(coeffs_.begin(), end));
}

Polynomial Polynomial::divided_by_z_power(int k) const {
    if (k <= 0) return times_z_power(-k);
    for (int i = 0; i < k && i <= degree(); ++i) {
        if (!coeffs_[static_cast<std::size_t>(i)].is_zero()) {
            throw std::domain_error("divided_by_z_power: polynomial not divisible by z^k");
        }
    }
    if (k > degree()) return {};
    return Polynomial(std::vector<BigRational>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial Polynomial::times_z_power(int k) const {
    if (k < 0) return divided_by_z_power(-k);
    if (is_zero() || k == 0) return *this;
    std::vector<BigRational> v(static_cast<std::size_t>(k));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const BigRational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        BigRational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == BigRational(1);
        if (i == 0) {
            os << mag;
            continue;
        }
        if (!unit) {
            // a/b*z^k would parse as a/(b*z^k)
            if (mag.is_integer()) os << mag << "*";
            else os << "(" << mag << ")*";
        }
        os << "z";
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

DivRem poly_divrem(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw std::domain_error("poly_divrem: division by the zero polynomial");
    if (p.degree() < q.degree()) return {Polynomial{}, p};
    std::vector<BigRational> rem = p.coeffs();
    std::vector<BigRational> quot(static_cast<std::size_t>(p.degree() - q.degree()) + 1);
    const BigRational inv_lead = q.leading().reciprocal();
    const int dq = q.degree();
    for (int k = p.degree() - dq; k >= 0; --k) {
        BigRational c = rem[static_cast<std::size_t>(k + dq)] * inv_lead;
        quot[static_cast<std::size_t>(k)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(k + j)] -= c * q.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dq));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw std::domain_error("poly_gcd: both inputs are zero");
    Polynomial a = p;
    Polynomial b = q;
    while (!b.is_zero()) {
        Polynomial r = poly_divrem(a, b).remainder;
        a = std::move(b);
        // monic remainders keep coefficient growth in check
        b = r.monic();
    }
    return a.monic();
}

}  // namespace seqlab
