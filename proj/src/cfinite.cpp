#include "seqlab/cfinite.hpp"

#include <stdexcept>

namespace seqlab {

CFiniteSequence::CFiniteSequence(std::vector<BigRational> recurrence, std::vector<BigRational> initial)
    : recurrence_(std::move(recurrence)), initial_(std::move(initial)) {
    if (recurrence_.empty()) throw std::invalid_argument("CFiniteSequence: order must be positive");
    if (recurrence_.size() != initial_.size()) {
        throw std::invalid_argument("CFiniteSequence: recurrence and initial values differ in length");
    }
    if (recurrence_.back().is_zero()) throw std::invalid_argument("CFiniteSequence: trailing recurrence coefficient is zero");
}

std::vector<BigRational> CFiniteSequence::terms(int count) const {
    std::vector<BigRational> u;
    if (count <= 0) return u;
    u.reserve(static_cast<std::size_t>(count));
    const int h = order();
    for (int n = 0; n < count; ++n) {
        if (n < h) {
            u.push_back(initial_[static_cast<std::size_t>(n)]);
            continue;
        }
        BigRational acc;
        for (int i = 1; i <= h; ++i) {
            const auto& c = recurrence_[static_cast<std::size_t>(i - 1)];
            if (!c.is_zero()) acc += c * u[static_cast<std::size_t>(n - i)];
        }
        u.push_back(std::move(acc));
    }
    return u;
}

CFiniteSequence kbonacci(int h) {
    if (h < 2) throw std::invalid_argument("order must be >= 2");
    std::vector<BigRational> rec(static_cast<std::size_t>(h), BigRational(1));
    std::vector<BigRational> init(static_cast<std::size_t>(h));
    init[1] = 1;
    // zero-padded recurrence below the order: u_n = sum of all earlier terms
    for (int n = 2; n < h; ++n) {
        BigRational acc;
        for (int j = 0; j < n; ++j) acc += init[static_cast<std::size_t>(j)];
        init[static_cast<std::size_t>(n)] = acc;
    }
    return CFiniteSequence(std::move(rec), std::move(init));
}

RationalFunction to_gf(const CFiniteSequence& s) {
    const int h = s.order();
    std::vector<BigRational> den(static_cast<std::size_t>(h) + 1);
    den[0] = 1;
    for (int i = 1; i <= h; ++i) den[static_cast<std::size_t>(i)] = -s.recurrence()[static_cast<std::size_t>(i - 1)];
    Polynomial d(std::move(den));
    Polynomial n = (d * Polynomial(s.initial())).truncated(h);
    return ratfunc_reduce(n, d);
}

CFiniteSequence from_gf(const RationalFunction& f) {
    if (!f.is_proper()) throw std::invalid_argument("from_gf: improper rational function; split off the polynomial part first");
    const int h = f.den().degree();
    if (h < 1) throw std::invalid_argument("from_gf: constant denominator has no recurrence");
    std::vector<BigRational> rec(static_cast<std::size_t>(h));
    for (int i = 1; i <= h; ++i) rec[static_cast<std::size_t>(i - 1)] = -f.den()[i];
    return CFiniteSequence(std::move(rec), series_prefix(f, h));
}

BigRational term(const CFiniteSequence& s, long n) {
    if (n < 0) return BigRational(0);
    const auto h = static_cast<long>(s.order());
    if (n < h) return s.initial()[static_cast<std::size_t>(n)];
    // sliding window of the last h terms
    std::vector<BigRational> window = s.initial();
    std::size_t head = 0;  // index of the oldest term
    for (long k = h; k <= n; ++k) {
        BigRational acc;
        for (long i = 1; i <= h; ++i) {
            const auto& c = s.recurrence()[static_cast<std::size_t>(i - 1)];
            if (c.is_zero()) continue;
            std::size_t pos = (head + static_cast<std::size_t>(h - i)) % static_cast<std::size_t>(h);
            acc += c * window[pos];
        }
        window[head] = std::move(acc);
        head = (head + 1) % static_cast<std::size_t>(h);
    }
    return window[(head + static_cast<std::size_t>(h) - 1) % static_cast<std::size_t>(h)];
}

RationalFunction shift_gf(const RationalFunction& f, int k) {
    if (k >= 0) return ratfunc_reduce(f.num().times_z_power(k), f.den());
    const int m = -k;
    Polynomial head(series_prefix(f, m));
    Polynomial tail = f.num() - head * f.den();
    return ratfunc_reduce(tail.divided_by_z_power(m), f.den());
}

RationalFunction partial_sum(const RationalFunction& f) {
    return ratfunc_reduce(f.num(), f.den() * poly_from_ints({1, -1}));
}

}  // namespace seqlab
