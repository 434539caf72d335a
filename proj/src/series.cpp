#include "shelf/series.hpp"

#include "shelf/errors.hpp"

namespace shelf {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 0) throw InputError("TruncatedSeries: negative order");
    c_.assign(static_cast<size_t>(order) + 1, Rat(0));
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.c_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int power, const Rat& coeff) {
    TruncatedSeries s(order);
    if (power < 0 || power > order)
        throw InputError("TruncatedSeries::monomial: power out of range");
    s.c_[static_cast<size_t>(power)] = coeff;
    return s;
}

TruncatedSeries TruncatedSeries::binomial_pos(int order, const Rat& c, unsigned long e) {
    TruncatedSeries s(order);
    Rat cp(1);
    for (int k = 0; k <= order; ++k) {
        if (static_cast<unsigned long>(k) > e) break;
        s.c_[static_cast<size_t>(k)] = Rat(binom(static_cast<long>(e), k)) * cp;
        cp *= c;
    }
    return s;
}

TruncatedSeries TruncatedSeries::binomial_neg(int order, const Rat& c, unsigned long e) {
    TruncatedSeries s(order);
    Rat cp(1);
    for (int k = 0; k <= order; ++k) {
        s.c_[static_cast<size_t>(k)] =
            Rat(binom(static_cast<long>(e) + k - 1, k)) * cp;
        cp *= c;
    }
    return s;
}

void TruncatedSeries::check_same_order(const TruncatedSeries& o) const {
    if (order_ != o.order_)
        throw InputError("TruncatedSeries: mixed truncation orders " +
                         std::to_string(order_) + " vs " + std::to_string(o.order_));
}

const Rat& TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order_)
        throw InputError("TruncatedSeries::coeff: index " + std::to_string(k) +
                         " beyond truncation order " + std::to_string(order_));
    return c_[static_cast<size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, const Rat& value) {
    if (k < 0 || k > order_)
        throw InputError("TruncatedSeries::set_coeff: index out of range");
    c_[static_cast<size_t>(k)] = value;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    check_same_order(o);
    TruncatedSeries r(order_);
    for (int k = 0; k <= order_; ++k)
        r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] + o.c_[static_cast<size_t>(k)];
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    check_same_order(o);
    TruncatedSeries r(order_);
    for (int k = 0; k <= order_; ++k)
        r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] - o.c_[static_cast<size_t>(k)];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check_same_order(o);
    TruncatedSeries r(order_);
    for (int i = 0; i <= order_; ++i) {
        if (c_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (o.c_[static_cast<size_t>(j)] == 0) continue;
            r.c_[static_cast<size_t>(i + j)] +=
                c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rat& s) const {
    TruncatedSeries r(order_);
    for (int k = 0; k <= order_; ++k) r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] * s;
    return r;
}

TruncatedSeries TruncatedSeries::pow(unsigned long e) const {
    TruncatedSeries base = *this;
    TruncatedSeries acc = TruncatedSeries::one(order_);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::reciprocal() const {
    if (c_[0] == 0)
        throw InputError("TruncatedSeries::reciprocal: zero constant term");
    TruncatedSeries r(order_);
    Rat inv0 = Rat(1) / c_[0];
    r.c_[0] = inv0;
    for (int k = 1; k <= order_; ++k) {
        Rat s(0);
        for (int j = 1; j <= k; ++j)
            s += c_[static_cast<size_t>(j)] * r.c_[static_cast<size_t>(k - j)];
        r.c_[static_cast<size_t>(k)] = -s * inv0;
    }
    return r;
}

} // namespace shelf
