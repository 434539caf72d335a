#pragma once

// Truncated formal power series over exact rationals. Every series carries
// an explicit truncation order K; mixing different orders or reading a
// coefficient beyond K is an error, never a silent truncation.

#include "shelf/rational.hpp"

#include <vector>

namespace shelf {

class TruncatedSeries {
  public:
    /// Zero series of the given order (coefficients c_0..c_K).
    explicit TruncatedSeries(int order);

    static TruncatedSeries one(int order);
    static TruncatedSeries monomial(int order, int power, const Rat& coeff);

    /// (1 + c t)^e, exact polynomial truncated at the series order.
    static TruncatedSeries binomial_pos(int order, const Rat& c, unsigned long e);

    /// (1 - c t)^(-e) = sum_k C(e+k-1, k) c^k t^k.
    static TruncatedSeries binomial_neg(int order, const Rat& c, unsigned long e);

    int order() const { return order_; }

    const Rat& coeff(int k) const;
    void set_coeff(int k, const Rat& value);

    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rat& s) const;

    TruncatedSeries pow(unsigned long e) const;

    /// Multiplicative inverse; requires a nonzero constant term.
    TruncatedSeries reciprocal() const;

    bool operator==(const TruncatedSeries&) const = default;

  private:
    void check_same_order(const TruncatedSeries& o) const;

    int order_ = 0;
    std::vector<Rat> c_;
};

} // namespace shelf
