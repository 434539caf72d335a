#pragma once

// Exact big-integer / big-rational arithmetic helpers. All probability
// computations in this library are carried out over mpq end to end;
// decimal conversion happens only at the output boundary.

#include <gmpxx.h>

#include <string>

namespace shelf {

using Int = mpz_class;
using Rat = mpq_class;

/// Binomial coefficient with the vanishing convention: zero whenever
/// bottom < 0 or top < bottom. The sums in this library rely on that.
Int binom(long top, long bottom);

/// Binomial coefficient C(top, k) for arbitrarily large integer top and
/// small k, via the falling factorial.
Int binom_big(const Int& top, unsigned long k);

Int factorial_int(unsigned long n);

/// Rational from a numerator/denominator pair, canonicalized.
Rat make_rat(const Int& num, const Int& den);

/// Fixed-point decimal rendering with round-half-even, e.g. 0.720.
/// digits >= 0 is the number of fractional digits.
std::string decimal_string(const Rat& q, int digits);

/// "num/den" form (lowest terms).
std::string rational_string(const Rat& q);

double to_double(const Rat& q);

} // namespace shelf
