#pragma once

// Exact distribution of one pass through an m-shelf shuffler: probability
// of a permutation by valley count, the signed/unsigned hyperoctahedral
// variants it rests on, exact distances to uniformity, and the closed-form
// large-n asymptotics for the l-infinity and separation distances.

#include "shelf/permstat.hpp"
#include "shelf/permutation.hpp"
#include "shelf/rational.hpp"

#include <utility>

namespace shelf {

struct ShelfSpec {
    int n = 0;  // deck size
    long m = 0; // shelf count

    ShelfSpec(int n_, long m_);
};

/// Chance that the shuffler outputs any fixed permutation with v valleys:
///   4^(v+1) / (2 (2m)^n) * sum_{a=0}^{n-1} C(n+m-a-1, n) C(n-1-2v, a-v).
Rat shelf_prob_by_valleys(const ShelfSpec& spec, int v);

/// shelf_prob_by_valleys at v = valleys(w).
Rat shelf_prob(const ShelfSpec& spec, const Permutation& w);

/// The same probability extracted as [t^m] of
///   (1/(2 (2m)^n)) (1+t)^(n+1)/(1-t)^(n+1) (4t/(1+t)^2)^(v+1)
/// via the series engine. Agrees with shelf_prob_by_valleys exactly.
Rat shelf_prob_gf_check(const ShelfSpec& spec, int v);

/// Chance of a signed permutation after a 2m-shuffle on the signed
/// permutation group: C(m + n - cd(w^{-1}), n) / (2m)^n.
Rat bn_signed_prob(const ShelfSpec& spec, const SignedPermutation& w);

/// Chance of an unsigned permutation after the 2m-shuffle above followed by
/// forgetting signs; same shape as the shelf formula with peaks(w^{-1}).
Rat unsigned_bn_prob(const ShelfSpec& spec, const Permutation& w);

struct DistanceReport {
    int n = 0;
    long m = 0;
    Rat tv;   // total variation
    Rat sep;  // separation
    Rat linf; // l-infinity (can exceed 1)
    int sep_class = 0;  // valley class attaining sep
    int linf_class = 0; // valley class attaining linf
};

/// Exact tv/sep/linf distances to the uniform distribution.
/// sep and linf are attained at one of the two extreme valley classes
/// (v = 0 or v = floor((n-1)/2)); scan_all additionally checks every class
/// and throws if the extremes are not maximal.
DistanceReport distances(const ShelfSpec& spec, const ValleyTable& table,
                         bool scan_all = false);

/// Limits for m = c n^(3/2), n -> infinity:
///   linf -> e^(1/(12 c^2)) - 1,   sep -> 1 - e^(-1/(24 c^2)).
/// Returns (linf_limit, sep_limit); requires c > 0.
std::pair<double, double> asymptotic_distances(double c);

} // namespace shelf
