#pragma once

// Seedable simulators for the shelf shuffler (three equivalent sampling
// routes), exact small-n shuffle laws by label enumeration, exact
// convolution, and the birthday bound on separation.
//
// Convention, fixed here and asserted by tests: a sample is the deck read
// top-to-bottom after the label-sort process (cards labeled 1 on top in
// original order, label-2 packet beneath reversed, and so on). Under this
// reading the 1-shelf machine produces exactly the valley-free permutations
// uniformly. Route 2 natively yields the inverse reading and route 3 the
// destination map; both are converted before returning.

#include "shelf/exact.hpp"
#include "shelf/permutation.hpp"
#include "shelf/rational.hpp"
#include "shelf/rng.hpp"
#include "shelf/sign_string.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace shelf {

struct ShuffleSample {
    Permutation permutation;
    int provenance = 0;              // which description generated it
    std::vector<std::int32_t> labels; // raw randomness, when meaningful
};

/// Deterministic reorder per the label-sort rule; labels[i] in 1..two_m is
/// the label of card i+1. Empty packets still count in the alternation.
Permutation shelf_shuffle_from_labels(std::span<const std::int32_t> labels, int two_m);

/// Same, unloading shelves in the given order (shelf s covers labels
/// 2s-1, 2s). The distribution is unchanged by the unload order; a test
/// verifies that exactly.
Permutation shelf_shuffle_from_labels(std::span<const std::int32_t> labels, int two_m,
                                      std::span<const std::int32_t> shelf_order);

ShuffleSample sample_description1(const ShelfSpec& spec, RngStream& rng);
ShuffleSample sample_description2(const ShelfSpec& spec, RngStream& rng);
ShuffleSample sample_description3(const ShelfSpec& spec, RngStream& rng);

/// Allocation-free description-1 sampler for hot Monte Carlo loops.
class DeckSampler {
  public:
    explicit DeckSampler(ShelfSpec spec);

    /// Fills `deck` (size n, values 1..n) with a fresh sample.
    void sample(RngStream& rng, std::vector<std::int32_t>& deck);

    const ShelfSpec& spec() const { return spec_; }

  private:
    ShelfSpec spec_;
    std::vector<std::int32_t> labels_;
    std::vector<std::int32_t> start_;
    std::vector<std::int32_t> fill_;
};

/// Uniform random permutation of 1..n (Fisher-Yates), for baselines.
void sample_uniform_deck(int n, RngStream& rng, std::vector<std::int32_t>& deck);

using PermDist = std::map<Permutation, Rat>;

/// Exact law of the x-shuffle on S_n by enumerating all |x|^n label
/// vectors (signed label-sort: '-' packets reversed). Guarded: throws
/// SizeError when |x|^n exceeds 10^7.
PermDist x_shuffle_exact_dist(const SignString& x, int n);

/// Exact m-shelf law on S_n; equals x_shuffle_exact_dist((+-)^m, n).
PermDist shelf_exact_dist(const ShelfSpec& spec);

/// Exact convolution (p*q)(w) = sum_v p(v) q(w v^{-1}).
PermDist convolve_exact(const PermDist& p, const PermDist& q);

/// Birthday bound on separation for an x-shuffle with a piles:
/// 1 - prod_{i=1}^{n-1} (1 - i/a); equals 1 when a <= n-1.
Rat separation_bound(long a, int n);
Rat separation_bound(const SignString& x, int n);

} // namespace shelf
