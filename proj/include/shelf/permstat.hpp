#pragma once

// Per-permutation statistics: valleys, peaks, descents, cyclic descents
// (signed), cycle type, RSK shape, and the valley-count table v(n,k).

#include "shelf/partition.hpp"
#include "shelf/permutation.hpp"
#include "shelf/rational.hpp"

#include <vector>

namespace shelf {

/// #{i : 1 < i < n, w(i-1) > w(i) < w(i+1)}.
int valleys(const Permutation& w);

/// #{i : 1 < i < n, w(i-1) < w(i) > w(i+1)}.
int peaks(const Permutation& w);

struct DescentInfo {
    int count = 0;
    std::vector<int> positions; // ascending, subset of 1..n-1
};

DescentInfo descents(const Permutation& w);

/// Cyclic descents of a signed permutation under the total order
/// 1 < 2 < ... < n < -n < ... < -2 < -1:
///   - interior position i (1 <= i <= n-1) when w(i) > w(i+1),
///   - position n when w(n) < 0,
///   - position 1 when w(1) > 0.
/// Position 1 can satisfy both the interior and the boundary rule and then
/// counts twice.
int cyclic_descents(const SignedPermutation& w);

/// Cycle lengths, sorted decreasing; they sum to n.
std::vector<int> cycle_type(const Permutation& w);

/// Shape of the insertion tableau under row-insertion RSK.
Partition rsk_shape(const Permutation& w);

/// v(n,k): number of permutations of n symbols with exactly k valleys,
/// filled by the recurrence v(n,k) = (2k+2) v(n-1,k) + (n-2k) v(n-1,k-1)
/// with v(1,0) = 1. Entries are big integers; row n sums to n!.
class ValleyTable {
  public:
    explicit ValleyTable(int n_max);

    int n_max() const { return n_max_; }

    /// v(n,k); zero outside 0 <= k <= floor((n-1)/2).
    const Int& at(int n, int k) const;

    static int max_valleys(int n) { return (n - 1) / 2; }

  private:
    int n_max_;
    std::vector<std::vector<Int>> rows_; // rows_[n-1][k]
    Int zero_;
};

} // namespace shelf
