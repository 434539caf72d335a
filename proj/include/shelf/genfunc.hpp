#pragma once

// Generating-function evaluators for the shuffler's test statistics:
// cycle counts, RSK shape, and descents, plus the closed-form descent
// moments. All distributions are exact rationals.

#include "shelf/exact.hpp"
#include "shelf/partition.hpp"
#include "shelf/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace shelf {

/// One exact discrete distribution. Support entries keep both a display
/// label and (when the statistic is integer-valued) the integer value.
class DiscreteDist {
  public:
    struct Entry {
        std::string label;
        long value = 0;     // meaningful iff integer_support
        Rat prob;
    };

    DiscreteDist(std::string statistic, int n, long m, bool integer_support)
        : statistic_(std::move(statistic)), n_(n), m_(m),
          integer_support_(integer_support) {}

    void add(long value, const Rat& p);
    void add(const std::string& label, const Rat& p);
    void set_tail(const Rat& t) { tail_ = t; }

    const std::string& statistic() const { return statistic_; }
    int n() const { return n_; }
    long m() const { return m_; }
    bool integer_support() const { return integer_support_; }
    const std::vector<Entry>& entries() const { return entries_; }
    const Rat& tail() const { return tail_; }

    /// Sum of probabilities (excluding the reported tail).
    Rat total() const;

    /// Probability of an integer support value (zero if absent).
    Rat prob_of(long value) const;

    /// Mean and variance; integer support only.
    Rat mean() const;
    Rat variance() const;

  private:
    std::string statistic_;
    int n_;
    long m_; // -1 when no shelf count applies
    bool integer_support_;
    std::vector<Entry> entries_;
    Rat tail_ = Rat(0);
};

/// f_{i,m} = (1/2i) sum_{d | i, d odd} mu(d) (2m)^{i/d}; always a
/// nonnegative integer (divisibility is asserted).
Int f_im(int i, long m);

/// f_{1,m}..f_{i_max,m} in one sweep.
std::vector<Int> f_im_table(int i_max, long m);

/// Moebius function.
int moebius(long d);

/// Exact distribution of the number of i-cycles of a permutation produced
/// by the shuffler, extracted from the cycle-type product formula as the
/// coefficient of u^n. order_override (if nonzero) must be >= n.
DiscreteDist cycle_count_dist(const ShelfSpec& spec, int i, int order_override = 0);

/// Large-n limit of the number of i-cycles: convolution of
/// Binomial(f_{i,m}, 1/((2m)^i + 1)) and NegativeBinomial(f_{i,m}, (1/2m)^i),
/// truncated once cumulative mass reaches 1 - tail_eps; tail reported.
DiscreteDist cycle_limit_law(long m, int i, const Rat& tail_eps);

/// cycle_limit_law for fixed points (i = 1) with the default 1e-12 tail.
DiscreteDist fixed_point_limit_law(long m);

/// S_lambda specialized at y_1 = ... = y_m = 1/m: the determinant
/// det(q_{lambda_i - i + j}) where sum q_r t^r = ((1+t/m)/(1-t/m))^m.
Rat schur_s(const Partition& lambda, long m);

/// Exact distribution of the RSK shape of a shuffled permutation:
/// P(shape = lambda) = f_lambda / 2^n * S_lambda(1/m, ..., 1/m).
/// Partitions are listed in reverse-lexicographic order.
DiscreteDist rsk_shape_dist(const ShelfSpec& spec);

/// Exact distribution of the descent count of the inverse reading of a
/// shuffled deck (the direction in which the product-formula identity
/// holds; see tests for the enumeration this is pinned against):
///   sum_w P_m(w) t^{d(w^-1)+1}
///     = (1-t)^{n+1}/2^n sum_{k>=1} t^k [u^n] ((1+u/m)/(1-u/m))^{km}.
/// The k-sum is evaluated to n+3 and the t^{n+1..n+3} coefficients are
/// asserted to vanish, guarding against truncating the sum too early.
DiscreteDist descent_dist(const ShelfSpec& spec);

/// Closed forms: mean (n-1)/2, variance (n+1)/12 + (n-2)/(6 m^2); n >= 2.
std::pair<Rat, Rat> descent_moments(const ShelfSpec& spec);

} // namespace shelf
