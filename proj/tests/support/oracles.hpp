#pragma once

// Test-side oracles, independent of the library implementations they check:
// brute-force enumerations, recurrences, and statistical helpers.

#include "shelf/partition.hpp"
#include "shelf/permutation.hpp"
#include "shelf/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracles {

inline std::vector<shelf::Permutation> all_permutations(int n) {
    std::vector<std::int32_t> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<shelf::Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// All 2^n signed lifts of an unsigned permutation.
inline std::vector<shelf::SignedPermutation> signed_lifts(const shelf::Permutation& w) {
    const int n = w.size();
    std::vector<shelf::SignedPermutation> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::int32_t> v(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i)
            v[static_cast<size_t>(i - 1)] = (mask >> (i - 1)) & 1u ? -w(i) : w(i);
        out.emplace_back(std::move(v));
    }
    return out;
}

/// Standard Young tableaux of a shape, counted by corner-removal recursion
/// (independent of the hook-length formula).
inline shelf::Int syt_count_brute(const std::vector<int>& parts) {
    if (parts.empty()) return 1;
    shelf::Int total = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        const bool corner =
            (i + 1 == parts.size()) || (parts[i + 1] < parts[i]);
        if (!corner) continue;
        std::vector<int> rest = parts;
        if (rest[i] == 1)
            rest.erase(rest.begin() + static_cast<long>(i));
        else
            --rest[i];
        total += syt_count_brute(rest);
    }
    return total;
}

/// Eulerian numbers A(n, j) = #{w in S_n : d(w) = j}, by the standard
/// recurrence.
inline std::vector<shelf::Int> eulerian_row(int n) {
    std::vector<shelf::Int> row{1}; // n = 1
    for (int k = 2; k <= n; ++k) {
        std::vector<shelf::Int> next(static_cast<size_t>(k), 0);
        for (int j = 0; j < k; ++j) {
            shelf::Int a = j < static_cast<int>(row.size()) ? row[static_cast<size_t>(j)] : shelf::Int(0);
            shelf::Int b = (j - 1) >= 0 && (j - 1) < static_cast<int>(row.size())
                               ? row[static_cast<size_t>(j - 1)]
                               : shelf::Int(0);
            next[static_cast<size_t>(j)] = (j + 1) * a + (k - j) * b;
        }
        row = std::move(next);
    }
    return row;
}

/// Upper chi-square quantile by the Wilson-Hilferty approximation; good to
/// a fraction of a percent at the dof used here.
inline double chi2_critical(int dof, double z_alpha = 3.090232306167813 /* 99.9% */) {
    const double d = static_cast<double>(dof);
    const double t = 1.0 - 2.0 / (9.0 * d) + z_alpha * std::sqrt(2.0 / (9.0 * d));
    return d * t * t * t;
}

/// Goodness-of-fit statistic sum (obs - exp)^2 / exp.
inline double chi2_gof(const std::vector<double>& observed,
                       const std::vector<double>& expected) {
    double s = 0;
    for (size_t i = 0; i < observed.size(); ++i) {
        const double e = expected[i];
        const double d = observed[i] - e;
        s += d * d / e;
    }
    return s;
}

/// Two-sample statistic sum (c1 - c2)^2 / (c1 + c2) for equal sample sizes.
inline double chi2_two_sample(const std::vector<double>& c1,
                              const std::vector<double>& c2) {
    double s = 0;
    for (size_t i = 0; i < c1.size(); ++i) {
        const double tot = c1[i] + c2[i];
        if (tot == 0) continue;
        const double d = c1[i] - c2[i];
        s += d * d / tot;
    }
    return s;
}

} // namespace oracles
