#pragma once

// Casino-style randomness audits, all seeded Monte Carlo: card guessing
// with feedback under the run-tracking strategy, top-card retention, color
// changes, spacings, and longest cycles. Per-trial statistics are integers
// and accumulate into exact sums, so reports are identical for any thread
// count.

#include "shelf/exact.hpp"
#include "shelf/rational.hpp"
#include "shelf/rng.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shelf {

/// Play the guessing strategy against a revealed deck; returns the number
/// of correct guesses.
///
/// Strategy: first guess is card 1; after each reveal the guess is the
/// next-larger available card (ascending mode) or next-smaller (descending
/// mode) relative to the last seen card. The mode follows the last observed
/// step: a descent switches to descending, an ascent back to ascending.
/// When no card remains on the demanded side, guess the extreme available
/// card on the other end (largest when ascending, smallest when descending).
int guess_sequence(std::span<const std::int32_t> deck);
int guess_sequence(const Permutation& deck);

/// Exact mean and variance of the correct-guess count under a uniformly
/// shuffled deck: H_n and sum_{k=2..n} (1/k)(1 - 1/k).
std::pair<Rat, Rat> uniform_guess_moments(int n);

struct McReport {
    std::string statistic;
    int n = 0;
    long m = -1; // -1 means the uniform model
    long trials = 0;
    std::uint64_t seed = 0;
    std::string generator = kGeneratorVersion;
    Rat mean;
    Rat variance; // sample variance
    double std_error = 0.0;
    std::map<long, std::uint64_t> histogram;
    std::vector<std::pair<std::string, Rat>> extras;
};

struct McConfig {
    int n = 52;
    std::optional<long> shelves; // nullopt: uniform shuffles
    long trials = 10000;
    std::uint64_t seed = 0;
    int threads = 1;
};

McReport guessing_experiment(const McConfig& cfg);

/// Frequency that position 1 still holds card 1; extras track card 2 at
/// positions 1 and 2.
McReport top_card_test(const McConfig& cfg);

/// Adjacent color changes after one shuffle of a deck prepared with cards
/// 1..n/2 red on top; n must be even.
McReport color_change_test(const McConfig& cfg);

/// Histograms of D_j = |pos(card j) - pos(card j+1)| for j = 1..j_max.
std::vector<McReport> spacings_test(const McConfig& cfg, int j_max);

struct LongestCyclesReport {
    std::vector<McReport> shuffler; // L_1..L_k under the shelf model
    std::vector<McReport> uniform;  // same under uniform shuffles
    double ks_l1 = 0.0;             // KS distance between the two L_1 samples
};

/// Monte Carlo law of the k longest cycle lengths, shuffler vs uniform.
LongestCyclesReport longest_cycles_stat(const ShelfSpec& spec, long trials,
                                        std::uint64_t seed, int k, int threads = 1);

} // namespace shelf
