#include "shelf/audits.hpp"

#include "shelf/errors.hpp"
#include "shelf/kernels.hpp"
#include "shelf/machine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace shelf {

int guess_sequence(std::span<const std::int32_t> deck) {
    const int n = static_cast<int>(deck.size());
    std::vector<std::int32_t> avail(static_cast<size_t>(n));
    std::iota(avail.begin(), avail.end(), 1);
    int correct = 0;
    std::int32_t last = 0;
    std::int32_t prev = 0;
    bool ascending = true;
    for (int k = 0; k < n; ++k) {
        const std::int32_t card = deck[static_cast<size_t>(k)];
        std::int32_t guess;
        if (ascending) {
            auto it = std::upper_bound(avail.begin(), avail.end(), last);
            guess = (it != avail.end()) ? *it : avail.back();
        } else {
            auto it = std::lower_bound(avail.begin(), avail.end(), last);
            guess = (it != avail.begin()) ? *(it - 1) : avail.front();
        }
        if (guess == card) ++correct;
        avail.erase(std::lower_bound(avail.begin(), avail.end(), card));
        if (k >= 1) ascending = card > prev;
        prev = card;
        last = card;
    }
    return correct;
}

int guess_sequence(const Permutation& deck) {
    return guess_sequence(deck.one_line());
}

std::pair<Rat, Rat> uniform_guess_moments(int n) {
    if (n < 1) throw InputError("uniform_guess_moments: n must be >= 1");
    Rat mean(0), var(0);
    for (int k = 1; k <= n; ++k) mean += make_rat(1, Int(k));
    for (int k = 2; k <= n; ++k) {
        Rat p = make_rat(1, Int(k));
        var += p * (Rat(1) - p);
    }
    return {mean, var};
}

namespace {

// One accumulator per worker; merged after join. All fields are integers,
// so neither the merge order nor the thread count can change a report.
struct StatAcc {
    std::uint64_t count = 0;
    std::uint64_t sum = 0;
    std::uint64_t sumsq = 0;
    std::map<long, std::uint64_t> hist;
    std::vector<std::uint64_t> counters; // audit-specific extras

    void record(long v) {
        ++count;
        sum += static_cast<std::uint64_t>(v);
        sumsq += static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(v);
        ++hist[v];
    }

    void merge(const StatAcc& o) {
        count += o.count;
        sum += o.sum;
        sumsq += o.sumsq;
        for (const auto& [k, c] : o.hist) hist[k] += c;
        if (counters.size() < o.counters.size()) counters.resize(o.counters.size(), 0);
        for (size_t i = 0; i < o.counters.size(); ++i) counters[i] += o.counters[i];
    }
};

// Each worker draws its deck from trial-indexed streams, so the partition
// into chunks is invisible in the results.
struct DeckSource {
    int n;
    std::uint64_t seed;
    std::optional<DeckSampler> sampler;
    std::vector<std::int32_t> deck;

    DeckSource(const McConfig& cfg) : n(cfg.n), seed(cfg.seed) {
        if (cfg.shelves) sampler.emplace(ShelfSpec(cfg.n, *cfg.shelves));
    }

    std::span<const std::int32_t> draw(long trial) {
        RngStream rng(seed, static_cast<std::uint64_t>(trial));
        if (sampler)
            sampler->sample(rng, deck);
        else
            sample_uniform_deck(n, rng, deck);
        return deck;
    }
};

// PerTrial: (DeckSource&, long trial, StatAcc&) -> void
template <typename PerTrial>
StatAcc run_trials(const McConfig& cfg, PerTrial per_trial) {
    if (cfg.trials < 1) throw InputError("trials must be >= 1");
    if (cfg.n < 1) throw InputError("deck size must be >= 1");
    const int t_count = std::max(1, cfg.threads);
    std::vector<StatAcc> accs(static_cast<size_t>(t_count));
    const long chunk = (cfg.trials + t_count - 1) / t_count;
    auto worker = [&](int w) {
        DeckSource source(cfg);
        StatAcc& acc = accs[static_cast<size_t>(w)];
        const long lo = w * chunk;
        const long hi = std::min(cfg.trials, lo + chunk);
        for (long t = lo; t < hi; ++t) per_trial(source, t, acc);
    };
    if (t_count == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(t_count));
        for (int w = 0; w < t_count; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }
    StatAcc total;
    for (const auto& a : accs) total.merge(a);
    return total;
}

McReport finish_report(std::string statistic, const McConfig& cfg, const StatAcc& acc) {
    McReport rep;
    rep.statistic = std::move(statistic);
    rep.n = cfg.n;
    rep.m = cfg.shelves ? *cfg.shelves : -1;
    rep.trials = cfg.trials;
    rep.seed = cfg.seed;
    const auto cnt = static_cast<unsigned long>(acc.count);
    rep.mean = make_rat(Int(acc.sum), Int(cnt));
    if (cnt >= 2) {
        Int num = Int(cnt) * Int(acc.sumsq) - Int(acc.sum) * Int(acc.sum);
        rep.variance = make_rat(num, Int(cnt) * Int(cnt - 1));
    } else {
        rep.variance = Rat(0);
    }
    rep.std_error = std::sqrt(to_double(rep.variance) / static_cast<double>(cnt));
    rep.histogram = acc.hist;
    return rep;
}

} // namespace

McReport guessing_experiment(const McConfig& cfg) {
    auto acc = run_trials(cfg, [](DeckSource& src, long t, StatAcc& a) {
        a.record(guess_sequence(src.draw(t)));
    });
    return finish_report("guess_correct", cfg, acc);
}

McReport top_card_test(const McConfig& cfg) {
    const int n = cfg.n;
    auto acc = run_trials(cfg, [n](DeckSource& src, long t, StatAcc& a) {
        auto deck = src.draw(t);
        a.record(deck[0] == 1 ? 1 : 0);
        if (n >= 2) {
            if (a.counters.empty()) a.counters.assign(2, 0);
            if (deck[0] == 2) ++a.counters[0];
            if (deck[1] == 2) ++a.counters[1];
        }
    });
    McReport rep = finish_report("top_card_retention", cfg, acc);
    if (!acc.counters.empty()) {
        const Int trials(static_cast<unsigned long>(cfg.trials));
        rep.extras.emplace_back("card2_at_top", make_rat(Int(acc.counters[0]), trials));
        rep.extras.emplace_back("card2_second", make_rat(Int(acc.counters[1]), trials));
    }
    return rep;
}

McReport color_change_test(const McConfig& cfg) {
    const int n = cfg.n;
    if (n % 2 != 0)
        throw InputError("color_change_test: deck size must be even for the red/black split");
    const std::int32_t threshold = n / 2; // cards 1..n/2 are red
    auto acc = run_trials(cfg, [threshold](DeckSource& src, long t, StatAcc& a) {
        auto deck = src.draw(t);
        a.record(kernels::table().count_flips(deck.data(), deck.size(), threshold));
    });
    return finish_report("color_changes", cfg, acc);
}

std::vector<McReport> spacings_test(const McConfig& cfg, int j_max) {
    const int n = cfg.n;
    if (j_max < 1 || j_max >= n)
        throw InputError("spacings_test: j_max must be in 1..n-1");

    const int t_count = std::max(1, cfg.threads);
    std::vector<std::vector<StatAcc>> accs(
        static_cast<size_t>(t_count), std::vector<StatAcc>(static_cast<size_t>(j_max)));
    const long chunk = (cfg.trials + t_count - 1) / t_count;
    auto worker = [&](int w) {
        DeckSource source(cfg);
        std::vector<std::int32_t> pos(static_cast<size_t>(n) + 1);
        auto& acc = accs[static_cast<size_t>(w)];
        const long lo = w * chunk;
        const long hi = std::min(cfg.trials, lo + chunk);
        for (long t = lo; t < hi; ++t) {
            auto deck = source.draw(t);
            for (int i = 0; i < n; ++i)
                pos[static_cast<size_t>(deck[static_cast<size_t>(i)])] = i + 1;
            for (int j = 1; j <= j_max; ++j)
                acc[static_cast<size_t>(j - 1)].record(
                    std::abs(pos[static_cast<size_t>(j)] - pos[static_cast<size_t>(j + 1)]));
        }
    };
    if (t_count == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < t_count; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }

    std::vector<McReport> out;
    for (int j = 1; j <= j_max; ++j) {
        StatAcc total;
        for (const auto& wacc : accs) total.merge(wacc[static_cast<size_t>(j - 1)]);
        out.push_back(finish_report("spacing_D" + std::to_string(j), cfg, total));
    }
    return out;
}

namespace {

void longest_k(std::span<const std::int32_t> deck, int k, std::vector<char>& seen,
               std::vector<int>& out) {
    const int n = static_cast<int>(deck.size());
    seen.assign(static_cast<size_t>(n), 0);
    out.clear();
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<size_t>(s)]) continue;
        int len = 0;
        int c = s;
        while (!seen[static_cast<size_t>(c)]) {
            seen[static_cast<size_t>(c)] = 1;
            c = deck[static_cast<size_t>(c)] - 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    out.resize(static_cast<size_t>(k), 0);
}

double ks_from_histograms(const std::map<long, std::uint64_t>& h1, std::uint64_t n1,
                          const std::map<long, std::uint64_t>& h2, std::uint64_t n2) {
    double best = 0.0, c1 = 0.0, c2 = 0.0;
    auto i1 = h1.begin();
    auto i2 = h2.begin();
    while (i1 != h1.end() || i2 != h2.end()) {
        long x;
        if (i2 == h2.end() || (i1 != h1.end() && i1->first <= i2->first))
            x = i1->first;
        else
            x = i2->first;
        while (i1 != h1.end() && i1->first == x) c1 += static_cast<double>((i1++)->second);
        while (i2 != h2.end() && i2->first == x) c2 += static_cast<double>((i2++)->second);
        best = std::max(best, std::abs(c1 / static_cast<double>(n1) -
                                       c2 / static_cast<double>(n2)));
    }
    return best;
}

} // namespace

LongestCyclesReport longest_cycles_stat(const ShelfSpec& spec, long trials,
                                        std::uint64_t seed, int k, int threads) {
    if (k < 1 || k > spec.n) throw InputError("longest_cycles_stat: bad k");

    auto run_model = [&](bool uniform) {
        McConfig cfg;
        cfg.n = spec.n;
        if (!uniform) cfg.shelves = spec.m;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.threads = threads;

        const int t_count = std::max(1, threads);
        std::vector<std::vector<StatAcc>> accs(
            static_cast<size_t>(t_count), std::vector<StatAcc>(static_cast<size_t>(k)));
        const long chunk = (trials + t_count - 1) / t_count;
        auto worker = [&](int w) {
            DeckSource source(cfg);
            std::vector<char> seen;
            std::vector<int> tops;
            auto& acc = accs[static_cast<size_t>(w)];
            const long lo = w * chunk;
            const long hi = std::min(trials, lo + chunk);
            for (long t = lo; t < hi; ++t) {
                auto deck = source.draw(t);
                longest_k(deck, k, seen, tops);
                for (int i = 0; i < k; ++i)
                    acc[static_cast<size_t>(i)].record(tops[static_cast<size_t>(i)]);
            }
        };
        if (t_count == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < t_count; ++w) pool.emplace_back(worker, w);
            for (auto& th : pool) th.join();
        }

        std::vector<McReport> out;
        for (int i = 0; i < k; ++i) {
            StatAcc total;
            for (const auto& wacc : accs) total.merge(wacc[static_cast<size_t>(i)]);
            out.push_back(finish_report("longest_cycle_L" + std::to_string(i + 1), cfg, total));
        }
        return out;
    };

    LongestCyclesReport rep;
    rep.shuffler = run_model(false);
    rep.uniform = run_model(true);
    rep.ks_l1 = ks_from_histograms(rep.shuffler[0].histogram,
                                   static_cast<std::uint64_t>(trials),
                                   rep.uniform[0].histogram,
                                   static_cast<std::uint64_t>(trials));
    return rep;
}

} // namespace shelf
