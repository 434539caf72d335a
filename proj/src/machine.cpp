#include "shelf/machine.hpp"

#include "shelf/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace shelf {

namespace {

// Counting sort of cards into packets; packet_labels lists labels in
// assembly order (top packet first). '-' direction packets are reversed.
Permutation assemble(std::span<const std::int32_t> labels, int two_m,
                     std::span<const std::int32_t> packet_order,
                     std::span<const std::int8_t> reversed) {
    const int n = static_cast<int>(labels.size());
    std::vector<std::int32_t> counts(static_cast<size_t>(two_m) + 1, 0);
    for (auto l : labels) {
        if (l < 1 || l > two_m)
            throw InputError("label " + std::to_string(l) + " out of range 1.." +
                             std::to_string(two_m));
        ++counts[static_cast<size_t>(l)];
    }
    std::vector<std::int32_t> start(static_cast<size_t>(two_m) + 1, 0);
    int acc = 0;
    for (auto l : packet_order) {
        start[static_cast<size_t>(l)] = acc;
        acc += counts[static_cast<size_t>(l)];
    }
    std::vector<std::int32_t> fill(static_cast<size_t>(two_m) + 1, 0);
    std::vector<std::int32_t> deck(static_cast<size_t>(n));
    for (int card = 1; card <= n; ++card) {
        const auto l = static_cast<size_t>(labels[static_cast<size_t>(card - 1)]);
        int pos;
        if (reversed[l])
            pos = start[l] + counts[l] - 1 - fill[l];
        else
            pos = start[l] + fill[l];
        ++fill[l];
        deck[static_cast<size_t>(pos)] = card;
    }
    return Permutation(std::move(deck));
}

std::vector<std::int8_t> even_reversed(int two_m) {
    std::vector<std::int8_t> rev(static_cast<size_t>(two_m) + 1, 0);
    for (int l = 2; l <= two_m; l += 2) rev[static_cast<size_t>(l)] = 1;
    return rev;
}

} // namespace

Permutation shelf_shuffle_from_labels(std::span<const std::int32_t> labels, int two_m) {
    if (two_m < 2 || two_m % 2 != 0)
        throw InputError("shelf_shuffle_from_labels: two_m must be even and >= 2");
    std::vector<std::int32_t> order(static_cast<size_t>(two_m));
    std::iota(order.begin(), order.end(), 1);
    return assemble(labels, two_m, order, even_reversed(two_m));
}

Permutation shelf_shuffle_from_labels(std::span<const std::int32_t> labels, int two_m,
                                      std::span<const std::int32_t> shelf_order) {
    if (two_m < 2 || two_m % 2 != 0)
        throw InputError("shelf_shuffle_from_labels: two_m must be even and >= 2");
    const int m = two_m / 2;
    if (static_cast<int>(shelf_order.size()) != m)
        throw InputError("shelf_shuffle_from_labels: unload order must list every shelf");
    std::vector<std::int32_t> order;
    order.reserve(static_cast<size_t>(two_m));
    std::vector<bool> seen(static_cast<size_t>(m) + 1, false);
    for (auto s : shelf_order) {
        if (s < 1 || s > m || seen[static_cast<size_t>(s)])
            throw InputError("shelf_shuffle_from_labels: bad unload order");
        seen[static_cast<size_t>(s)] = true;
        order.push_back(2 * s - 1);
        order.push_back(2 * s);
    }
    return assemble(labels, two_m, order, even_reversed(two_m));
}

ShuffleSample sample_description1(const ShelfSpec& spec, RngStream& rng) {
    const int two_m = static_cast<int>(2 * spec.m);
    std::vector<std::int32_t> labels(static_cast<size_t>(spec.n));
    for (auto& l : labels)
        l = static_cast<std::int32_t>(rng.next_below(static_cast<std::uint32_t>(two_m))) + 1;
    ShuffleSample s;
    s.permutation = shelf_shuffle_from_labels(labels, two_m);
    s.provenance = 1;
    s.labels = std::move(labels);
    return s;
}

ShuffleSample sample_description2(const ShelfSpec& spec, RngStream& rng) {
    const int n = spec.n;
    const int two_m = static_cast<int>(2 * spec.m);
    // multinomial pile sizes via iid per-card assignments
    std::vector<std::int32_t> counts(static_cast<size_t>(two_m), 0);
    for (int i = 0; i < n; ++i)
        ++counts[rng.next_below(static_cast<std::uint32_t>(two_m))];
    std::vector<std::int32_t> startv(static_cast<size_t>(two_m), 0);
    int acc = 0;
    for (int j = 0; j < two_m; ++j) {
        startv[static_cast<size_t>(j)] = acc;
        acc += counts[static_cast<size_t>(j)];
    }
    std::vector<std::int32_t> remaining = counts;
    // GSR interleave: pick the source pile proportionally to remaining size
    std::vector<std::int32_t> deck(static_cast<size_t>(n));
    int total = n;
    for (int pos = 0; pos < n; ++pos) {
        auto r = static_cast<std::int32_t>(rng.next_below(static_cast<std::uint32_t>(total)));
        int j = 0;
        while (r >= remaining[static_cast<size_t>(j)]) {
            r -= remaining[static_cast<size_t>(j)];
            ++j;
        }
        std::int32_t card;
        if (j % 2 == 1) // even-numbered packet (1-based), reversed
            card = startv[static_cast<size_t>(j)] + remaining[static_cast<size_t>(j)];
        else
            card = startv[static_cast<size_t>(j)] + counts[static_cast<size_t>(j)] -
                   remaining[static_cast<size_t>(j)] + 1;
        deck[static_cast<size_t>(pos)] = card;
        --remaining[static_cast<size_t>(j)];
        --total;
    }
    ShuffleSample s;
    // this route natively samples the inverse reading
    s.permutation = Permutation(std::move(deck)).inverse();
    s.provenance = 2;
    return s;
}

ShuffleSample sample_description3(const ShelfSpec& spec, RngStream& rng) {
    const int n = spec.n;
    const auto m = static_cast<double>(spec.m);
    std::vector<double> x(static_cast<size_t>(n));
    for (auto& v : x) v = rng.next_double();
    std::sort(x.begin(), x.end());
    // tents of slope +-2m centered at (2j-1)/2m
    std::vector<double> y(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double u = x[static_cast<size_t>(i)] * m;
        double j = std::floor(u);
        if (j >= m) j = m - 1;
        double frac = u - j;
        y[static_cast<size_t>(i)] = 1.0 - std::abs(2.0 * frac - 1.0);
    }
    // rank of y_i among all y (ties broken by index) gives the sample
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return y[static_cast<size_t>(a)] < y[static_cast<size_t>(b)]; });
    std::vector<std::int32_t> rank(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r)
        rank[static_cast<size_t>(idx[static_cast<size_t>(r)])] = static_cast<std::int32_t>(r + 1);
    ShuffleSample s;
    s.permutation = Permutation(std::move(rank));
    s.provenance = 3;
    return s;
}

DeckSampler::DeckSampler(ShelfSpec spec)
    : spec_(spec), labels_(static_cast<size_t>(spec.n)),
      start_(static_cast<size_t>(2 * spec.m) + 1),
      fill_(static_cast<size_t>(2 * spec.m) + 1) {}

void DeckSampler::sample(RngStream& rng, std::vector<std::int32_t>& deck) {
    const int n = spec_.n;
    const auto two_m = static_cast<std::uint32_t>(2 * spec_.m);
    deck.resize(static_cast<size_t>(n));
    std::fill(start_.begin(), start_.end(), 0);
    std::fill(fill_.begin(), fill_.end(), 0);
    // start_ holds counts first, then offsets
    for (int i = 0; i < n; ++i) {
        auto l = static_cast<std::int32_t>(rng.next_below(two_m)) + 1;
        labels_[static_cast<size_t>(i)] = l;
        ++start_[static_cast<size_t>(l)];
    }
    int acc = 0;
    for (std::uint32_t l = 1; l <= two_m; ++l) {
        int c = start_[l];
        start_[l] = acc;
        fill_[l] = c; // stash count
        acc += c;
    }
    for (int card = 1; card <= n; ++card) {
        const auto l = static_cast<size_t>(labels_[static_cast<size_t>(card - 1)]);
        int pos;
        if (l % 2 == 0) {
            pos = start_[l] + fill_[l] - 1;
            --fill_[l];
        } else {
            pos = start_[l];
            ++start_[l];
        }
        deck[static_cast<size_t>(pos)] = static_cast<std::int32_t>(card);
    }
}

void sample_uniform_deck(int n, RngStream& rng, std::vector<std::int32_t>& deck) {
    deck.resize(static_cast<size_t>(n));
    std::iota(deck.begin(), deck.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        auto j = rng.next_below(static_cast<std::uint32_t>(i) + 1);
        std::swap(deck[static_cast<size_t>(i)], deck[static_cast<size_t>(j)]);
    }
}

PermDist x_shuffle_exact_dist(const SignString& x, int n) {
    if (n < 1) throw InputError("x_shuffle_exact_dist: n must be >= 1");
    const int a = x.size();
    double total_log = n * std::log2(static_cast<double>(a));
    if (total_log > std::log2(1e7))
        throw SizeError("x_shuffle_exact_dist: |x|^n exceeds the enumeration guard");

    std::vector<std::int32_t> order(static_cast<size_t>(a));
    std::iota(order.begin(), order.end(), 1);
    std::vector<std::int8_t> rev(static_cast<size_t>(a) + 1, 0);
    for (int l = 1; l <= a; ++l) rev[static_cast<size_t>(l)] = x.sign(l) < 0 ? 1 : 0;

    std::map<Permutation, long> counts;
    std::vector<std::int32_t> labels(static_cast<size_t>(n), 1);
    for (;;) {
        counts[assemble(labels, a, order, rev)] += 1;
        int pos = 0;
        while (pos < n && labels[static_cast<size_t>(pos)] == a) {
            labels[static_cast<size_t>(pos)] = 1;
            ++pos;
        }
        if (pos == n) break;
        ++labels[static_cast<size_t>(pos)];
    }

    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(a),
                  static_cast<unsigned long>(n));
    PermDist dist;
    for (auto& [w, c] : counts) dist.emplace(w, make_rat(Int(c), den));
    return dist;
}

PermDist shelf_exact_dist(const ShelfSpec& spec) {
    return x_shuffle_exact_dist(SignString::alternating(spec.m), spec.n);
}

PermDist convolve_exact(const PermDist& p, const PermDist& q) {
    if (p.empty() || q.empty()) throw InputError("convolve_exact: empty distribution");
    const int n = p.begin()->first.size();
    if (q.begin()->first.size() != n)
        throw InputError("convolve_exact: size mismatch");
    PermDist out;
    for (const auto& [v, pv] : p) {
        for (const auto& [u, qu] : q) {
            Permutation w = u.compose(v); // w v^{-1} = u
            out[w] += pv * qu;
        }
    }
    return out;
}

Rat separation_bound(long a, int n) {
    if (a < 1 || n < 1) throw InputError("separation_bound: bad arguments");
    Rat prod(1);
    for (int i = 1; i <= n - 1; ++i) {
        if (i >= a) return Rat(1);
        prod *= make_rat(Int(a - i), Int(a));
    }
    return Rat(1) - prod;
}

Rat separation_bound(const SignString& x, int n) {
    return separation_bound(x.size(), n);
}

} // namespace shelf
