#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shelf/errors.hpp"
#include "shelf/machine.hpp"
#include "shelf/permstat.hpp"
#include "support/oracles.hpp"

#include <cmath>
#include <numeric>

using namespace shelf;

namespace {

std::vector<std::int32_t> labels_of(const std::string& text) {
    std::vector<std::int32_t> out;
    for (size_t i = 0; i < text.size();) {
        size_t j = text.find(',', i);
        if (j == std::string::npos) j = text.size();
        out.push_back(std::stoi(text.substr(i, j - i)));
        i = j + 1;
    }
    return out;
}

} // namespace

TEST_CASE("label-sort worked example") {
    auto labels = labels_of("2,1,1,4,3,3,1,2,4,3,4,1");
    auto w = shelf_shuffle_from_labels(labels, 4);
    CHECK(w == Permutation::parse("2,3,7,12,8,1,5,6,10,11,9,4"));

    std::vector<std::int32_t> ones(7, 1);
    CHECK(shelf_shuffle_from_labels(ones, 4) == Permutation::identity(7));

    std::vector<std::int32_t> twos{2, 2, 2};
    CHECK(shelf_shuffle_from_labels(twos, 2) == Permutation::parse("3,2,1"));

    std::vector<std::int32_t> bad{1, 5, 2};
    CHECK_THROWS_AS(shelf_shuffle_from_labels(bad, 4), InputError);
    CHECK_THROWS_AS(shelf_shuffle_from_labels(ones, 3), InputError);
}

TEST_CASE("unload order does not change the law") {
    // exact: enumerate all label vectors for n=4, m=2 under both shelf orders
    const int n = 4, two_m = 4;
    std::map<Permutation, long> in_order, swapped;
    std::vector<std::int32_t> fwd{1, 2}, rev{2, 1};
    std::vector<std::int32_t> labels(n, 1);
    for (;;) {
        in_order[shelf_shuffle_from_labels(labels, two_m, fwd)] += 1;
        swapped[shelf_shuffle_from_labels(labels, two_m, rev)] += 1;
        int pos = 0;
        while (pos < n && labels[static_cast<size_t>(pos)] == two_m) {
            labels[static_cast<size_t>(pos)] = 1;
            ++pos;
        }
        if (pos == n) break;
        ++labels[static_cast<size_t>(pos)];
    }
    CHECK(in_order == swapped);

    std::vector<std::int32_t> bad_order{1, 1};
    CHECK_THROWS_AS(shelf_shuffle_from_labels(labels, two_m, bad_order), InputError);
}

TEST_CASE("sign string composition") {
    CHECK(compose(SignString::parse("+++"), SignString::parse("++")).to_string() ==
          "++++++");
    CHECK(compose(SignString::parse("+-"), SignString::parse("+-")).to_string() ==
          "+-+-");
    CHECK(compose(SignString::parse("+-"), SignString::parse("++-+")).to_string() ==
          "++-+-+--");
    CHECK(SignString::alternating(3).to_string() == "+-+-+-");
    CHECK_THROWS_AS(SignString::parse(""), InputError);
    CHECK_THROWS_AS(SignString::parse("+x"), InputError);

    // associativity and length over random short words
    RngStream rng(2024, 0);
    auto random_word = [&](int len) {
        std::vector<std::int8_t> s;
        for (int i = 0; i < len; ++i)
            s.push_back(rng.next_below(2) ? std::int8_t{1} : std::int8_t{-1});
        return SignString(std::move(s));
    };
    for (int trial = 0; trial < 50; ++trial) {
        auto x = random_word(1 + static_cast<int>(rng.next_below(5)));
        auto y = random_word(1 + static_cast<int>(rng.next_below(5)));
        auto z = random_word(1 + static_cast<int>(rng.next_below(5)));
        CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
        CHECK(compose(x, y).size() == x.size() * y.size());
    }
}

TEST_CASE("x-shuffle exact law") {
    // the alternating string reproduces the shelf law
    for (long m : {1L, 2L}) {
        auto dist = x_shuffle_exact_dist(SignString::alternating(m), 4);
        ShelfSpec spec(4, m);
        Rat total(0);
        for (const auto& w : oracles::all_permutations(4)) {
            auto it = dist.find(w);
            Rat p = it == dist.end() ? Rat(0) : it->second;
            CHECK(p == shelf_prob(spec, w));
            total += p;
        }
        CHECK(total == 1);
    }

    // plain riffle: P(identity) = (n+1)/2^n
    auto gsr = x_shuffle_exact_dist(SignString::parse("++"), 3);
    CHECK(gsr.at(Permutation::identity(3)) == make_rat(4, 8));

    // every word yields a probability distribution
    for (const char* word : {"++", "-+", "++-+", "---"}) {
        auto d = x_shuffle_exact_dist(SignString::parse(word), 4);
        Rat total(0);
        for (const auto& [w, p] : d) total += p;
        CHECK(total == 1);
    }

    CHECK_THROWS_AS(x_shuffle_exact_dist(SignString::parse("++"), 24), SizeError);
}

TEST_CASE("convolution identities") {
    // P * U = U on S_4
    auto one_shelf = shelf_exact_dist(ShelfSpec(4, 1));
    PermDist uniform;
    for (const auto& w : oracles::all_permutations(4))
        uniform[w] = make_rat(1, 24);
    auto pu = convolve_exact(one_shelf, uniform);
    for (const auto& [w, p] : pu) CHECK(p == make_rat(1, 24));

    // convolve(P_x, P_y) = P_{x*y} over short words
    std::vector<std::string> words{"+", "-", "++", "+-", "-+", "--", "++-", "+-+", "++-+"};
    for (int n : {3, 4}) {
        for (const auto& xs : words) {
            for (const auto& ys : words) {
                auto x = SignString::parse(xs);
                auto y = SignString::parse(ys);
                if (std::pow(static_cast<double>(x.size()) * y.size(), n) > 2e5) continue;
                auto lhs = convolve_exact(x_shuffle_exact_dist(x, n),
                                          x_shuffle_exact_dist(y, n));
                auto rhs = x_shuffle_exact_dist(compose(x, y), n);
                for (const auto& w : oracles::all_permutations(n)) {
                    auto l = lhs.find(w);
                    auto r = rhs.find(w);
                    Rat lp = l == lhs.end() ? Rat(0) : l->second;
                    Rat rp = r == rhs.end() ? Rat(0) : r->second;
                    CHECK(lp == rp);
                }
            }
        }
    }

    // two one-shelf passes make a two-shelf machine
    auto twice = convolve_exact(one_shelf, one_shelf);
    ShelfSpec spec2(4, 2);
    for (const auto& w : oracles::all_permutations(4))
        CHECK(twice.at(w) == shelf_prob(spec2, w));

    PermDist empty;
    CHECK_THROWS_AS(convolve_exact(empty, uniform), InputError);
}

TEST_CASE("separation bound") {
    CHECK(std::abs(to_double(separation_bound(256, 52)) - 0.997) < 0.001);
    CHECK(separation_bound(20, 52) == 1);
    CHECK(std::abs(to_double(separation_bound(400, 52)) - 0.969) < 0.001);
    CHECK(std::abs(to_double(separation_bound(8000, 52)) - 0.153) < 0.001);
    CHECK(separation_bound(SignString::parse("++"), 3) == 1); // a <= n-1
    CHECK(separation_bound(SignString::parse("++++"), 3) == make_rat(5, 8));

    // non-increasing in a
    Rat prev(2);
    for (long a : {20L, 52L, 100L, 256L, 400L, 1000L, 8000L, 100000L}) {
        Rat b = separation_bound(a, 52);
        CHECK(b <= prev);
        prev = b;
    }

    // birthday approximation 1 - exp(-n(n-1)/2a) for a >= 10 n^2
    for (int n : {10, 20, 52}) {
        for (long mult : {10L, 40L, 200L}) {
            const long a = mult * n * n;
            const double approx = -std::expm1(-static_cast<double>(n) * (n - 1) /
                                              (2.0 * static_cast<double>(a)));
            const double got = to_double(separation_bound(a, n));
            CHECK(std::abs(got - approx) / approx < 0.05);
        }
    }
}

TEST_CASE("fixed seeds reproduce frozen samples") {
    ShelfSpec spec(12, 3);
    {
        RngStream rng(20240807, 0);
        CHECK(sample_description1(spec, rng).permutation ==
              Permutation::parse("7,9,10,5,6,1,2,3,4,12,11,8"));
    }
    {
        RngStream rng(20240807, 0);
        CHECK(sample_description2(spec, rng).permutation ==
              Permutation::parse("8,10,11,3,2,5,6,7,9,12,4,1"));
    }
    {
        RngStream rng(20240807, 0);
        CHECK(sample_description3(spec, rng).permutation ==
              Permutation::parse("1,4,6,8,10,3,5,9,2,7,12,11"));
    }
    {
        // a different stream id yields a different, equally frozen, sample
        RngStream rng(20240807, 1);
        CHECK(sample_description1(spec, rng).permutation ==
              Permutation::parse("7,10,12,8,3,2,5,9,11,4,6,1"));
    }
}

TEST_CASE("the three samplers are deterministic and agree") {
    ShelfSpec spec(5, 2);

    // determinism: the same (seed, stream) reproduces bit-identically
    for (int desc = 1; desc <= 3; ++desc) {
        RngStream a(42, 7), b(42, 7);
        auto sample = [&](RngStream& r) {
            switch (desc) {
            case 1: return sample_description1(spec, r);
            case 2: return sample_description2(spec, r);
            default: return sample_description3(spec, r);
            }
        };
        auto s1 = sample(a);
        auto s2 = sample(b);
        CHECK(s1.permutation == s2.permutation);
        CHECK(s1.provenance == desc);
    }

    // m=1: every route emits valley-free permutations only
    ShelfSpec one(6, 1);
    for (std::uint64_t t = 0; t < 2000; ++t) {
        RngStream r1(11, t), r2(12, t), r3(13, t);
        CHECK(valleys(sample_description1(one, r1).permutation) == 0);
        CHECK(valleys(sample_description2(one, r2).permutation) == 0);
        CHECK(valleys(sample_description3(one, r3).permutation) == 0);
    }
}

TEST_CASE("chi-square agreement between routes and the exact law") {
    const ShelfSpec spec(5, 2);
    const long trials = 100000;
    auto exact = shelf_exact_dist(spec);

    // cells = the support of the law (alternating permutations are
    // unreachable at two shelves)
    std::vector<Permutation> support;
    std::map<Permutation, size_t> index;
    for (const auto& [w, p] : exact) {
        if (p == 0) continue;
        index[w] = support.size();
        support.push_back(w);
    }

    auto run = [&](int desc, std::uint64_t seed) {
        std::vector<double> counts(support.size(), 0.0);
        for (long t = 0; t < trials; ++t) {
            RngStream rng(seed, static_cast<std::uint64_t>(t));
            ShuffleSample s = desc == 1   ? sample_description1(spec, rng)
                              : desc == 2 ? sample_description2(spec, rng)
                                          : sample_description3(spec, rng);
            auto it = index.find(s.permutation);
            REQUIRE(it != index.end()); // samples never leave the support
            counts[it->second] += 1.0;
        }
        return counts;
    };

    auto c1 = run(1, 101);
    auto c2 = run(2, 202);
    auto c3 = run(3, 303);

    std::vector<double> expected;
    for (const auto& w : support)
        expected.push_back(to_double(exact.at(w)) * static_cast<double>(trials));

    const double crit = oracles::chi2_critical(static_cast<int>(support.size()) - 1);
    CHECK(oracles::chi2_gof(c1, expected) < crit);
    CHECK(oracles::chi2_gof(c2, expected) < crit);
    CHECK(oracles::chi2_gof(c3, expected) < crit);
    CHECK(oracles::chi2_two_sample(c1, c2) < crit);
    CHECK(oracles::chi2_two_sample(c1, c3) < crit);
}

TEST_CASE("exhaustive route-1 enumeration equals the exact law at small sizes") {
    for (int n = 1; n <= 4; ++n) {
        for (long m : {1L, 2L}) {
            const int two_m = static_cast<int>(2 * m);
            ShelfSpec spec(n, m);
            std::map<Permutation, long> counts;
            std::vector<std::int32_t> labels(static_cast<size_t>(n), 1);
            long total = 0;
            for (;;) {
                counts[shelf_shuffle_from_labels(labels, two_m)] += 1;
                ++total;
                int pos = 0;
                while (pos < n && labels[static_cast<size_t>(pos)] == two_m) {
                    labels[static_cast<size_t>(pos)] = 1;
                    ++pos;
                }
                if (pos == n) break;
                ++labels[static_cast<size_t>(pos)];
            }
            for (const auto& w : oracles::all_permutations(n))
                CHECK(make_rat(Int(counts[w]), Int(total)) == shelf_prob(spec, w));
        }
    }
}
