#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shelf/audits.hpp"
#include "shelf/errors.hpp"
#include "shelf/machine.hpp"
#include "support/oracles.hpp"

#include <cmath>

using namespace shelf;

TEST_CASE("guess_sequence basics") {
    CHECK(guess_sequence(Permutation::identity(5)) == 5);
    CHECK(guess_sequence(Permutation::identity(1)) == 1);
    CHECK(guess_sequence(Permutation::parse("2,1")) == 1);

    RngStream rng(31, 0);
    std::vector<std::int32_t> deck;
    for (int t = 0; t < 200; ++t) {
        sample_uniform_deck(9, rng, deck);
        int c = guess_sequence(deck);
        CHECK(c >= 1);
        CHECK(c <= 9);
    }
}

TEST_CASE("uniform guessing moments") {
    auto [m1, v1] = uniform_guess_moments(1);
    CHECK(m1 == 1);
    CHECK(v1 == 0);
    auto [m2, v2] = uniform_guess_moments(2);
    CHECK(m2 == make_rat(3, 2));
    CHECK(v2 == make_rat(1, 4));
    auto [m52, v52] = uniform_guess_moments(52);
    CHECK(std::abs(to_double(m52) - 4.538) < 0.001);
    CHECK(std::abs(to_double(v52) - 2.9) < 0.1);
    CHECK_THROWS_AS(uniform_guess_moments(0), InputError);
}

TEST_CASE("uniform guessing experiment matches the exact moments") {
    McConfig cfg;
    cfg.n = 52;
    cfg.trials = 10000;
    cfg.seed = 4242;
    auto rep = guessing_experiment(cfg);
    auto [mean, var] = uniform_guess_moments(52);

    CHECK(std::abs(to_double(rep.mean - mean)) <= 3 * rep.std_error);
    // variance of the sample variance ~ var^2 * 2/(N-1) for near-normal data
    const double var_se =
        to_double(var) * std::sqrt(2.0 / static_cast<double>(cfg.trials - 1));
    CHECK(std::abs(to_double(rep.variance - var)) <= 4 * var_se);

    std::uint64_t total = 0;
    for (const auto& [k, c] : rep.histogram) {
        CHECK(k >= 1);
        CHECK(k <= 52);
        total += c;
    }
    CHECK(total == static_cast<std::uint64_t>(cfg.trials));
    CHECK(rep.variance >= 0);
    CHECK(rep.generator == std::string(kGeneratorVersion));
    CHECK(rep.m == -1);
}

TEST_CASE("shelf guessing matches the published ten-shelf point") {
    McConfig cfg;
    cfg.n = 52;
    cfg.shelves = 10;
    cfg.trials = 10000;
    cfg.seed = 1010;
    auto rep = guessing_experiment(cfg);
    CHECK(std::abs(to_double(rep.mean) - 9.3) <= 0.3);
    CHECK(std::abs(to_double(rep.variance) - 4.7) <= 0.5);
}

TEST_CASE("reports are thread-count invariant") {
    for (int threads : {1, 3, 7}) {
        McConfig cfg;
        cfg.n = 52;
        cfg.shelves = 4;
        cfg.trials = 4000;
        cfg.seed = 777;
        cfg.threads = threads;
        static McReport base;
        auto rep = guessing_experiment(cfg);
        if (threads == 1) {
            base = rep;
        } else {
            CHECK(rep.mean == base.mean);
            CHECK(rep.variance == base.variance);
            CHECK(rep.histogram == base.histogram);
        }
    }
}

TEST_CASE("top card retention") {
    McConfig cfg;
    cfg.n = 52;
    cfg.shelves = 10;
    cfg.trials = 10000;
    cfg.seed = 5;
    auto rep = top_card_test(cfg);
    const double freq = to_double(rep.mean);
    CHECK(freq >= 0.05 - 3 * rep.std_error);
    REQUIRE(rep.extras.size() == 2);
    const double c2top = to_double(rep.extras[0].second);
    const double approx = (1.0 / 20.0) * (19.0 / 20.0);
    const double se2 = std::sqrt(c2top * (1 - c2top) / static_cast<double>(cfg.trials));
    CHECK(std::abs(c2top - approx) <= 3 * se2);

    McConfig ucfg = cfg;
    ucfg.shelves.reset();
    ucfg.seed = 6;
    auto urep = top_card_test(ucfg);
    CHECK(std::abs(to_double(urep.mean) - 1.0 / 52.0) <= 3 * urep.std_error);
}

TEST_CASE("color changes") {
    McConfig cfg;
    cfg.n = 52;
    cfg.shelves = 10;
    cfg.trials = 10000;
    cfg.seed = 99;
    auto rep = color_change_test(cfg);
    CHECK(std::abs(to_double(rep.mean) - 17.0) <= 0.3);
    CHECK(std::abs(std::sqrt(to_double(rep.variance)) - 1.83) <= 0.2);

    McConfig ucfg = cfg;
    ucfg.shelves.reset();
    auto urep = color_change_test(ucfg);
    CHECK(std::abs(to_double(urep.mean) - 26.0) <= 3 * urep.std_error);
    CHECK(std::abs(to_double(urep.mean) - 26.0) <= 0.3);
    CHECK(std::abs(std::sqrt(to_double(urep.variance)) - 3.6) <= 0.2);

    McConfig odd = cfg;
    odd.n = 51;
    CHECK_THROWS_AS(color_change_test(odd), InputError);
}

TEST_CASE("spacings") {
    McConfig ucfg;
    ucfg.n = 52;
    ucfg.trials = 10000;
    ucfg.seed = 11;
    auto uni = spacings_test(ucfg, 9);
    REQUIRE(uni.size() == 9);
    const double want = 53.0 / 3.0;
    CHECK(std::abs(to_double(uni[0].mean) - want) <= 3 * uni[0].std_error);

    McConfig scfg = ucfg;
    scfg.shelves = 10;
    scfg.seed = 12;
    auto shf = spacings_test(scfg, 9);

    // the shuffled deck piles mass on unit spacings; the separation between
    // the two unit-spacing frequencies is the discriminating statistic
    auto freq1 = [&](const McReport& r) {
        auto it = r.histogram.find(1);
        const double c = it == r.histogram.end() ? 0.0 : static_cast<double>(it->second);
        return c / static_cast<double>(r.trials);
    };
    const double fu = freq1(uni[0]);
    const double fs = freq1(shf[0]);
    const double se = std::sqrt(fu * (1 - fu) / static_cast<double>(ucfg.trials) +
                                fs * (1 - fs) / static_cast<double>(scfg.trials));
    CHECK(fs - fu >= 5 * se);

    // D_1 = 1 always when n = 2
    McConfig tiny;
    tiny.n = 2;
    tiny.shelves = 3;
    tiny.trials = 50;
    tiny.seed = 3;
    auto rep2 = spacings_test(tiny, 1);
    CHECK(rep2[0].mean == 1);
    CHECK(rep2[0].variance == 0);

    CHECK_THROWS_AS(spacings_test(ucfg, 52), InputError);
    CHECK_THROWS_AS(spacings_test(ucfg, 0), InputError);
}

TEST_CASE("longest cycles") {
    auto rep = longest_cycles_stat(ShelfSpec(52, 10), 10000, 21, 2);
    REQUIRE(rep.uniform.size() == 2);
    const double mean_ratio = to_double(rep.uniform[0].mean) / 52.0;
    CHECK(mean_ratio >= 0.61);
    CHECK(mean_ratio <= 0.64);
    CHECK(rep.ks_l1 >= 0.0);
    CHECK(rep.ks_l1 <= 1.0);
    CHECK(rep.shuffler[0].m == 10);
    CHECK(rep.uniform[0].m == -1);
    // L_1 >= L_2 throughout
    CHECK(to_double(rep.uniform[0].mean) >= to_double(rep.uniform[1].mean));

    auto one = longest_cycles_stat(ShelfSpec(1, 1), 50, 1, 1);
    CHECK(one.uniform[0].mean == 1);
    CHECK(one.shuffler[0].variance == 0);

    CHECK_THROWS_AS(longest_cycles_stat(ShelfSpec(5, 1), 10, 1, 6), InputError);
}
