#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shelf/errors.hpp"
#include "shelf/series.hpp"

using namespace shelf;

TEST_CASE("binomial helpers") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(5, 0) == 1);
    CHECK(binom(5, 6) == 0);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(-3, 2) == 0); // vanishing convention, not the analytic extension
    CHECK(binom_big(Int("12345678901234567890"), 2) ==
          Int("12345678901234567890") * Int("12345678901234567889") / 2);
    CHECK(binom_big(Int(7), 3) == 35);
}

TEST_CASE("series arithmetic") {
    // (1 - t)^(-1) = 1 + t + t^2 + ...
    auto geo = TruncatedSeries::binomial_neg(6, Rat(1), 1);
    for (int k = 0; k <= 6; ++k) CHECK(geo.coeff(k) == 1);

    // (1+t)/(1-t) = 1 + 2t + 2t^2 + ...
    auto q = TruncatedSeries::binomial_pos(6, Rat(1), 1) * geo;
    CHECK(q.coeff(0) == 1);
    for (int k = 1; k <= 6; ++k) CHECK(q.coeff(k) == 2);

    // reciprocal: s * s^(-1) = 1
    auto r = q.reciprocal();
    auto prod = q * r;
    CHECK(prod.coeff(0) == 1);
    for (int k = 1; k <= 6; ++k) CHECK(prod.coeff(k) == 0);

    // pow via repeated squaring matches direct multiplication
    auto q3 = q.pow(3);
    CHECK(q3 == q * q * q);
    CHECK(q.pow(0) == TruncatedSeries::one(6));

    auto m = TruncatedSeries::monomial(4, 2, Rat(5));
    CHECK(m.coeff(2) == 5);
    CHECK((m * m).coeff(4) == 25);
}

TEST_CASE("series refuses silently insufficient truncation") {
    auto a = TruncatedSeries::one(4);
    auto b = TruncatedSeries::one(5);
    CHECK_THROWS_AS(a * b, InputError);
    CHECK_THROWS_AS(a + b, InputError);
    CHECK_THROWS_AS(a.coeff(5), InputError);
    CHECK_THROWS_AS(a.coeff(-1), InputError);
    CHECK_THROWS_AS(TruncatedSeries(3).reciprocal(), InputError);
    CHECK_THROWS_AS(TruncatedSeries::monomial(3, 4, Rat(1)), InputError);
}

TEST_CASE("rational error paths") {
    CHECK_THROWS_AS(make_rat(1, 0), InputError);
    CHECK_THROWS_AS(decimal_string(Rat(1), -1), InputError);
}
