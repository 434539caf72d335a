#include "shelf/exact.hpp"

#include "shelf/errors.hpp"
#include "shelf/series.hpp"

#include <cmath>

namespace shelf {

ShelfSpec::ShelfSpec(int n_, long m_) : n(n_), m(m_) {
    if (n < 1) throw InputError("ShelfSpec: n must be >= 1");
    if (m < 1) throw InputError("ShelfSpec: m must be >= 1");
}

namespace {

Int two_m_pow_n(const ShelfSpec& spec) {
    Int b(2 * spec.m);
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(spec.n));
    return r;
}

void check_valley_range(const ShelfSpec& spec, int v) {
    if (v < 0 || v > ValleyTable::max_valleys(spec.n))
        throw InputError("valley count " + std::to_string(v) +
                         " out of range for n = " + std::to_string(spec.n));
}

} // namespace

Rat shelf_prob_by_valleys(const ShelfSpec& spec, int v) {
    check_valley_range(spec, v);
    const int n = spec.n;
    Int sum = 0;
    for (int a = 0; a < n; ++a)
        sum += binom(n + spec.m - a - 1, n) * binom(n - 1 - 2 * v, a - v);
    Int num;
    mpz_ui_pow_ui(num.get_mpz_t(), 4, static_cast<unsigned long>(v) + 1);
    return make_rat(num * sum, 2 * two_m_pow_n(spec));
}

Rat shelf_prob(const ShelfSpec& spec, const Permutation& w) {
    if (w.size() != spec.n)
        throw InputError("shelf_prob: permutation length does not match n");
    return shelf_prob_by_valleys(spec, valleys(w));
}

Rat shelf_prob_gf_check(const ShelfSpec& spec, int v) {
    check_valley_range(spec, v);
    // (1+t)^(n+1) (4t/(1+t)^2)^(v+1) / (1-t)^(n+1)
    //   = 4^(v+1) t^(v+1) (1+t)^(n-1-2v) / (1-t)^(n+1),
    // so read off the coefficient of t^(m-v-1) of (1+t)^(n-1-2v)/(1-t)^(n+1).
    const int n = spec.n;
    const int order = static_cast<int>(spec.m);
    auto numer = TruncatedSeries::binomial_pos(order, Rat(1),
                                               static_cast<unsigned long>(n - 1 - 2 * v));
    auto denom = TruncatedSeries::binomial_neg(order, Rat(1),
                                               static_cast<unsigned long>(n) + 1);
    auto prod = numer * denom;
    const long k = spec.m - v - 1;
    if (k < 0) return Rat(0);
    Int four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, static_cast<unsigned long>(v) + 1);
    return prod.coeff(static_cast<int>(k)) * make_rat(four_pow, 2 * two_m_pow_n(spec));
}

Rat bn_signed_prob(const ShelfSpec& spec, const SignedPermutation& w) {
    if (w.size() != spec.n)
        throw InputError("bn_signed_prob: permutation length does not match n");
    const int cd = cyclic_descents(w.inverse());
    return make_rat(binom(spec.m + spec.n - cd, spec.n), two_m_pow_n(spec));
}

Rat unsigned_bn_prob(const ShelfSpec& spec, const Permutation& w) {
    if (w.size() != spec.n)
        throw InputError("unsigned_bn_prob: permutation length does not match n");
    const int n = spec.n;
    const int p = peaks(w.inverse());
    Int sum = 0;
    for (int a = 0; a < n; ++a)
        sum += binom(n + spec.m - a - 1, n) * binom(n - 1 - 2 * p, a - p);
    Int num;
    mpz_ui_pow_ui(num.get_mpz_t(), 4, static_cast<unsigned long>(p) + 1);
    return make_rat(num * sum, 2 * two_m_pow_n(spec));
}

DistanceReport distances(const ShelfSpec& spec, const ValleyTable& table,
                         bool scan_all) {
    const int n = spec.n;
    if (table.n_max() < n) throw InputError("distances: valley table too small");
    const int vmax = ValleyTable::max_valleys(n);
    const Rat unif = make_rat(1, factorial_int(static_cast<unsigned long>(n)));
    const Int nfact = factorial_int(static_cast<unsigned long>(n));

    DistanceReport rep;
    rep.n = n;
    rep.m = spec.m;

    Rat tv(0);
    for (int k = 0; k <= vmax; ++k) {
        Rat diff = shelf_prob_by_valleys(spec, k) - unif;
        if (diff < 0) diff = -diff;
        tv += Rat(table.at(n, k)) * diff;
    }
    rep.tv = tv / 2;

    auto sep_at = [&](int v) -> Rat {
        return Rat(1) - Rat(nfact) * shelf_prob_by_valleys(spec, v);
    };
    const Rat s0 = sep_at(0);
    const Rat sk = sep_at(vmax);
    rep.sep = std::max(s0, sk);
    rep.sep_class = (sk >= s0) ? vmax : 0;
    Rat a0 = s0 < 0 ? Rat(-s0) : s0;
    Rat ak = sk < 0 ? Rat(-sk) : sk;
    rep.linf = std::max(a0, ak);
    rep.linf_class = (ak >= a0) ? vmax : 0;

    if (scan_all) {
        for (int v = 0; v <= vmax; ++v) {
            Rat s = sep_at(v);
            Rat a = s < 0 ? Rat(-s) : s;
            if (s > rep.sep || a > rep.linf)
                throw Error("distances: extreme valley classes are not maximal");
        }
    }
    return rep;
}

std::pair<double, double> asymptotic_distances(double c) {
    if (!(c > 0)) throw InputError("asymptotic_distances: c must be positive");
    const double linf = std::expm1(1.0 / (12.0 * c * c));
    const double sep = -std::expm1(-1.0 / (24.0 * c * c));
    return {linf, sep};
}

} // namespace shelf
