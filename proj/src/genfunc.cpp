#include "shelf/genfunc.hpp"

#include "shelf/errors.hpp"
#include "shelf/series.hpp"

#include <algorithm>

namespace shelf {

void DiscreteDist::add(long value, const Rat& p) {
    if (!integer_support_) throw Error("DiscreteDist: not integer-valued");
    entries_.push_back({std::to_string(value), value, p});
}

void DiscreteDist::add(const std::string& label, const Rat& p) {
    entries_.push_back({label, 0, p});
}

Rat DiscreteDist::total() const {
    Rat t(0);
    for (const auto& e : entries_) t += e.prob;
    return t;
}

Rat DiscreteDist::prob_of(long value) const {
    if (!integer_support_) throw Error("DiscreteDist: not integer-valued");
    for (const auto& e : entries_)
        if (e.value == value) return e.prob;
    return Rat(0);
}

Rat DiscreteDist::mean() const {
    if (!integer_support_) throw Error("DiscreteDist: not integer-valued");
    Rat s(0);
    for (const auto& e : entries_) s += Rat(e.value) * e.prob;
    return s;
}

Rat DiscreteDist::variance() const {
    Rat mu = mean();
    Rat s(0);
    for (const auto& e : entries_) s += Rat(e.value) * Rat(e.value) * e.prob;
    return s - mu * mu;
}

int moebius(long d) {
    if (d < 1) throw InputError("moebius: argument must be positive");
    int r = 1;
    for (long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            r = -r;
        }
    }
    if (d > 1) r = -r;
    return r;
}

Int f_im(int i, long m) {
    if (i < 1 || m < 1) throw InputError("f_im: i and m must be >= 1");
    Int sum = 0;
    for (int d = 1; d <= i; ++d) {
        if (i % d != 0 || d % 2 == 0) continue;
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(2 * m),
                      static_cast<unsigned long>(i / d));
        sum += moebius(d) * p;
    }
    Int q, r;
    Int den(2 * i);
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), sum.get_mpz_t(), den.get_mpz_t());
    if (r != 0 || q < 0) throw Error("f_im: Moebius sum not divisible by 2i");
    return q;
}

std::vector<Int> f_im_table(int i_max, long m) {
    if (i_max < 1) throw InputError("f_im_table: i_max must be >= 1");
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(i_max));
    for (int i = 1; i <= i_max; ++i) out.push_back(f_im(i, m));
    return out;
}

namespace {

// Dense bivariate polynomial, truncated in both variables: p[u_deg][x_deg].
using BiPoly = std::vector<std::vector<Rat>>;

BiPoly bipoly_one(int u_max, int x_max) {
    BiPoly p(static_cast<size_t>(u_max) + 1,
             std::vector<Rat>(static_cast<size_t>(x_max) + 1, Rat(0)));
    p[0][0] = 1;
    return p;
}

} // namespace

DiscreteDist cycle_count_dist(const ShelfSpec& spec, int i, int order_override) {
    const int n = spec.n;
    if (i < 1 || i > n) throw InputError("cycle_count_dist: cycle length out of range");
    int order = order_override == 0 ? n : order_override;
    if (order < n)
        throw InputError("cycle_count_dist: truncation order " + std::to_string(order) +
                         " insufficient for n = " + std::to_string(n));
    const int x_max = n / i;
    const Rat z = make_rat(1, Int(2 * spec.m)); // u is tracked by degree only

    // Product over cycle lengths j of
    //   (1 + X z^j u^j)^{f_j} (1 - X z^j u^j)^{-f_j},
    // with X = x for j == i and X = 1 otherwise, truncated at u^order.
    BiPoly acc = bipoly_one(order, x_max);
    for (int j = 1; j <= n; ++j) {
        const Int f = f_im(j, spec.m);
        const int kmax = n / j;
        // coefficient of (z^j u^j X)^k in the j-factor
        std::vector<Rat> factor(static_cast<size_t>(kmax) + 1, Rat(0));
        {
            std::vector<Int> a(static_cast<size_t>(kmax) + 1), b(static_cast<size_t>(kmax) + 1);
            for (int k = 0; k <= kmax; ++k) {
                a[static_cast<size_t>(k)] = binom_big(f, static_cast<unsigned long>(k));
                b[static_cast<size_t>(k)] = binom_big(f + k - 1, static_cast<unsigned long>(k));
            }
            Rat zp(1);
            for (int k = 0; k <= kmax; ++k) {
                Int conv = 0;
                for (int t = 0; t <= k; ++t)
                    conv += a[static_cast<size_t>(t)] * b[static_cast<size_t>(k - t)];
                factor[static_cast<size_t>(k)] = Rat(conv) * zp;
                for (int r = 0; r < j; ++r) zp *= z;
            }
        }
        BiPoly next(static_cast<size_t>(order) + 1,
                    std::vector<Rat>(static_cast<size_t>(x_max) + 1, Rat(0)));
        for (int ud = 0; ud <= order; ++ud)
            for (int xd = 0; xd <= x_max; ++xd) {
                const Rat& c = acc[static_cast<size_t>(ud)][static_cast<size_t>(xd)];
                if (c == 0) continue;
                for (int k = 0; k <= kmax && ud + j * k <= order; ++k) {
                    int nxd = xd + (j == i ? k : 0);
                    if (nxd > x_max) break;
                    next[static_cast<size_t>(ud + j * k)][static_cast<size_t>(nxd)] +=
                        c * factor[static_cast<size_t>(k)];
                }
            }
        acc = std::move(next);
    }

    DiscreteDist dist("cycles_" + std::to_string(i), n, spec.m, true);
    for (int k = 0; k <= x_max; ++k)
        dist.add(k, acc[static_cast<size_t>(n)][static_cast<size_t>(k)]);
    return dist;
}

DiscreteDist cycle_limit_law(long m, int i, const Rat& tail_eps) {
    if (m < 1 || i < 1) throw InputError("cycle_limit_law: bad arguments");
    const Int f = f_im(i, m);
    if (!f.fits_slong_p())
        throw SizeError("cycle_limit_law: f_{i,m} too large to enumerate support");
    const long fl = f.get_si();
    Int tmi;
    mpz_ui_pow_ui(tmi.get_mpz_t(), static_cast<unsigned long>(2 * m),
                  static_cast<unsigned long>(i));
    const Rat p_bin = make_rat(1, tmi + 1);     // 1/((2m)^i + 1)
    const Rat p_nb = make_rat(1, tmi);          // (1/2m)^i

    // Binomial(f, p_bin): finite support 0..f.
    std::vector<Rat> bin(static_cast<size_t>(fl) + 1);
    for (long j = 0; j <= fl; ++j) {
        Rat t = Rat(binom(fl, j));
        for (long r = 0; r < j; ++r) t *= p_bin;
        Rat q = 1 - p_bin;
        for (long r = 0; r < fl - j; ++r) t *= q;
        bin[static_cast<size_t>(j)] = t;
    }

    // NegativeBinomial(f, p_nb), truncated at cumulative mass 1 - tail_eps.
    std::vector<Rat> nb;
    Rat cum(0);
    Rat qf(1);
    {
        Rat q = 1 - p_nb;
        for (long r = 0; r < fl; ++r) qf *= q;
    }
    Rat pj(1);
    for (long j = 0;; ++j) {
        Rat t = Rat(binom(fl + j - 1, j)) * pj * qf;
        nb.push_back(t);
        cum += t;
        if (Rat(1) - cum < tail_eps) break;
        if (j > 100000) throw Error("cycle_limit_law: truncation did not converge");
        pj *= p_nb;
    }

    DiscreteDist dist("cycle_limit_" + std::to_string(i), 0, m, true);
    std::vector<Rat> conv(bin.size() + nb.size() - 1, Rat(0));
    for (size_t a = 0; a < bin.size(); ++a) {
        if (bin[a] == 0) continue;
        for (size_t b = 0; b < nb.size(); ++b)
            conv[a + b] += bin[a] * nb[b];
    }
    Rat total(0);
    for (size_t k = 0; k < conv.size(); ++k) {
        dist.add(static_cast<long>(k), conv[k]);
        total += conv[k];
    }
    dist.set_tail(Rat(1) - total);
    return dist;
}

DiscreteDist fixed_point_limit_law(long m) {
    return cycle_limit_law(m, 1, make_rat(1, Int("1000000000000")));
}

Rat schur_s(const Partition& lambda, long m) {
    if (m < 1) throw InputError("schur_s: m must be >= 1");
    const auto& parts = lambda.parts();
    const int l = lambda.length();
    if (l == 0) return Rat(1);
    const int order = parts[0] + l; // largest subscript used is lambda_1 - 1 + l
    const Rat c = make_rat(1, Int(m));
    auto q = TruncatedSeries::binomial_pos(order, c, static_cast<unsigned long>(m)) *
             TruncatedSeries::binomial_neg(order, c, static_cast<unsigned long>(m));

    auto q_at = [&](int r) -> Rat {
        if (r < 0) return Rat(0);
        return q.coeff(r);
    };

    // det(q_{lambda_i - i + j}) over 1-based i, j; expansion by minors is
    // fine at the lengths that occur here.
    std::vector<std::vector<Rat>> mat(static_cast<size_t>(l), std::vector<Rat>(static_cast<size_t>(l)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            mat[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
                q_at(parts[static_cast<size_t>(i - 1)] - i + j);

    // Bareiss-free Gaussian elimination over exact rationals.
    Rat det(1);
    for (int col = 0; col < l; ++col) {
        int pivot = -1;
        for (int row = col; row < l; ++row)
            if (mat[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            std::swap(mat[static_cast<size_t>(pivot)], mat[static_cast<size_t>(col)]);
            det = -det;
        }
        const Rat& p = mat[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= p;
        for (int row = col + 1; row < l; ++row) {
            Rat factor = mat[static_cast<size_t>(row)][static_cast<size_t>(col)] / p;
            if (factor == 0) continue;
            for (int j = col; j < l; ++j)
                mat[static_cast<size_t>(row)][static_cast<size_t>(j)] -=
                    factor * mat[static_cast<size_t>(col)][static_cast<size_t>(j)];
        }
    }
    return det;
}

DiscreteDist rsk_shape_dist(const ShelfSpec& spec) {
    const int n = spec.n;
    Int two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
    DiscreteDist dist("rsk_shape", n, spec.m, false);
    for (const auto& lambda : partitions_of(n)) {
        Rat p = make_rat(syt_count(lambda), two_n) * schur_s(lambda, spec.m);
        dist.add(lambda.to_string(), p);
    }
    return dist;
}

namespace {

// [u^n] ((1+u/m)/(1-u/m))^(km) via the series engine.
Rat unit_ratio_coeff(int n, long m, long k) {
    const Rat c = make_rat(1, Int(m));
    auto s = TruncatedSeries::binomial_pos(n, c, static_cast<unsigned long>(k * m)) *
             TruncatedSeries::binomial_neg(n, c, static_cast<unsigned long>(k * m));
    return s.coeff(n);
}

} // namespace

DiscreteDist descent_dist(const ShelfSpec& spec) {
    const int n = spec.n;
    const long m = spec.m;
    const int kmax = n + 3; // two terms beyond what the identity needs
    // T(t) = sum_{k=1}^{kmax} a_k t^k, then (1-t)^(n+1) T(t) / 2^n.
    TruncatedSeries tpoly(kmax);
    for (long k = 1; k <= kmax; ++k)
        tpoly.set_coeff(static_cast<int>(k), unit_ratio_coeff(n, m, k));
    auto onemt = TruncatedSeries::binomial_pos(kmax, Rat(-1),
                                               static_cast<unsigned long>(n) + 1);
    auto poly = onemt * tpoly;

    Int two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
    const Rat scale = make_rat(1, two_n);

    if (poly.coeff(0) != 0) throw Error("descent_dist: nonzero constant term");
    for (int j = n + 1; j <= kmax; ++j)
        if (poly.coeff(j) != 0)
            throw Error("descent_dist: k-sum truncated too early (order " +
                        std::to_string(j) + " coefficient nonzero)");

    DiscreteDist dist("descents", n, m, true);
    for (int j = 1; j <= n; ++j) dist.add(j - 1, poly.coeff(j) * scale);
    return dist;
}

std::pair<Rat, Rat> descent_moments(const ShelfSpec& spec) {
    if (spec.n < 2) throw InputError("descent_moments: n must be >= 2");
    Rat mean = make_rat(Int(spec.n - 1), Int(2));
    Rat var = make_rat(Int(spec.n + 1), Int(12)) +
              make_rat(Int(spec.n - 2), Int(6) * spec.m * spec.m);
    return {mean, var};
}

} // namespace shelf
