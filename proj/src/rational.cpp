#include "shelf/rational.hpp"

#include "shelf/errors.hpp"

namespace shelf {

Int binom(long top, long bottom) {
    if (bottom < 0 || top < bottom) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top),
                 static_cast<unsigned long>(bottom));
    return r;
}

Int binom_big(const Int& top, unsigned long k) {
    Int num = 1;
    for (unsigned long j = 0; j < k; ++j) num *= top - static_cast<long>(j);
    Int den = factorial_int(k);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw Error("binom_big: falling factorial not divisible by k!");
    return q;
}

Int factorial_int(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw InputError("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string decimal_string(const Rat& q, int digits) {
    if (digits < 0) throw InputError("decimal_string: negative digits");
    const bool neg = q < 0;
    Rat a = neg ? Rat(-q) : q;
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Int num = a.get_num() * scale;
    const Int& den = a.get_den();
    Int whole, rem;
    mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // round half to even on the scaled value
    Int twice = rem * 2;
    if (twice > den || (twice == den && mpz_odd_p(whole.get_mpz_t()))) whole += 1;

    std::string s = whole.get_str();
    std::string out;
    if (digits == 0) {
        out = s;
    } else {
        if (static_cast<int>(s.size()) <= digits)
            s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
        out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
    }
    if (neg && out.find_first_not_of("0.") != std::string::npos) out.insert(0, "-");
    return out;
}

std::string rational_string(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rat& q) { return q.get_d(); }

} // namespace shelf
