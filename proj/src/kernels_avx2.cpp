// AVX2 variants of the Monte Carlo kernels. Compiled with -mavx2 in this
// translation unit only; selected at runtime after a cpuid check, so the
// rest of the binary stays portable.

#include "shelf/kernels.hpp"

#include <immintrin.h>

namespace shelf::kernels {

namespace {

// low 64 bits of a 64x64 multiply, per lane (AVX2 has no vpmullq)
inline __m256i mul64lo(__m256i a, __m256i b) {
    __m256i lo = _mm256_mul_epu32(a, b); // a_lo * b_lo, full 64-bit
    __m256i cross = _mm256_add_epi64(
        _mm256_mul_epu32(a, _mm256_srli_epi64(b, 32)),
        _mm256_mul_epu32(_mm256_srli_epi64(a, 32), b));
    return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

inline __m256i mix64_vec(__m256i z) {
    const __m256i m1 = _mm256_set1_epi64x(static_cast<long long>(0xBF58476D1CE4E5B9ull));
    const __m256i m2 = _mm256_set1_epi64x(static_cast<long long>(0x94D049BB133111EBull));
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 30));
    z = mul64lo(z, m1);
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 27));
    z = mul64lo(z, m2);
    z = _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
    return z;
}

void rng_fill_avx2(std::uint64_t base, std::uint64_t k0, std::uint64_t* out,
                   std::size_t count) {
    const std::uint64_t g = detail::golden;
    std::uint64_t t0 = base + (k0 + 1) * g;
    __m256i t = _mm256_set_epi64x(static_cast<long long>(t0 + 3 * g),
                                  static_cast<long long>(t0 + 2 * g),
                                  static_cast<long long>(t0 + g),
                                  static_cast<long long>(t0));
    const __m256i step = _mm256_set1_epi64x(static_cast<long long>(4 * g));
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), mix64_vec(t));
        t = _mm256_add_epi64(t, step);
    }
    for (; i < count; ++i)
        out[i] = detail::mix64(base + (k0 + i + 1) * g);
}

inline int popcount_mask8(__m256i cmp) {
    int mask = _mm256_movemask_ps(_mm256_castsi256_ps(cmp));
    return __builtin_popcount(static_cast<unsigned>(mask));
}

int count_valleys_avx2(const std::int32_t* a, std::size_t n) {
    if (n < 3) return 0;
    int c = 0;
    std::size_t i = 1;
    for (; i + 8 <= n - 1; i += 8) {
        __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i - 1));
        __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i next = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i + 1));
        __m256i m = _mm256_and_si256(_mm256_cmpgt_epi32(prev, cur),
                                     _mm256_cmpgt_epi32(next, cur));
        c += popcount_mask8(m);
    }
    for (; i + 1 < n; ++i)
        if (a[i - 1] > a[i] && a[i] < a[i + 1]) ++c;
    return c;
}

int count_descents_avx2(const std::int32_t* a, std::size_t n) {
    if (n < 2) return 0;
    int c = 0;
    std::size_t i = 0;
    for (; i + 9 <= n; i += 8) {
        __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i next = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i + 1));
        c += popcount_mask8(_mm256_cmpgt_epi32(cur, next));
    }
    for (; i + 1 < n; ++i)
        if (a[i] > a[i + 1]) ++c;
    return c;
}

int count_flips_avx2(const std::int32_t* a, std::size_t n, std::int32_t threshold) {
    if (n < 2) return 0;
    const __m256i thr = _mm256_set1_epi32(threshold);
    int c = 0;
    std::size_t i = 0;
    for (; i + 9 <= n; i += 8) {
        __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i next = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i + 1));
        __m256i flip = _mm256_xor_si256(_mm256_cmpgt_epi32(cur, thr),
                                        _mm256_cmpgt_epi32(next, thr));
        c += popcount_mask8(flip);
    }
    for (; i + 1 < n; ++i)
        if ((a[i] > threshold) != (a[i + 1] > threshold)) ++c;
    return c;
}

constexpr Kernels avx2_kernels{rng_fill_avx2, count_valleys_avx2,
                               count_descents_avx2, count_flips_avx2};

} // namespace

const Kernels* avx2_table() {
    return __builtin_cpu_supports("avx2") ? &avx2_kernels : nullptr;
}

} // namespace shelf::kernels
