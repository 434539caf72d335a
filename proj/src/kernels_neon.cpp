// NEON variants of the deck-statistic kernels (aarch64). The RNG fill
// stays scalar here; NEON lacks a 64-bit lane multiply and the scalar
// splitmix finalizer is already cheap.

#include "shelf/kernels.hpp"

#include <arm_neon.h>

namespace shelf::kernels {

namespace {

void rng_fill_neon(std::uint64_t base, std::uint64_t k0, std::uint64_t* out,
                   std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
        out[i] = detail::mix64(base + (k0 + i + 1) * detail::golden);
}

inline int horizontal_count(uint32x4_t mask) {
    // each lane is 0xFFFFFFFF or 0
    return static_cast<int>(vaddvq_u32(vshrq_n_u32(mask, 31)));
}

int count_valleys_neon(const std::int32_t* a, std::size_t n) {
    if (n < 3) return 0;
    int c = 0;
    std::size_t i = 1;
    for (; i + 4 <= n - 1; i += 4) {
        int32x4_t prev = vld1q_s32(a + i - 1);
        int32x4_t cur = vld1q_s32(a + i);
        int32x4_t next = vld1q_s32(a + i + 1);
        uint32x4_t m = vandq_u32(vcgtq_s32(prev, cur), vcgtq_s32(next, cur));
        c += horizontal_count(m);
    }
    for (; i + 1 < n; ++i)
        if (a[i - 1] > a[i] && a[i] < a[i + 1]) ++c;
    return c;
}

int count_descents_neon(const std::int32_t* a, std::size_t n) {
    if (n < 2) return 0;
    int c = 0;
    std::size_t i = 0;
    for (; i + 5 <= n; i += 4) {
        int32x4_t cur = vld1q_s32(a + i);
        int32x4_t next = vld1q_s32(a + i + 1);
        c += horizontal_count(vcgtq_s32(cur, next));
    }
    for (; i + 1 < n; ++i)
        if (a[i] > a[i + 1]) ++c;
    return c;
}

int count_flips_neon(const std::int32_t* a, std::size_t n, std::int32_t threshold) {
    if (n < 2) return 0;
    const int32x4_t thr = vdupq_n_s32(threshold);
    int c = 0;
    std::size_t i = 0;
    for (; i + 5 <= n; i += 4) {
        int32x4_t cur = vld1q_s32(a + i);
        int32x4_t next = vld1q_s32(a + i + 1);
        uint32x4_t flip = veorq_u32(vcgtq_s32(cur, thr), vcgtq_s32(next, thr));
        c += horizontal_count(flip);
    }
    for (; i + 1 < n; ++i)
        if ((a[i] > threshold) != (a[i + 1] > threshold)) ++c;
    return c;
}

constexpr Kernels neon_kernels{rng_fill_neon, count_valleys_neon,
                               count_descents_neon, count_flips_neon};

} // namespace

const Kernels* neon_table() { return &neon_kernels; }

} // namespace shelf::kernels
