#include "shelf/kernels.hpp"

#include "shelf/errors.hpp"

#include <algorithm>

namespace shelf::kernels {

namespace {

void rng_fill_scalar(std::uint64_t base, std::uint64_t k0, std::uint64_t* out,
                     std::size_t count) {
    for (std::size_t i = 0; i < count; ++i)
        out[i] = detail::mix64(base + (k0 + i + 1) * detail::golden);
}

int count_valleys_scalar(const std::int32_t* a, std::size_t n) {
    int c = 0;
    for (std::size_t i = 1; i + 1 < n; ++i)
        if (a[i - 1] > a[i] && a[i] < a[i + 1]) ++c;
    return c;
}

int count_descents_scalar(const std::int32_t* a, std::size_t n) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (a[i] > a[i + 1]) ++c;
    return c;
}

int count_flips_scalar(const std::int32_t* a, std::size_t n, std::int32_t threshold) {
    int c = 0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if ((a[i] > threshold) != (a[i + 1] > threshold)) ++c;
    return c;
}

constexpr Kernels scalar_table{rng_fill_scalar, count_valleys_scalar,
                               count_descents_scalar, count_flips_scalar};

} // namespace

#if defined(SHELF_HAVE_AVX2)
// defined in kernels_avx2.cpp; null when the CPU lacks AVX2
extern const Kernels* avx2_table();
#endif
#if defined(SHELF_HAVE_NEON)
extern const Kernels* neon_table();
#endif

namespace {

struct Dispatch {
    Backend backend = Backend::Scalar;
    const Kernels* kernels = &scalar_table;
};

Dispatch& dispatch() {
    static Dispatch d = [] {
        Dispatch init;
#if defined(SHELF_HAVE_AVX2)
        if (const Kernels* t = avx2_table()) {
            init.backend = Backend::Avx2;
            init.kernels = t;
        }
#endif
#if defined(SHELF_HAVE_NEON)
        if (const Kernels* t = neon_table()) {
            init.backend = Backend::Neon;
            init.kernels = t;
        }
#endif
        return init;
    }();
    return d;
}

} // namespace

const Kernels& table() { return *dispatch().kernels; }

Backend active() { return dispatch().backend; }

std::vector<Backend> available() {
    std::vector<Backend> out{Backend::Scalar};
#if defined(SHELF_HAVE_AVX2)
    if (avx2_table()) out.push_back(Backend::Avx2);
#endif
#if defined(SHELF_HAVE_NEON)
    if (neon_table()) out.push_back(Backend::Neon);
#endif
    return out;
}

void select(Backend b) {
    if (b == Backend::Scalar) {
        dispatch() = {Backend::Scalar, &scalar_table};
        return;
    }
#if defined(SHELF_HAVE_AVX2)
    if (b == Backend::Avx2) {
        if (const Kernels* t = avx2_table()) {
            dispatch() = {Backend::Avx2, t};
            return;
        }
    }
#endif
#if defined(SHELF_HAVE_NEON)
    if (b == Backend::Neon) {
        if (const Kernels* t = neon_table()) {
            dispatch() = {Backend::Neon, t};
            return;
        }
    }
#endif
    throw InputError("kernel backend not available: " + backend_name(b));
}

std::string backend_name(Backend b) {
    switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
    }
    return "?";
}

} // namespace shelf::kernels
