#pragma once

// Data-parallel inner-loop kernels used by the Monte Carlo machinery:
// counter-based RNG block fill and small integer statistics over decks.
// Scalar reference implementations always exist; AVX2/NEON variants are
// selected at runtime and are bit-identical to the scalar ones.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace shelf::kernels {

enum class Backend { Scalar, Avx2, Neon };

struct Kernels {
    // out[i] = mix64(base + (k0 + i + 1) * golden), i = 0..count-1.
    void (*rng_fill)(std::uint64_t base, std::uint64_t k0, std::uint64_t* out,
                     std::size_t count);
    // #{i : 0 < i < n-1, a[i-1] > a[i] < a[i+1]} (strict interior minima).
    int (*count_valleys)(const std::int32_t* a, std::size_t n);
    // #{i : a[i] > a[i+1]}.
    int (*count_descents)(const std::int32_t* a, std::size_t n);
    // #{i : (a[i] > threshold) != (a[i+1] > threshold)}.
    int (*count_flips)(const std::int32_t* a, std::size_t n, std::int32_t threshold);
};

/// Kernel table for the currently selected backend.
const Kernels& table();

Backend active();
std::vector<Backend> available();

/// Force a backend (tests use this to cross-check variants). Throws
/// shelf::InputError if the backend is not available on this machine.
void select(Backend b);

std::string backend_name(Backend b);

namespace detail {
// splitmix64 finalizer; the single source of truth for every backend.
constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}
} // namespace detail

} // namespace shelf::kernels
