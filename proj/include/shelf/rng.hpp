#pragma once

// Counter-based pseudo-random streams. A stream is fully determined by
// (seed, stream_id, generator version): word k of the stream is a pure
// function of those, so trials can be distributed over any number of
// threads and still reproduce bit-identically.

#include <array>
#include <cstdint>

namespace shelf {

inline constexpr const char* kGeneratorVersion = "shelfrng-1";

struct RngSeed {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

class RngStream {
  public:
    explicit RngStream(RngSeed s);
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : RngStream(RngSeed{seed, stream_id}) {}

    std::uint64_t next_u64();

    /// Unbiased uniform draw in [0, bound); bound >= 1.
    std::uint32_t next_below(std::uint32_t bound);

    /// Uniform in [0, 1), 53-bit resolution.
    double next_double();

  private:
    void refill();

    std::uint64_t base_;
    std::uint64_t counter_ = 0;
    std::array<std::uint64_t, 64> buf_{};
    unsigned pos_ = static_cast<unsigned>(buf_.size());
};

} // namespace shelf
