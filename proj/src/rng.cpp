#include "shelf/rng.hpp"

#include "shelf/errors.hpp"
#include "shelf/kernels.hpp"

#include <bit>

namespace shelf {

namespace {
constexpr std::uint64_t stream_salt = 0x6A09E667F3BCC909ull;
}

RngStream::RngStream(RngSeed s)
    : base_(kernels::detail::mix64(s.seed) ^
            kernels::detail::mix64(s.stream_id ^ stream_salt)) {}

void RngStream::refill() {
    kernels::table().rng_fill(base_, counter_, buf_.data(), buf_.size());
    counter_ += buf_.size();
    pos_ = 0;
}

std::uint64_t RngStream::next_u64() {
    if (pos_ == buf_.size()) refill();
    return buf_[pos_++];
}

std::uint32_t RngStream::next_below(std::uint32_t bound) {
    if (bound == 0) throw InputError("next_below: zero bound");
    if (bound == 1) return 0;
    const std::uint64_t mask = std::bit_ceil(static_cast<std::uint64_t>(bound)) - 1;
    for (;;) {
        std::uint64_t v = next_u64() & mask;
        if (v < bound) return static_cast<std::uint32_t>(v);
    }
}

double RngStream::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

} // namespace shelf
