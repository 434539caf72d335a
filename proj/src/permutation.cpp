#include "shelf/permutation.hpp"

#include "shelf/errors.hpp"

#include <charconv>
#include <numeric>

namespace shelf {

namespace {

std::vector<std::int32_t> parse_int_list(const std::string& text) {
    std::vector<std::int32_t> out;
    const char* p = text.data();
    const char* end = p + text.size();
    while (p < end) {
        while (p < end && (*p == ' ' || *p == ',')) ++p;
        if (p == end) break;
        std::int32_t value = 0;
        auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{} || next == p)
            throw InputError("malformed permutation text: '" + text + "'");
        out.push_back(value);
        p = next;
    }
    if (out.empty()) throw InputError("empty permutation text");
    return out;
}

void check_abs_permutation(const std::vector<std::int32_t>& v, bool signed_ok) {
    const int n = static_cast<int>(v.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (std::int32_t x : v) {
        std::int32_t a = x < 0 ? -x : x;
        if (x == 0 || (!signed_ok && x < 0) || a > n)
            throw InputError("entry out of range for permutation of size " +
                             std::to_string(n));
        if (seen[static_cast<size_t>(a)])
            throw InputError("duplicate entry " + std::to_string(a) +
                             " in permutation");
        seen[static_cast<size_t>(a)] = true;
    }
}

} // namespace

Permutation::Permutation(std::vector<std::int32_t> mapping) : v_(std::move(mapping)) {
    check_abs_permutation(v_, /*signed_ok=*/false);
}

Permutation Permutation::identity(int n) {
    std::vector<std::int32_t> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
    return Permutation(parse_int_list(text));
}

Permutation Permutation::inverse() const {
    std::vector<std::int32_t> inv(v_.size());
    for (size_t i = 0; i < v_.size(); ++i)
        inv[static_cast<size_t>(v_[i] - 1)] = static_cast<std::int32_t>(i + 1);
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& v) const {
    if (v.size() != size()) throw InputError("compose: size mismatch");
    std::vector<std::int32_t> out(v_.size());
    for (size_t i = 0; i < v_.size(); ++i)
        out[i] = v_[static_cast<size_t>(v.v_[i] - 1)];
    return Permutation(std::move(out));
}

Permutation Permutation::complement() const {
    const auto n = static_cast<std::int32_t>(v_.size());
    std::vector<std::int32_t> out(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) out[i] = n - v_[i] + 1;
    return Permutation(std::move(out));
}

Permutation Permutation::reversed() const {
    return Permutation(std::vector<std::int32_t>(v_.rbegin(), v_.rend()));
}

std::string Permutation::to_string() const {
    std::string s;
    for (size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v_[i]);
    }
    return s;
}

SignedPermutation::SignedPermutation(std::vector<std::int32_t> mapping)
    : v_(std::move(mapping)) {
    check_abs_permutation(v_, /*signed_ok=*/true);
}

SignedPermutation SignedPermutation::parse(const std::string& text) {
    return SignedPermutation(parse_int_list(text));
}

SignedPermutation SignedPermutation::inverse() const {
    std::vector<std::int32_t> inv(v_.size());
    for (size_t i = 0; i < v_.size(); ++i) {
        std::int32_t x = v_[i];
        if (x > 0)
            inv[static_cast<size_t>(x - 1)] = static_cast<std::int32_t>(i + 1);
        else
            inv[static_cast<size_t>(-x - 1)] = -static_cast<std::int32_t>(i + 1);
    }
    return SignedPermutation(std::move(inv));
}

std::string SignedPermutation::to_string() const {
    std::string s;
    for (size_t i = 0; i < v_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v_[i]);
    }
    return s;
}

} // namespace shelf
