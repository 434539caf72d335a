#pragma once

// Permutations in one-line notation, 1-indexed: entry i is w(i), the card
// at position i of the deck. Values are immutable after construction.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace shelf {

class Permutation {
  public:
    Permutation() = default;

    /// Validates that `mapping` is a permutation of {1,...,n}.
    explicit Permutation(std::vector<std::int32_t> mapping);

    static Permutation identity(int n);

    /// Parses comma-separated one-line notation, e.g. "2,3,1".
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(v_.size()); }

    /// w(i) with i in 1..n.
    std::int32_t operator()(int i) const { return v_[static_cast<size_t>(i - 1)]; }

    std::span<const std::int32_t> one_line() const { return v_; }

    Permutation inverse() const;

    /// Function composition: (w.compose(v))(i) = w(v(i)).
    Permutation compose(const Permutation& v) const;

    /// Value complement: i -> n - w(i) + 1.
    Permutation complement() const;

    /// Position reversal: i -> w(n + 1 - i).
    Permutation reversed() const;

    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;

  private:
    std::vector<std::int32_t> v_;
};

/// Signed permutations: absolute values form a permutation of {1,...,n},
/// each entry carries a sign.
class SignedPermutation {
  public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<std::int32_t> mapping);

    static SignedPermutation parse(const std::string& text);

    int size() const { return static_cast<int>(v_.size()); }
    std::int32_t operator()(int i) const { return v_[static_cast<size_t>(i - 1)]; }
    std::span<const std::int32_t> one_line() const { return v_; }

    SignedPermutation inverse() const;

    std::string to_string() const;

    auto operator<=>(const SignedPermutation&) const = default;

  private:
    std::vector<std::int32_t> v_;
};

} // namespace shelf
