#pragma once

// Words over {+,-} describing generalized signed shuffles: the word length
// is the pile count and '-' piles are reversed. Composition x*y models one
// shuffle followed by another and has length |x|*|y|.

#include <cstdint>
#include <string>
#include <vector>

namespace shelf {

class SignString {
  public:
    explicit SignString(std::vector<std::int8_t> signs);

    /// Parses "+-+-"-style text.
    static SignString parse(const std::string& text);

    /// The length-2m alternating word (+-)^m, the m-shelf shuffle.
    static SignString alternating(long m);

    int size() const { return static_cast<int>(signs_.size()); }
    int sign(int i) const { return signs_[static_cast<size_t>(i - 1)]; } // 1-based

    std::string to_string() const;

    bool operator==(const SignString&) const = default;

  private:
    std::vector<std::int8_t> signs_;
};

/// x*y = y^{x_1}, y^{x_2}, ..., y^{x_a} where y^{-1} reverses the word and
/// flips every sign. Associative, not commutative.
SignString compose(const SignString& x, const SignString& y);

} // namespace shelf
