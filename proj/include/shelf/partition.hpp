#pragma once

#include "shelf/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace shelf {

/// Integer partition: weakly decreasing positive parts.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                       // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }

    std::string to_string() const;          // "3,1,1"

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

/// Number of standard Young tableaux of the given shape (hook lengths).
Int syt_count(const Partition& lambda);

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ...,
/// (1^n). Deterministic ordering for golden output.
std::vector<Partition> partitions_of(int n);

} // namespace shelf
