#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gt/errors.hpp"

namespace gt {

/// A subset of an indexed ground set, stored in one 64-bit word.
/// Bit i is the point with index i; bits at or above the ground size are zero.
struct Subset {
    std::uint64_t bits = 0;

    constexpr Subset() = default;
    constexpr explicit Subset(std::uint64_t b) : bits(b) {}

    static constexpr Subset empty_set() { return Subset{0}; }
    static constexpr Subset singleton(int i) { return Subset{std::uint64_t{1} << i}; }

    constexpr bool test(int i) const { return (bits >> i) & 1; }
    constexpr bool empty() const { return bits == 0; }
    constexpr int count() const { return std::popcount(bits); }

    constexpr Subset operator|(Subset o) const { return Subset{bits | o.bits}; }
    constexpr Subset operator&(Subset o) const { return Subset{bits & o.bits}; }
    constexpr Subset minus(Subset o) const { return Subset{bits & ~o.bits}; }
    constexpr bool subset_of(Subset o) const { return (bits & ~o.bits) == 0; }
    constexpr bool intersects(Subset o) const { return (bits & o.bits) != 0; }

    constexpr auto operator<=>(const Subset&) const = default;
};

/// The ordered ground set: distinct point names, at most 64 of them.
/// The position of a name is the bit index used by Subset.
class GroundSet {
  public:
    GroundSet() = default;

    /// Validates distinctness and the 1..64 size bound.
    explicit GroundSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }

    Subset universe() const {
        int n = size();
        return Subset{n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1)};
    }

    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Throws UnknownPointError when the name is not a point of this set.
    int index_of(const std::string& name) const;

    Subset subset_of_names(const std::vector<std::string>& names) const;
    std::vector<std::string> names(Subset s) const;

    /// Renders a subset as "{a,b}"; the empty set as "{}".
    std::string format(Subset s) const;

    bool operator==(const GroundSet& o) const { return labels_ == o.labels_; }

  private:
    std::vector<std::string> labels_;
};

}  // namespace gt
