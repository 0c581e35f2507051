#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gt/subset.hpp"

namespace gt {

/// An exact dyadic rational num/2^exp in [0,1]. Normalized so that either
/// exp == 0 (the values 0 and 1) or num is odd. No floating point anywhere.
class Dyadic {
  public:
    constexpr Dyadic() = default;

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return fraction(1, 0); }

    /// num/2^exp, normalized. Requires num <= 2^exp (value within [0,1]).
    static Dyadic fraction(std::uint64_t num, unsigned exp);

    std::uint64_t num() const { return num_; }
    unsigned exp() const { return exp_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return exp_ == 0 && num_ == 1; }

    Dyadic plus(Dyadic o) const;
    /// Value divided by 2^k.
    Dyadic scaled_down(unsigned k) const;

    bool operator==(const Dyadic&) const = default;
    bool operator<(Dyadic o) const;
    bool operator<=(Dyadic o) const { return *this < o || *this == o; }

    /// Exact rendering as "num/2^exp", e.g. "3/2^2"; 0 and 1 render as
    /// "0/2^0" and "1/2^0".
    std::string str() const;

  private:
    std::uint64_t num_ = 0;
    unsigned exp_ = 0;
};

/// A [0,1]-valued function on the points of a space, one exact dyadic per
/// point in ground order.
struct DyadicFn {
    std::vector<Dyadic> values;

    Dyadic at(int i) const { return values[static_cast<std::size_t>(i)]; }
    bool operator==(const DyadicFn&) const = default;
};

}  // namespace gt
