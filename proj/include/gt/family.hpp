#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "gt/subset.hpp"

namespace gt {

/// A deduplicated family of subsets in canonical order (ascending bit value).
/// Canonical order makes family equality plain list equality.
class SetFamily {
  public:
    SetFamily() = default;

    explicit SetFamily(std::vector<Subset> members) : members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    const std::vector<Subset>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(Subset s) const {
        return std::binary_search(members_.begin(), members_.end(), s);
    }

    bool union_closed() const {
        for (const Subset a : members_)
            for (const Subset b : members_)
                if (!contains(a | b)) return false;
        return true;
    }

    bool intersection_closed() const {
        for (const Subset a : members_)
            for (const Subset b : members_)
                if (!contains(a & b)) return false;
        return true;
    }

    /// The family of complements within the given universe.
    SetFamily complements(Subset universe) const {
        std::vector<Subset> out;
        out.reserve(members_.size());
        for (const Subset m : members_) out.push_back(universe.minus(m));
        return SetFamily(std::move(out));
    }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const SetFamily&) const = default;

  private:
    std::vector<Subset> members_;
};

}  // namespace gt
