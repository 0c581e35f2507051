#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gt/family.hpp"
#include "gt/subset.hpp"

namespace gt {

/// A finite generalized topological space: a ground set Y together with a
/// family gamma of open sets that contains the empty set and is closed under
/// unions. Y itself need not be open, but it is always gamma-closed.
///
/// The derived families (semi-open sets, the lambda-closed lattice and its
/// relatives) are computed on demand and cached. A Space is immutable after
/// construction except for those one-shot cache fills, which are guarded and
/// idempotent, so values can be shared freely across threads.
class Space {
  public:
    Space() = default;

    /// Validates and builds a space from point names and named open sets.
    /// The empty set is inserted when absent; union-closure is validated,
    /// never repaired.
    static Space make(const std::vector<std::string>& points,
                      const std::vector<std::vector<std::string>>& opens);

    /// Same validation, starting from already-indexed subsets.
    static Space from_family(GroundSet ground, std::vector<Subset> gamma);

    const GroundSet& ground() const { return ground_; }
    const SetFamily& gamma() const { return gamma_; }
    int points() const { return ground_.size(); }
    Subset universe() const { return ground_.universe(); }

    /// Intersection of all gamma-closed supersets of d. The collection is
    /// never empty: Y is gamma-closed because the empty set is open.
    Subset gamma_closure(Subset d) const;

    /// All sets D admitting an open V with V <= D <= gamma_closure(V).
    /// Union-closed; always contains both the empty set and Y.
    const SetFamily& sgamma_open() const;
    const SetFamily& sgamma_closed() const;

    /// Adherence closure with respect to the semi-open family.
    Subset sclosure_gamma(Subset d) const;

    /// Semi-kernel: intersection of all semi-open supersets of d. When no
    /// superset exists the empty intersection counts as Y; such uses are
    /// tallied (see empty_kernel_uses) since Y itself is always semi-open.
    Subset sker(Subset d) const;

    /// Sets equal to kernel-fixed ∩ semi-closed; equivalently fixed points of
    /// D = sker(D) ∩ sclosure_gamma(D). Both routes are computed and compared.
    /// Intersection-closed.
    const SetFamily& slambda_closed() const;
    const SetFamily& slambda_open() const;

    Subset sclosure_lambda(Subset d) const;
    Subset sinterior_lambda(Subset d) const;

    /// Sets whose lambda-closure is contained in every lambda-open superset.
    const SetFamily& sg_closed() const;
    const SetFamily& sg_open() const;

    /// All intersections of nonempty subfamilies of the lambda-open family.
    const SetFamily& gdelta() const;

    /// The trace space on a nonempty carrier: gamma restricted memberwise.
    Space subspace(Subset carrier) const;

    /// How often a kernel/closure fell back to the empty-intersection
    /// convention. Stays zero on every valid space.
    std::uint64_t empty_kernel_uses() const;

    bool operator==(const Space& o) const {
        return ground_ == o.ground_ && gamma_ == o.gamma_;
    }

  private:
    struct Caches;

    GroundSet ground_;
    SetFamily gamma_;
    std::shared_ptr<Caches> caches_;
};

/// Adherence closure of d where the family members are read as the open sets:
/// the points whose every neighbourhood in the family meets d. Computed both
/// pointwise and as the intersection of closed supersets; the two must agree.
Subset closure_in_family(const SetFamily& open_family, Subset d, const GroundSet& ground);

/// Union of the family members contained in d; checked against the
/// complement-dual of closure_in_family.
Subset interior_in_family(const SetFamily& open_family, Subset d, const GroundSet& ground);

}  // namespace gt
