#pragma once

#include <vector>

#include "gt/analysis.hpp"
#include "gt/family.hpp"
#include "gt/space.hpp"

namespace gt {

/// A family together with the target it is required to cover.
struct Cover {
    SetFamily members;
    Subset target;

    bool covers() const {
        Subset u;
        for (const Subset m : members) u = u | m;
        return target.subset_of(u);
    }
};

/// Every member of fine lies inside some member of coarse.
bool is_refinement(const SetFamily& fine, const SetFamily& coarse);

/// Every point has a lambda-open neighbourhood (an open set containing it)
/// meeting only finitely many members. Finitely trivial, computed literally.
bool is_locally_finite(const Analysis& a, const SetFamily& family);
bool is_locally_finite(const Space& s, const SetFamily& family);

/// Finite intersection property: every subcollection has nonempty meet. The
/// meet of the whole family decides it (any empty sub-meet forces the full
/// meet empty); the exhaustive subcollection sweep lives in the tests.
bool has_fip(const SetFamily& family);

/// Greedy finite subcover of the target drawn from the cover, in canonical
/// order. Empty result when the cover does not reach the target.
std::vector<Subset> finite_subcover(const Cover& cover);

/// Subcover route: every lambda-open cover of Y has a finite subcover. Small
/// open families are swept exhaustively; larger ones reduce to the full
/// family, which always covers Y. Checked against the FIP route.
bool is_compact(const Analysis& a);
bool is_compact(const Space& s);

/// Dual route via lambda-closed families with the finite intersection
/// property; must agree with is_compact.
bool fip_compact(const Analysis& a);
bool fip_compact(const Space& s);

/// Finite-trivial predicates, still computed from their definitions so the
/// cover machinery gets exercised.
bool is_paracompact(const Analysis& a);
bool is_paracompact(const Space& s);
bool is_lindelof(const Analysis& a);
bool is_lindelof(const Space& s);
bool is_countably_compact(const Analysis& a);
bool is_countably_compact(const Space& s);

}  // namespace gt
