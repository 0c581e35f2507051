#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gt/analysis.hpp"
#include "gt/dyadic.hpp"
#include "gt/space.hpp"

namespace gt {

/// The nested open family of the dyadic separation construction: one open set
/// per label r/2^depth (0 < r < 2^depth), plus the top set V(1) = Y - B.
/// Invariants, checked by check_dyadic_family:
///   (a) A lies inside every level;
///   (b) every level's lambda-closure lies inside Y - B;
///   (c) labels q < q' imply scl(V(q)) <= V(q').
struct DyadicFamily {
    int depth = 0;
    std::vector<std::pair<Dyadic, Subset>> levels;  // ascending labels
    Subset top;
};

/// Fiber criterion: f is continuous iff every fiber f^-1(v) is lambda-open.
/// f has finite range, so every open set of reals pulls back to a union of
/// fibers, and each single value is isolated by a small interval; with the
/// lambda-open family closed under unions, fiber openness is therefore both
/// necessary and sufficient for the preimage definition of continuity.
bool is_continuous(const Analysis& a, const DyadicFn& f);
bool is_continuous(const Space& s, const DyadicFn& f);

/// Searches for f with f(A) = {0}, f(B) = {1} and every fiber lambda-open.
/// The search walks partitions of Y into lambda-open blocks in canonical
/// block order; merging the blocks between the 0-block and the 1-block keeps
/// them open, so a three-block partition (0-block, 1-block, remainder at 1/2)
/// is exhaustive. Deterministic; absent when no partition exists.
std::optional<DyadicFn> separated_by_function(const Analysis& a, Subset A, Subset B);
std::optional<DyadicFn> separated_by_function(const Space& s, Subset A, Subset B);

/// Builds the nested dyadic family to the given depth between disjoint
/// nonempty lambda-closed A and B, then reads f off the family: 0 on the
/// lowest level, the least containing label elsewhere inside the family, 1
/// outside. Requires the space to satisfy weak normality and condition (A).
/// Each shrink step picks the open set with minimal closure (ties by
/// canonical subset order), so output is deterministic.
std::pair<DyadicFamily, DyadicFn> urysohn_construct(const Analysis& a, Subset A, Subset B,
                                                    int depth);
std::pair<DyadicFamily, DyadicFn> urysohn_construct(const Space& s, Subset A, Subset B,
                                                    int depth);

/// Throws std::logic_error when (a), (b) or (c) fails.
void check_dyadic_family(const Analysis& a, Subset A, Subset B, const DyadicFamily& fam);

/// All intersections of nonempty subfamilies of the lambda-open family.
const SetFamily& g_delta_family(const Space& s);

/// Exact-zero-set construction for disjoint nonempty lambda-closed M, N with
/// M an intersection of open sets: intersect the open supersets of M into a
/// decreasing open chain (condition (A) keeps it open), separate M from each
/// chain complement, and sum the pieces with the exact dyadic tail once the
/// chain stabilizes. Contract: f^-1(0) = M exactly, f(N) = {1}, 0 <= f <= 1.
DyadicFn zero_set_function(const Analysis& a, Subset M, Subset N);
DyadicFn zero_set_function(const Space& s, Subset M, Subset N);

struct PerfectNormality {
    bool holds = false;
    bool vacuous = false;  // no disjoint pair of nonempty closed sets exists
    std::optional<std::pair<Subset, Subset>> failure;
};

/// For every disjoint pair of nonempty lambda-closed M, N: is there f with
/// f^-1(0) = M and f^-1(1) = N exactly? Fibers of such an f are lambda-open,
/// so the search reduces to M, N and Y - M - N all being lambda-open.
PerfectNormality perfectly_normal_check(const Analysis& a);
PerfectNormality perfectly_normal_check(const Space& s);

}  // namespace gt
