#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gt/analysis.hpp"
#include "gt/space.hpp"

namespace gt {

/// One boolean per separation predicate, all decided against the lambda-open
/// and lambda-closed families. A report is a pure function of the space.
struct AxiomReport {
    bool T0 = false;
    bool T1 = false;
    bool T2 = false;
    bool urysohn = false;              // T2½: disjoint closures around points
    bool completelyHausdorff = false;  // points separated by a function
    bool R0 = false;
    bool R1 = false;
    bool regularStrong = false;        // separating opens have disjoint closures
    bool regularWeak = false;          // separating opens merely disjoint
    bool completelyRegular = false;
    bool T3 = false;
    bool tychonoff = false;            // T3½ = completely regular + T1
    bool normalStrong = false;
    bool normalWeak = false;
    bool completelyNormal = false;
    bool T4 = false;
    bool T5 = false;
    bool perfectlyNormal = false;
    bool conditionA = false;           // pairwise meets of open sets stay open
    bool closureAdditive = false;

    bool operator==(const AxiomReport&) const = default;
};

/// Field order used everywhere a report is rendered.
std::vector<std::pair<std::string, bool>> axiom_lines(const AxiomReport& r);

AxiomReport classify(const Analysis& a);
AxiomReport classify(const Space& s);

/// Neither set meets the other's lambda-closure. Arguments must be nonempty.
bool weakly_separated(const Analysis& a, Subset g, Subset h);
bool weakly_separated(const Space& s, Subset g, Subset h);

/// Disjoint lambda-open supersets exist. Arguments must be nonempty.
bool strongly_separated(const Analysis& a, Subset g, Subset h);
bool strongly_separated(const Space& s, Subset g, Subset h);

/// Lambda-open supersets whose closures admit disjoint lambda-closed
/// neighbourhoods. Arguments must be nonempty; overlapping sets yield false.
bool separated_by_closed_neighborhoods(const Analysis& a, Subset g, Subset h);
bool separated_by_closed_neighborhoods(const Space& s, Subset g, Subset h);

/// Every disjoint pair of nonempty lambda-closed sets is strongly separated.
/// Exposed on its own because the dyadic constructions gate on it.
bool normal_weak(const Analysis& a);

}  // namespace gt
