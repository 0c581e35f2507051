#pragma once

#include <cstdint>
#include <vector>

#include "gt/space.hpp"

namespace gt {

/// Dense per-space tables for the predicate and harness layers. Everything is
/// indexed by raw subset bits, so building one is exponential in the point
/// count; the ceiling is kMaxAnalysisPoints.
struct Analysis {
    static constexpr int kMaxAnalysisPoints = 8;

    Space space;
    int n = 0;
    Subset full;

    std::vector<Subset> gamma;       // canonical order
    std::vector<Subset> semiOpen;    // sgamma-open
    std::vector<Subset> lamClosed;   // slambda-closed
    std::vector<Subset> lamOpen;     // slambda-open
    std::vector<Subset> sgClosed;    // sg-lambda-closed
    std::vector<Subset> sgOpen;      // sg-lambda-open

    // Membership flags indexed by subset bits.
    std::vector<std::uint8_t> isSemiOpen, isClosed, isOpen, isSgClosed, isSgOpen, isGdelta;

    // Operator tables indexed by subset bits.
    std::vector<std::uint64_t> sclGamma, kerGamma, scl, sint;

    bool conditionA = false;        // pairwise meets of lambda-open sets stay open
    bool closureAdditive = false;   // scl(E ∪ F) = scl(E) ∪ scl(F) for all E, F

    static Analysis of(const Space& s);

    Subset sclosure(Subset d) const { return Subset{scl[d.bits]}; }
    Subset sinterior(Subset d) const { return Subset{sint[d.bits]}; }
    Subset kernel(Subset d) const { return Subset{kerGamma[d.bits]}; }
    bool open(Subset s) const { return isOpen[s.bits] != 0; }
    bool closed(Subset s) const { return isClosed[s.bits] != 0; }
    bool sgIsOpen(Subset s) const { return isSgOpen[s.bits] != 0; }
    bool sgIsClosed(Subset s) const { return isSgClosed[s.bits] != 0; }
    bool gdeltaMember(Subset s) const { return isGdelta[s.bits] != 0; }

    /// True when some lambda-open E has p <= E and scl(E) <= g.
    bool shrink_exists(Subset p, Subset g) const;

    /// The canonical such E: minimal scl(E), ties by canonical subset order.
    /// Throws ShrinkFailedError when none exists.
    Subset shrink(Subset p, Subset g) const;
};

}  // namespace gt
