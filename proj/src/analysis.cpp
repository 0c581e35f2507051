#include "gt/analysis.hpp"

#include <stdexcept>

#include "gt/errors.hpp"

namespace gt {

namespace {

std::vector<std::uint8_t> flags_of(const SetFamily& fam, std::uint64_t full) {
    std::vector<std::uint8_t> out(full + 1, 0);
    for (const Subset s : fam) out[s.bits] = 1;
    return out;
}

}  // namespace

Analysis Analysis::of(const Space& s) {
    if (s.points() > kMaxAnalysisPoints)
        throw TooLargeError("predicate analysis needs at most " +
                            std::to_string(kMaxAnalysisPoints) + " points");

    Analysis a;
    a.space = s;
    a.n = s.points();
    a.full = s.universe();
    const std::uint64_t full = a.full.bits;

    a.gamma = s.gamma().members();
    a.semiOpen = s.sgamma_open().members();
    a.lamClosed = s.slambda_closed().members();
    a.lamOpen = s.slambda_open().members();
    a.sgClosed = s.sg_closed().members();
    a.sgOpen = s.sg_open().members();

    a.isSemiOpen = flags_of(s.sgamma_open(), full);
    a.isClosed = flags_of(s.slambda_closed(), full);
    a.isOpen = flags_of(s.slambda_open(), full);
    a.isSgClosed = flags_of(s.sg_closed(), full);
    a.isSgOpen = flags_of(s.sg_open(), full);
    a.isGdelta = flags_of(s.gdelta(), full);

    a.sclGamma.resize(full + 1);
    a.kerGamma.resize(full + 1);
    a.scl.resize(full + 1);
    a.sint.resize(full + 1);
    for (std::uint64_t d = 0;; ++d) {
        const Subset cand{d};
        a.sclGamma[d] = s.sclosure_gamma(cand).bits;
        a.kerGamma[d] = s.sker(cand).bits;
        a.scl[d] = s.sclosure_lambda(cand).bits;
        a.sint[d] = s.sinterior_lambda(cand).bits;
        if (d == full) break;
    }

    a.conditionA = true;
    for (const Subset u : a.lamOpen) {
        for (const Subset v : a.lamOpen)
            if (!a.open(u & v)) {
                a.conditionA = false;
                break;
            }
        if (!a.conditionA) break;
    }

    a.closureAdditive = true;
    for (std::uint64_t e = 0; e <= full && a.closureAdditive; ++e)
        for (std::uint64_t f = 0; f <= e; ++f)
            if (a.scl[e | f] != (a.scl[e] | a.scl[f])) {
                a.closureAdditive = false;
                break;
            }

    return a;
}

bool Analysis::shrink_exists(Subset p, Subset g) const {
    for (const Subset e : lamOpen)
        if (p.subset_of(e) && sclosure(e).subset_of(g)) return true;
    return false;
}

Subset Analysis::shrink(Subset p, Subset g) const {
    bool found = false;
    Subset best, bestCl;
    for (const Subset e : lamOpen) {
        if (!p.subset_of(e) || !sclosure(e).subset_of(g)) continue;
        const Subset cl = sclosure(e);
        if (!found || cl < bestCl || (cl == bestCl && e < best)) {
            found = true;
            best = e;
            bestCl = cl;
        }
    }
    if (!found) throw ShrinkFailedError(p.bits, g.bits);
    return best;
}

}  // namespace gt
