#include "gt/axioms.hpp"

#include "gt/errors.hpp"
#include "gt/realfn.hpp"

namespace gt {

namespace {

void require_nonempty(Subset g, Subset h) {
    if (g.empty()) throw EmptyArgumentError("first set");
    if (h.empty()) throw EmptyArgumentError("second set");
}

}  // namespace

bool weakly_separated(const Analysis& a, Subset g, Subset h) {
    require_nonempty(g, h);
    return !g.intersects(a.sclosure(h)) && !h.intersects(a.sclosure(g));
}

bool strongly_separated(const Analysis& a, Subset g, Subset h) {
    require_nonempty(g, h);
    for (const Subset u : a.lamOpen) {
        if (!g.subset_of(u)) continue;
        for (const Subset v : a.lamOpen)
            if (h.subset_of(v) && !u.intersects(v)) return true;
    }
    return false;
}

bool separated_by_closed_neighborhoods(const Analysis& a, Subset g, Subset h) {
    require_nonempty(g, h);
    if (g.intersects(h)) return false;
    // The closed neighbourhoods can be taken minimal, so the search reduces
    // to open supersets with disjoint closures.
    for (const Subset u : a.lamOpen) {
        if (!g.subset_of(u)) continue;
        for (const Subset v : a.lamOpen)
            if (h.subset_of(v) && !a.sclosure(u).intersects(a.sclosure(v))) return true;
    }
    return false;
}

namespace {

bool points_t0(const Analysis& a) {
    for (int p = 0; p < a.n; ++p)
        for (int q = p + 1; q < a.n; ++q) {
            bool split = false;
            for (const Subset u : a.lamOpen)
                if (u.test(p) != u.test(q)) {
                    split = true;
                    break;
                }
            if (!split) return false;
        }
    return true;
}

bool singletons_closed(const Analysis& a) {
    for (int p = 0; p < a.n; ++p)
        if (!a.closed(Subset::singleton(p))) return false;
    return true;
}

bool points_disjoint_opens(const Analysis& a) {
    for (int p = 0; p < a.n; ++p)
        for (int q = p + 1; q < a.n; ++q) {
            bool found = false;
            for (const Subset u : a.lamOpen) {
                if (!u.test(p) || u.test(q)) continue;
                for (const Subset v : a.lamOpen)
                    if (v.test(q) && !u.intersects(v)) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) return false;
        }
    return true;
}

bool points_urysohn(const Analysis& a) {
    for (int p = 0; p < a.n; ++p)
        for (int q = p + 1; q < a.n; ++q) {
            bool found = false;
            for (const Subset u : a.lamOpen) {
                if (!u.test(p) || u.test(q)) continue;
                for (const Subset v : a.lamOpen)
                    if (v.test(q) && !a.sclosure(u).intersects(a.sclosure(v))) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) return false;
        }
    return true;
}

bool points_function_separated(const Analysis& a) {
    for (int p = 0; p < a.n; ++p)
        for (int q = p + 1; q < a.n; ++q)
            if (!separated_by_function(a, Subset::singleton(p), Subset::singleton(q)))
                return false;
    return true;
}

bool axiom_r0(const Analysis& a) {
    for (const Subset g : a.lamOpen)
        for (int y = 0; y < a.n; ++y)
            if (g.test(y) && !a.sclosure(Subset::singleton(y)).subset_of(g)) return false;
    return true;
}

bool axiom_r1(const Analysis& a) {
    for (int p = 0; p < a.n; ++p)
        for (int q = 0; q < a.n; ++q) {
            if (p == q) continue;
            if (a.sclosure(Subset::singleton(q)).test(p)) continue;
            bool found = false;
            for (const Subset u : a.lamOpen) {
                if (!u.test(p)) continue;
                for (const Subset v : a.lamOpen)
                    if (v.test(q) && !u.intersects(v)) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) return false;
        }
    return true;
}

// Open E containing the closed set A and open F around the point, with either
// disjoint closures (strong) or merely disjoint (weak).
bool regular(const Analysis& a, bool strong) {
    for (const Subset A : a.lamClosed)
        for (int p = 0; p < a.n; ++p) {
            if (A.test(p)) continue;
            bool found = false;
            for (const Subset e : a.lamOpen) {
                if (!A.subset_of(e)) continue;
                for (const Subset f : a.lamOpen) {
                    if (!f.test(p)) continue;
                    const bool apart = strong
                                           ? !a.sclosure(e).intersects(a.sclosure(f))
                                           : !e.intersects(f);
                    if (apart) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) return false;
        }
    return true;
}

bool completely_regular(const Analysis& a) {
    for (const Subset F : a.lamClosed) {
        if (F.empty()) continue;
        for (int p = 0; p < a.n; ++p) {
            if (F.test(p)) continue;
            if (!separated_by_function(a, Subset::singleton(p), F)) return false;
        }
    }
    return true;
}

bool t3_separation(const Analysis& a) {
    for (const Subset P : a.lamClosed) {
        if (P.empty()) continue;
        for (int q = 0; q < a.n; ++q) {
            if (P.test(q)) continue;
            if (!strongly_separated(a, Subset::singleton(q), P)) return false;
        }
    }
    return true;
}

bool normal(const Analysis& a, bool strong) {
    for (const Subset A : a.lamClosed) {
        if (A.empty()) continue;
        for (const Subset B : a.lamClosed) {
            if (B.empty() || A.intersects(B)) continue;
            bool found = false;
            for (const Subset e : a.lamOpen) {
                if (!A.subset_of(e)) continue;
                for (const Subset f : a.lamOpen) {
                    if (!B.subset_of(f)) continue;
                    const bool apart = strong
                                           ? !a.sclosure(e).intersects(a.sclosure(f))
                                           : !e.intersects(f);
                    if (apart) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) return false;
        }
    }
    return true;
}

// Quantifies over weakly separated pairs of arbitrary nonempty sets.
bool completely_normal(const Analysis& a) {
    const std::uint64_t full = a.full.bits;
    for (std::uint64_t g = 1; g <= full; ++g)
        for (std::uint64_t h = 1; h <= g; ++h) {
            const Subset G{g}, H{h};
            if (G.intersects(a.sclosure(H)) || H.intersects(a.sclosure(G))) continue;
            bool found = false;
            for (const Subset u : a.lamOpen) {
                if (!G.subset_of(u)) continue;
                for (const Subset v : a.lamOpen)
                    if (H.subset_of(v) &&
                        !a.sclosure(u).intersects(a.sclosure(v))) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) return false;
        }
    return true;
}

bool t5_separation(const Analysis& a) {
    const std::uint64_t full = a.full.bits;
    for (std::uint64_t g = 1; g <= full; ++g)
        for (std::uint64_t h = 1; h <= g; ++h) {
            const Subset G{g}, H{h};
            if (G.intersects(a.sclosure(H)) || H.intersects(a.sclosure(G))) continue;
            if (!strongly_separated(a, G, H)) return false;
        }
    return true;
}

}  // namespace

bool normal_weak(const Analysis& a) { return normal(a, false); }

AxiomReport classify(const Analysis& a) {
    AxiomReport r;
    r.T0 = points_t0(a);
    r.T1 = singletons_closed(a);
    r.T2 = points_disjoint_opens(a);
    r.urysohn = points_urysohn(a);
    r.completelyHausdorff = points_function_separated(a);
    r.R0 = axiom_r0(a);
    r.R1 = axiom_r1(a);
    r.regularStrong = regular(a, true);
    r.regularWeak = regular(a, false);
    r.completelyRegular = completely_regular(a);
    r.T3 = r.T1 && t3_separation(a);
    r.tychonoff = r.completelyRegular && r.T1;
    r.normalStrong = normal(a, true);
    r.normalWeak = normal(a, false);
    r.completelyNormal = completely_normal(a);
    r.T4 = r.T1 && r.normalWeak;
    r.T5 = r.T1 && t5_separation(a);
    r.perfectlyNormal = perfectly_normal_check(a).holds;
    r.conditionA = a.conditionA;
    r.closureAdditive = a.closureAdditive;
    return r;
}

AxiomReport classify(const Space& s) { return classify(Analysis::of(s)); }

bool weakly_separated(const Space& s, Subset g, Subset h) {
    return weakly_separated(Analysis::of(s), g, h);
}
bool strongly_separated(const Space& s, Subset g, Subset h) {
    return strongly_separated(Analysis::of(s), g, h);
}
bool separated_by_closed_neighborhoods(const Space& s, Subset g, Subset h) {
    return separated_by_closed_neighborhoods(Analysis::of(s), g, h);
}

std::vector<std::pair<std::string, bool>> axiom_lines(const AxiomReport& r) {
    return {
        {"T0", r.T0},
        {"T1", r.T1},
        {"T2", r.T2},
        {"urysohn", r.urysohn},
        {"completelyHausdorff", r.completelyHausdorff},
        {"R0", r.R0},
        {"R1", r.R1},
        {"regularStrong", r.regularStrong},
        {"regularWeak", r.regularWeak},
        {"completelyRegular", r.completelyRegular},
        {"T3", r.T3},
        {"tychonoff", r.tychonoff},
        {"normalStrong", r.normalStrong},
        {"normalWeak", r.normalWeak},
        {"completelyNormal", r.completelyNormal},
        {"T4", r.T4},
        {"T5", r.T5},
        {"perfectlyNormal", r.perfectlyNormal},
        {"conditionA", r.conditionA},
        {"closureAdditive", r.closureAdditive},
    };
}

}  // namespace gt
