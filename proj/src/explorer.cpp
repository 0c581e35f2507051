#include "gt/explorer.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gt/analysis.hpp"
#include "gt/axioms.hpp"
#include "gt/covers.hpp"
#include "gt/detail/check.hpp"
#include "gt/errors.hpp"
#include "gt/realfn.hpp"

namespace gt {

using detail::check;

const char* status_name(TheoremStatus s) {
    switch (s) {
        case TheoremStatus::verified: return "verified";
        case TheoremStatus::vacuous: return "vacuous";
        case TheoremStatus::failed: return "FAILED";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Enumeration by canonical augmentation
//
// A family over n points is a 32-bit mask whose bit s-1 says whether the
// nonempty subset with bit pattern s belongs to gamma. Children extend a
// family by one explicit subset larger than the last explicit one and close
// under union; closure can only add supersets of the new subset, so each
// family is produced exactly once, by its greedy generator chain.

namespace {

std::uint32_t union_close(std::uint32_t fam, int m) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 1; s <= m; ++s) {
            if (!(fam >> (s - 1) & 1)) continue;
            for (int t = s + 1; t <= m; ++t) {
                if (!(fam >> (t - 1) & 1)) continue;
                const int u = s | t;
                if (!(fam >> (u - 1) & 1)) {
                    fam |= std::uint32_t{1} << (u - 1);
                    changed = true;
                }
            }
        }
    }
    return fam;
}

std::vector<Subset> family_members(std::uint32_t fam, int m) {
    std::vector<Subset> out;
    for (int s = 1; s <= m; ++s)
        if (fam >> (s - 1) & 1) out.push_back(Subset{static_cast<std::uint64_t>(s)});
    return out;
}

std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
    return out;
}

Space space_of(std::uint32_t fam, int n) {
    return Space::from_family(GroundSet(default_labels(n)),
                              family_members(fam, (1 << n) - 1));
}

std::vector<std::vector<int>> point_permutations(int n) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<std::vector<int>> out;
    do {
        out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

std::uint64_t map_subset(std::uint64_t s, const std::vector<int>& perm) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (s >> i & 1) out |= std::uint64_t{1} << perm[i];
    return out;
}

std::vector<std::uint64_t> mapped_sorted(const std::vector<Subset>& members,
                                         const std::vector<int>& perm) {
    std::vector<std::uint64_t> out;
    out.reserve(members.size());
    for (const Subset m : members) out.push_back(map_subset(m.bits, perm));
    std::sort(out.begin(), out.end());
    return out;
}

bool family_is_canonical(const std::vector<Subset>& members,
                         const std::vector<std::vector<int>>& perms) {
    std::vector<std::uint64_t> orig;
    orig.reserve(members.size());
    for (const Subset m : members) orig.push_back(m.bits);
    for (const auto& perm : perms)
        if (mapped_sorted(members, perm) < orig) return false;
    return true;
}

void augmentation_dfs(std::uint32_t fam, int last, int n,
                      const std::vector<std::vector<int>>* perms,
                      const std::function<void(std::uint32_t)>& emit) {
    const int m = (1 << n) - 1;
    if (!perms || family_is_canonical(family_members(fam, m), *perms)) emit(fam);
    for (int s = last + 1; s <= m; ++s) {
        if (fam >> (s - 1) & 1) continue;
        const std::uint32_t child = union_close(fam | (std::uint32_t{1} << (s - 1)), m);
        const std::uint32_t below = (std::uint32_t{1} << (s - 1)) - 1;
        check((child & below) == (fam & below),
              "augmentation closure may only add sets above the explicit one");
        augmentation_dfs(child, s, n, perms, emit);
    }
}

void validate_enumeration_size(int n) {
    if (n < 1) throw TooLargeError("ground size must be at least 1");
    if (n > 5) throw TooLargeError("enumeration is capped at 5 points");
    if (n == 5) throw TooLargeError("exhaustive enumeration stops at 4 points; sample at 5");
}

}  // namespace

void enumerate_spaces(int n, bool dedup, const std::function<void(const Space&)>& emit) {
    validate_enumeration_size(n);
    const auto perms = point_permutations(n);
    augmentation_dfs(0, 0, n, dedup ? &perms : nullptr,
                     [&](std::uint32_t fam) { emit(space_of(fam, n)); });
}

std::uint64_t count_spaces(int n, bool dedup) {
    validate_enumeration_size(n);
    const auto perms = point_permutations(n);
    std::uint64_t count = 0;
    augmentation_dfs(0, 0, n, dedup ? &perms : nullptr, [&](std::uint32_t) { ++count; });
    return count;
}

namespace {

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

}  // namespace

void sample_spaces(int n, std::uint64_t count, std::uint64_t seed,
                   const std::function<void(const Space&)>& emit) {
    if (n < 1 || n > 5) throw TooLargeError("sampling supports 1 to 5 points");
    const int m = (1 << n) - 1;
    std::mt19937_64 rng(seed);
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint64_t generators = bounded(rng, static_cast<std::uint64_t>(m) + 1);
        std::uint32_t fam = 0;
        for (std::uint64_t g = 0; g < generators; ++g) {
            const int s = 1 + static_cast<int>(bounded(rng, static_cast<std::uint64_t>(m)));
            fam |= std::uint32_t{1} << (s - 1);
        }
        emit(space_of(union_close(fam, m), n));
    }
}

Space canonical_form(const Space& s) {
    const int n = s.points();
    if (n > 8) throw TooLargeError("canonical forms are computed for at most 8 points");
    const auto perms = point_permutations(n);

    const auto& members = s.gamma().members();
    std::vector<std::uint64_t> best;
    bool haveBest = false;
    for (const auto& perm : perms) {
        auto mapped = mapped_sorted(members, perm);
        if (!haveBest || mapped < best) {
            best = std::move(mapped);
            haveBest = true;
        }
    }
    std::vector<Subset> out;
    out.reserve(best.size());
    for (const std::uint64_t b : best) out.push_back(Subset{b});
    return Space::from_family(s.ground(), std::move(out));
}

// ---------------------------------------------------------------------------
// Theorem harness

namespace {

// A shrink whose middle set is sg-open instead of lambda-open.
bool sg_shrink_exists(const Analysis& a, Subset p, Subset g) {
    for (const Subset e : a.sgOpen)
        if (p.subset_of(e) && a.sclosure(e).subset_of(g)) return true;
    return false;
}

// --- the eight regularity statements ---

bool reg_stmt2(const Analysis& a) {
    for (const Subset g : a.lamOpen)
        for (int y = 0; y < a.n; ++y) {
            if (!g.test(y)) continue;
            bool found = false;
            for (const Subset e : a.lamOpen)
                if (e.test(y) && a.sclosure(e).subset_of(g)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    return true;
}

bool reg_stmt3(const Analysis& a) {
    for (const Subset p : a.lamClosed) {
        Subset meet = a.full;
        for (const Subset f : a.lamOpen)
            if (p.subset_of(f)) meet = meet & a.sclosure(f);
        if (meet != p) return false;
    }
    return true;
}

bool reg_stmt4(const Analysis& a) {
    for (std::uint64_t d = 1; d <= a.full.bits; ++d) {
        const Subset D{d};
        for (const Subset e : a.lamOpen) {
            if (!D.intersects(e)) continue;
            bool found = false;
            for (const Subset f : a.lamOpen)
                if (D.intersects(f) && a.sclosure(f).subset_of(e)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    }
    return true;
}

bool reg_stmt5(const Analysis& a) {
    for (std::uint64_t d = 1; d <= a.full.bits; ++d) {
        const Subset D{d};
        for (const Subset p : a.lamClosed) {
            if (D.intersects(p)) continue;
            bool found = false;
            for (const Subset m : a.lamOpen) {
                if (!D.intersects(m)) continue;
                for (const Subset nn : a.lamOpen)
                    if (p.subset_of(nn) && !m.intersects(nn)) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) return false;
        }
    }
    return true;
}

bool reg_stmt6(const Analysis& a) {
    for (const Subset p : a.lamClosed)
        for (int y = 0; y < a.n; ++y) {
            if (p.test(y)) continue;
            bool found = false;
            for (const Subset e : a.lamOpen) {
                if (!e.test(y)) continue;
                for (const Subset f : a.sgOpen)
                    if (p.subset_of(f) && !e.intersects(f)) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) return false;
        }
    return true;
}

bool reg_stmt7(const Analysis& a) {
    for (std::uint64_t d = 1; d <= a.full.bits; ++d) {
        const Subset D{d};
        for (const Subset p : a.lamClosed) {
            if (D.intersects(p)) continue;
            bool found = false;
            for (const Subset e : a.lamOpen) {
                if (!D.intersects(e)) continue;
                for (const Subset f : a.sgOpen)
                    if (p.subset_of(f) && !e.intersects(f)) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) return false;
        }
    }
    return true;
}

// --- the four normality statements ---

bool norm_stmt2(const Analysis& a) {
    for (const Subset e : a.lamOpen)
        for (const Subset f : a.lamOpen) {
            if ((e | f) != a.full) continue;
            bool found = false;
            for (const Subset A : a.lamClosed) {
                if (!A.subset_of(e)) continue;
                for (const Subset B : a.lamClosed)
                    if (B.subset_of(f) && (A | B) == a.full) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            if (!found) return false;
        }
    return true;
}

bool norm_stmt3(const Analysis& a) {
    for (const Subset p : a.lamClosed)
        for (const Subset g : a.lamOpen)
            if (p.subset_of(g) && !a.shrink_exists(p, g)) return false;
    return true;
}

// --- the six sg-refined normality statements ---

bool sgn_stmt2(const Analysis& a) {
    for (const Subset p : a.lamClosed)
        for (const Subset g : a.lamOpen)
            if (p.subset_of(g) && !sg_shrink_exists(a, p, g)) return false;
    return true;
}

bool sgn_stmt3(const Analysis& a) {
    for (const Subset p : a.lamClosed)
        for (const Subset g : a.sgOpen)
            if (p.subset_of(g) && !sg_shrink_exists(a, p, a.sinterior(g))) return false;
    return true;
}

bool sgn_stmt4(const Analysis& a) {
    for (const Subset p : a.sgClosed)
        for (const Subset g : a.lamOpen)
            if (p.subset_of(g) && !a.shrink_exists(a.sclosure(p), g)) return false;
    return true;
}

bool sgn_stmt5(const Analysis& a) {
    for (const Subset p : a.lamClosed)
        for (const Subset g : a.sgOpen)
            if (p.subset_of(g) && !a.shrink_exists(p, a.sinterior(g))) return false;
    return true;
}

bool sgn_stmt6(const Analysis& a) {
    for (const Subset p : a.sgClosed)
        for (const Subset g : a.lamOpen)
            if (p.subset_of(g) && !sg_shrink_exists(a, a.sclosure(p), g)) return false;
    return true;
}

// --- chains used by the completely-normal consequences ---

bool chain_pair(const Analysis& a, Subset A, Subset B) {
    for (const Subset u : a.sgOpen) {
        if (!A.subset_of(u)) continue;
        for (const Subset v : a.sgOpen) {
            if (!B.subset_of(v)) continue;
            if (!a.shrink_exists(a.sclosure(u), a.full.minus(a.sclosure(v)))) continue;
            if (a.shrink_exists(a.sclosure(v), a.full.minus(a.sclosure(u)))) return true;
        }
    }
    return false;
}

bool weakly_sep_pair(const Analysis& a, Subset g, Subset h) {
    return !g.intersects(a.sclosure(h)) && !h.intersects(a.sclosure(g));
}

bool weak_to_strong(const Analysis& a) {
    for (std::uint64_t g = 1; g <= a.full.bits; ++g)
        for (std::uint64_t h = 1; h <= g; ++h) {
            const Subset G{g}, H{h};
            if (!weakly_sep_pair(a, G, H)) continue;
            if (!strongly_separated(a, G, H)) return false;
        }
    return true;
}

// Evaluation context: everything verify_theorems derives once per space.
struct Ctx {
    Analysis a;
    AxiomReport ax;
    bool closureUnionClosed = false;
    bool allClosedGdelta = false;
    std::optional<std::vector<std::uint8_t>> subNormal;  // by carrier bits
    std::map<std::uint64_t, Analysis> subAnalyses;

    explicit Ctx(const Space& s) : a(Analysis::of(s)), ax(classify(a)) {
        closureUnionClosed = true;
        for (std::uint64_t e = 0; e <= a.full.bits && closureUnionClosed; ++e)
            for (std::uint64_t f = 0; f <= e; ++f)
                if (!a.closed(Subset{a.scl[e] | a.scl[f]})) {
                    closureUnionClosed = false;
                    break;
                }
        allClosedGdelta = true;
        for (const Subset c : a.lamClosed)
            if (!a.gdeltaMember(c)) {
                allClosedGdelta = false;
                break;
            }
    }

    const Analysis& sub(Subset carrier) {
        auto it = subAnalyses.find(carrier.bits);
        if (it == subAnalyses.end())
            it = subAnalyses.emplace(carrier.bits, Analysis::of(a.space.subspace(carrier)))
                     .first;
        return it->second;
    }

    bool all_subspaces_normal() {
        if (!subNormal) {
            std::vector<std::uint8_t> flags(a.full.bits + 1, 0);
            for (std::uint64_t c = 1; c <= a.full.bits; ++c)
                flags[c] = classify(sub(Subset{c})).normalStrong ? 1 : 0;
            subNormal = std::move(flags);
        }
        for (std::uint64_t c = 1; c <= a.full.bits; ++c)
            if (!(*subNormal)[c]) return false;
        return true;
    }
};

Witness space_witness(const Ctx& c, const std::string& id,
                      std::vector<std::pair<std::string, Subset>> sets,
                      std::string note) {
    return Witness{"theorem:" + id, c.a.space, std::move(sets), std::move(note)};
}

TheoremReport finish(const Ctx& c, const std::string& id, bool hyp, bool concl,
                     std::vector<std::pair<std::string, Subset>> sets = {},
                     std::string note = {}) {
    TheoremReport r;
    r.id = id;
    r.hypothesesHeld = hyp;
    r.conclusionHeld = concl;
    r.status = !hyp ? TheoremStatus::vacuous
                    : (concl ? TheoremStatus::verified : TheoremStatus::failed);
    if (r.status == TheoremStatus::failed)
        r.witness = space_witness(c, id, std::move(sets), std::move(note));
    return r;
}

std::string bools_note(const char* label, const std::vector<bool>& v) {
    std::string out = label;
    out += " =";
    for (const bool b : v) out += b ? " 1" : " 0";
    return out;
}

}  // namespace

std::vector<TheoremReport> verify_theorems(const Space& s) {
    Ctx c(s);
    const Analysis& a = c.a;
    std::vector<TheoremReport> out;
    out.reserve(40);

    // R1 forces R0.
    out.push_back(finish(c, "r1-implies-r0", c.ax.R1, !c.ax.R1 || c.ax.R0));

    // Regularity forces R1.
    out.push_back(
        finish(c, "regular-implies-r1", c.ax.regularStrong, !c.ax.regularStrong || c.ax.R1));

    // T2 holds exactly when R1 and T1 do.
    {
        const bool both = c.ax.R1 && c.ax.T1;
        out.push_back(finish(c, "t2-iff-r1-and-t1", true, c.ax.T2 == both, {},
                             bools_note("T2,R1,T1", {c.ax.T2, c.ax.R1, c.ax.T1})));
    }

    // The eight regularity statements must agree.
    {
        std::vector<bool> v{c.ax.regularStrong, reg_stmt2(a), reg_stmt3(a), reg_stmt4(a),
                            reg_stmt5(a),       reg_stmt6(a), reg_stmt7(a), c.ax.regularWeak};
        const bool agree = std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; });
        out.push_back(finish(c, "regularity-equivalence", true, agree, {},
                             bools_note("statements", v)));
    }

    // The four normality statements must agree.
    {
        std::vector<bool> v{c.ax.normalStrong, norm_stmt2(a), norm_stmt3(a), c.ax.normalWeak};
        const bool agree = std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; });
        out.push_back(
            finish(c, "normality-equivalence", true, agree, {}, bools_note("statements", v)));
    }

    // The six sg-refined normality statements must agree.
    {
        std::vector<bool> v{c.ax.normalStrong, sgn_stmt2(a), sgn_stmt3(a),
                            sgn_stmt4(a),      sgn_stmt5(a), sgn_stmt6(a)};
        const bool agree = std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; });
        out.push_back(finish(c, "normality-sg-equivalence", true, agree, {},
                             bools_note("statements", v)));
    }

    // Closed subsets of a compact space are compact.
    {
        const bool hyp = is_compact(a);
        bool concl = true;
        Subset bad;
        if (hyp)
            for (const Subset d : a.lamClosed) {
                if (d.empty()) continue;
                if (!is_compact(c.sub(d))) {
                    concl = false;
                    bad = d;
                    break;
                }
            }
        out.push_back(finish(c, "closed-subset-compact", hyp, concl, {{"D", bad}}));
    }

    // sg-closed subsets of a compact space: the trace of any open cover of D
    // reaches the closure of D, and a finite subfamily suffices.
    {
        const bool hyp = is_compact(a);
        bool concl = true;
        Subset bad;
        if (hyp)
            for (const Subset d : a.sgClosed) {
                if (d.empty()) continue;
                const Subset cl = a.sclosure(d);
                for (const Subset v : a.lamOpen) {
                    if (!d.subset_of(v)) continue;
                    std::vector<Subset> inside;
                    for (const Subset o : a.lamOpen)
                        if (o.subset_of(v)) inside.push_back(o);
                    const Cover cover{SetFamily(inside), cl};
                    if (!cl.subset_of(v) || (!cl.empty() && finite_subcover(cover).empty())) {
                        concl = false;
                        bad = d;
                        break;
                    }
                }
                if (!concl) break;
            }
        out.push_back(finish(c, "sg-closed-subset-compact", hyp, concl, {{"D", bad}}));
    }

    // When unions of two closures stay closed, closure is additive.
    out.push_back(finish(c, "closure-union-additivity", c.closureUnionClosed,
                         !c.closureUnionClosed || a.closureAdditive));

    // In a regular space with closed closure-unions, every (compact) subset
    // is sg-closed.
    {
        const bool hyp = c.ax.regularStrong && c.closureUnionClosed;
        bool concl = true;
        Subset bad;
        if (hyp)
            for (std::uint64_t d = 0; d <= a.full.bits; ++d)
                if (!a.sgIsClosed(Subset{d})) {
                    concl = false;
                    bad = Subset{d};
                    break;
                }
        out.push_back(finish(c, "compact-subsets-sg-closed-in-regular", hyp, concl,
                             {{"D", bad}}));
    }

    // Paracompact + Hausdorff + condition (A) forces normality.
    {
        const bool hyp = c.ax.T2 && a.conditionA && is_paracompact(a);
        out.push_back(
            finish(c, "paracompact-hausdorff-normal", hyp, !hyp || c.ax.normalStrong));
    }

    // Function separation yields separation by closed neighbourhoods.
    {
        bool any = false, concl = true;
        Subset badA, badB;
        for (std::uint64_t g = 1; g <= a.full.bits && concl; ++g)
            for (std::uint64_t h = 1; h <= a.full.bits; ++h) {
                const Subset A{g}, B{h};
                if (A.intersects(B)) continue;
                if (!separated_by_function(a, A, B)) continue;
                any = true;
                if (!separated_by_closed_neighborhoods(a, A, B)) {
                    concl = false;
                    badA = A;
                    badB = B;
                    break;
                }
            }
        out.push_back(finish(c, "function-separated-implies-closed-nbhd-separated", any,
                             concl, {{"A", badA}, {"B", badB}}));
    }

    // If every disjoint closed pair is function-separated, the space is normal.
    {
        bool hyp = true;
        for (std::size_t i = 0; i < a.lamClosed.size() && hyp; ++i)
            for (std::size_t j = i + 1; j < a.lamClosed.size(); ++j) {
                const Subset A = a.lamClosed[i], B = a.lamClosed[j];
                if (A.empty() || B.empty() || A.intersects(B)) continue;
                if (!separated_by_function(a, A, B)) {
                    hyp = false;
                    break;
                }
            }
        out.push_back(finish(c, "function-separated-pairs-imply-normal", hyp,
                             !hyp || c.ax.normalStrong));
    }

    // Weak normality plus condition (A) function-separates disjoint closed pairs.
    {
        const bool hyp = c.ax.normalWeak && a.conditionA;
        bool concl = true;
        Subset badA, badB;
        if (hyp)
            for (std::size_t i = 0; i < a.lamClosed.size() && concl; ++i)
                for (std::size_t j = i + 1; j < a.lamClosed.size(); ++j) {
                    const Subset A = a.lamClosed[i], B = a.lamClosed[j];
                    if (A.empty() || B.empty() || A.intersects(B)) continue;
                    if (!separated_by_function(a, A, B)) {
                        concl = false;
                        badA = A;
                        badB = B;
                        break;
                    }
                }
        out.push_back(finish(c, "normal-condition-a-implies-function-separated", hyp, concl,
                             {{"A", badA}, {"B", badB}}));
    }

    out.push_back(finish(c, "completely-hausdorff-implies-urysohn", c.ax.completelyHausdorff,
                         !c.ax.completelyHausdorff || c.ax.urysohn));
    out.push_back(
        finish(c, "urysohn-implies-hausdorff", c.ax.urysohn, !c.ax.urysohn || c.ax.T2));
    {
        const bool hyp = c.ax.urysohn && c.ax.normalStrong && a.conditionA;
        out.push_back(finish(c, "urysohn-normal-condition-a-implies-completely-hausdorff",
                             hyp, !hyp || c.ax.completelyHausdorff));
    }

    // Completely Hausdorff: around distinct points, an open E and an sg-open F
    // with the closure of F inside the complement of the closure of E.
    {
        const bool hyp = c.ax.completelyHausdorff;
        bool concl = true;
        if (hyp)
            for (int p = 0; p < a.n && concl; ++p)
                for (int q = 0; q < a.n; ++q) {
                    if (p == q) continue;
                    bool found = false;
                    for (const Subset e : a.lamOpen) {
                        if (!e.test(p)) continue;
                        const Subset bound = a.full.minus(a.sclosure(e));
                        for (const Subset f : a.sgOpen)
                            if (f.test(q) && a.sclosure(f).subset_of(bound)) {
                                found = true;
                                break;
                            }
                        if (found) break;
                    }
                    if (!found) {
                        concl = false;
                        break;
                    }
                }
        out.push_back(finish(c, "completely-hausdorff-point-chain", hyp, concl));
    }

    // Completely Hausdorff: a nonempty set and an outside point split by an
    // sg-open set meeting the set and a disjoint open set around the point.
    {
        const bool hyp = c.ax.completelyHausdorff;
        bool concl = true;
        if (hyp)
            for (std::uint64_t d = 1; d <= a.full.bits && concl; ++d)
                for (int q = 0; q < a.n; ++q) {
                    const Subset D{d};
                    if (D.test(q)) continue;
                    bool found = false;
                    for (const Subset e : a.sgOpen) {
                        if (!D.intersects(e)) continue;
                        for (const Subset f : a.lamOpen)
                            if (f.test(q) && !e.intersects(f)) {
                                found = true;
                                break;
                            }
                        if (found) break;
                    }
                    if (!found) {
                        concl = false;
                        break;
                    }
                }
        out.push_back(finish(c, "completely-hausdorff-set-point-separation", hyp, concl));
    }

    {
        const bool hyp = c.ax.regularStrong && c.ax.T1;
        out.push_back(finish(c, "regular-t1-implies-urysohn", hyp, !hyp || c.ax.urysohn));
    }

    {
        const bool hyp = c.ax.T4 && a.conditionA;
        out.push_back(
            finish(c, "t4-condition-a-implies-tychonoff", hyp, !hyp || c.ax.tychonoff));
    }
    out.push_back(finish(c, "tychonoff-implies-completely-regular", c.ax.tychonoff,
                         !c.ax.tychonoff || c.ax.completelyRegular));
    out.push_back(finish(c, "completely-regular-implies-regular", c.ax.completelyRegular,
                         !c.ax.completelyRegular || c.ax.regularStrong));
    out.push_back(
        finish(c, "tychonoff-implies-t3", c.ax.tychonoff, !c.ax.tychonoff || c.ax.T3));
    out.push_back(finish(c, "tychonoff-implies-completely-hausdorff", c.ax.tychonoff,
                         !c.ax.tychonoff || c.ax.completelyHausdorff));
    {
        const bool hyp = c.ax.regularStrong && c.ax.normalStrong && a.conditionA;
        out.push_back(finish(c, "regular-normal-condition-a-implies-completely-regular", hyp,
                             !hyp || c.ax.completelyRegular));
    }

    // Completely regular: sg-open chains around closed singletons.
    const auto stmt46_1 = [&]() {
        for (int y = 0; y < a.n; ++y) {
            const Subset point = Subset::singleton(y);
            if (!a.closed(point)) continue;
            for (const Subset g : a.sgOpen) {
                if (!g.test(y)) continue;
                if (!sg_shrink_exists(a, point, a.sinterior(g))) return false;
            }
        }
        return true;
    };
    const bool s46_1 = stmt46_1();
    out.push_back(finish(c, "completely-regular-singleton-chain", c.ax.completelyRegular,
                         !c.ax.completelyRegular || s46_1));

    {
        bool concl = true;
        if (s46_1) {
            for (int y = 0; y < a.n && concl; ++y) {
                const Subset point = Subset::singleton(y);
                if (!a.closed(point)) continue;
                for (const Subset g : a.lamOpen) {
                    if (!g.test(y)) continue;
                    bool found = false;
                    for (const Subset e : a.sgOpen)
                        if (a.sinterior(e).test(y) && a.sclosure(e).subset_of(g)) {
                            found = true;
                            break;
                        }
                    if (!found) {
                        concl = false;
                        break;
                    }
                }
            }
        }
        out.push_back(finish(c, "singleton-chain-interior-refinement", s46_1, concl));
    }

    {
        bool concl = true;
        if (c.ax.normalStrong)
            for (int y = 0; y < a.n && concl; ++y) {
                const Subset point = Subset::singleton(y);
                if (!a.sgIsClosed(point)) continue;
                for (const Subset g : a.lamOpen)
                    if (g.test(y) && !sg_shrink_exists(a, a.sclosure(point), g)) {
                        concl = false;
                        break;
                    }
            }
        out.push_back(finish(c, "normal-sg-singleton-chain", c.ax.normalStrong, concl));
    }
    {
        bool concl = true;
        if (c.ax.normalStrong)
            for (int y = 0; y < a.n && concl; ++y) {
                const Subset point = Subset::singleton(y);
                if (!a.sgIsClosed(point)) continue;
                for (const Subset g : a.lamOpen)
                    if (g.test(y) && !a.shrink_exists(a.sclosure(point), g)) {
                        concl = false;
                        break;
                    }
            }
        out.push_back(finish(c, "normal-sg-singleton-chain-open", c.ax.normalStrong, concl));
    }

    // Every subspace of a completely normal space is normal.
    {
        bool concl = true;
        Subset bad;
        if (c.ax.completelyNormal)
            for (std::uint64_t carrier = 1; carrier <= a.full.bits; ++carrier)
                if (!classify(c.sub(Subset{carrier})).normalStrong) {
                    concl = false;
                    bad = Subset{carrier};
                    break;
                }
        out.push_back(finish(c, "subspaces-of-completely-normal-are-normal",
                             c.ax.completelyNormal, concl, {{"X", bad}}));
    }

    // Normal subspaces + condition (A): weakly separated pairs separate strongly.
    {
        const bool hyp = a.conditionA && c.all_subspaces_normal();
        out.push_back(finish(c, "normal-subspaces-condition-a-weak-to-strong", hyp,
                             !hyp || weak_to_strong(a)));
    }

    // All subspaces closed and normal + condition (A): completely normal.
    {
        bool carriersClosed = true;
        for (std::uint64_t carrier = 1; carrier <= a.full.bits && carriersClosed; ++carrier)
            carriersClosed = a.closed(Subset{carrier});
        const bool hyp = a.conditionA && carriersClosed && c.all_subspaces_normal();
        out.push_back(finish(c, "closed-normal-subspaces-imply-completely-normal", hyp,
                             !hyp || c.ax.completelyNormal));
    }

    // Perfectly normal + condition (A) + closed sets all g-delta.
    {
        const bool hyp = c.ax.perfectlyNormal && a.conditionA && c.allClosedGdelta;
        out.push_back(finish(c, "perfectly-normal-gdelta-weak-to-strong", hyp,
                             !hyp || weak_to_strong(a)));
    }

    // Completely normal: double chain around weakly separated pairs.
    const bool s54_ii = [&]() {
        for (std::uint64_t g = 1; g <= a.full.bits; ++g)
            for (std::uint64_t h = 1; h <= g; ++h) {
                const Subset G{g}, H{h};
                if (!weakly_sep_pair(a, G, H)) continue;
                if (!chain_pair(a, G, H)) return false;
            }
        return true;
    }();
    out.push_back(finish(c, "completely-normal-separation-chain", c.ax.completelyNormal,
                         !c.ax.completelyNormal || s54_ii));

    // The chain statement passes to pairs guarded by closed supersets. Such a
    // guard (closed P around A missing B, closed Q around B missing A) exists
    // exactly when the minimal closed supersets qualify.
    {
        bool concl = true;
        if (s54_ii)
            for (std::uint64_t g = 1; g <= a.full.bits && concl; ++g)
                for (std::uint64_t h = 1; h <= g; ++h) {
                    const Subset G{g}, H{h};
                    if (H.intersects(a.sclosure(G)) || G.intersects(a.sclosure(H))) continue;
                    if (!chain_pair(a, G, H)) {
                        concl = false;
                        break;
                    }
                }
        out.push_back(finish(c, "separated-pairs-chain", s54_ii, concl));
    }

    // ... and to an sg-open shrink between closed sets and their open bounds.
    {
        bool concl = true;
        if (s54_ii)
            for (const Subset p : a.lamClosed) {
                for (const Subset g : a.lamOpen)
                    if (p.subset_of(g) && !sg_shrink_exists(a, p, g)) {
                        concl = false;
                        break;
                    }
                if (!concl) break;
            }
        out.push_back(finish(c, "completely-normal-sg-shrink", s54_ii, concl));
    }

    // Condition (A) makes closure additive (locally finite collections are
    // free on a finite space).
    out.push_back(finish(c, "condition-a-closure-additive", a.conditionA,
                         !a.conditionA || a.closureAdditive));

    return out;
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = [] {
        Space one = Space::make({"a"}, {{}});
        std::vector<std::string> out;
        for (const auto& r : verify_theorems(one)) out.push_back(r.id);
        return out;
    }();
    return ids;
}

// ---------------------------------------------------------------------------
// Counterexample mining

namespace {

constexpr const char* kUnionProperty = "union-of-slambda-closed-not-closed";
constexpr const char* kIntersectionProperty = "intersection-of-slambda-open-not-open";
constexpr const char* kSgProperty = "sglambda-closed-not-slambda-closed";

std::optional<Witness> match_property(const Space& s, const std::string& property) {
    const Analysis a = Analysis::of(s);
    if (property == kUnionProperty) {
        for (std::size_t i = 0; i < a.lamClosed.size(); ++i)
            for (std::size_t j = i; j < a.lamClosed.size(); ++j) {
                const Subset d1 = a.lamClosed[i], d2 = a.lamClosed[j];
                if (a.closed(d1 | d2)) continue;
                return Witness{property, s, {{"D1", d1}, {"D2", d2}},
                               "union of two slambda-closed sets is not slambda-closed"};
            }
        return std::nullopt;
    }
    if (property == kIntersectionProperty) {
        for (std::size_t i = 0; i < a.lamOpen.size(); ++i)
            for (std::size_t j = i; j < a.lamOpen.size(); ++j) {
                const Subset u1 = a.lamOpen[i], u2 = a.lamOpen[j];
                if (a.open(u1 & u2)) continue;
                return Witness{property, s, {{"U1", u1}, {"U2", u2}},
                               "meet of two slambda-open sets is not slambda-open"};
            }
        return std::nullopt;
    }
    if (property == kSgProperty) {
        for (const Subset d : a.sgClosed)
            if (!a.closed(d))
                return Witness{property, s, {{"D", d}},
                               "sglambda-closed set that is not slambda-closed"};
        return std::nullopt;
    }
    throw UnknownPropertyError(property);
}

}  // namespace

const std::vector<std::string>& mine_properties() {
    static const std::vector<std::string> props{kUnionProperty, kIntersectionProperty,
                                                kSgProperty};
    return props;
}

std::vector<Witness> mine_counterexamples(int n, const std::string& property, int limit) {
    if (n < 1 || n > 4) throw TooLargeError("mining scans 1 to 4 points exhaustively");
    match_property(Space::make({"a"}, {{}}), property);  // reject unknown ids early

    std::vector<Space> reps;
    enumerate_spaces(n, true, [&](const Space& s) { reps.push_back(s); });
    std::sort(reps.begin(), reps.end(), [](const Space& x, const Space& y) {
        if (x.gamma().size() != y.gamma().size()) return x.gamma().size() < y.gamma().size();
        return x.gamma().members() < y.gamma().members();
    });

    std::vector<Witness> out;
    for (const Space& s : reps) {
        if (limit >= 0 && static_cast<int>(out.size()) >= limit) break;
        if (auto w = match_property(s, property)) out.push_back(std::move(*w));
    }
    return out;
}

bool replay_witness(const Witness& w) {
    const auto named = [&](const char* role) -> std::optional<Subset> {
        for (const auto& [name, set] : w.sets)
            if (name == role) return set;
        return std::nullopt;
    };

    if (w.property.rfind("theorem:", 0) == 0) {
        const std::string id = w.property.substr(8);
        for (const auto& r : verify_theorems(w.space))
            if (r.id == id) return r.status == TheoremStatus::failed;
        return false;
    }

    const Analysis a = Analysis::of(w.space);
    if (w.property == kUnionProperty) {
        const auto d1 = named("D1"), d2 = named("D2");
        return d1 && d2 && a.closed(*d1) && a.closed(*d2) && !a.closed(*d1 | *d2);
    }
    if (w.property == kIntersectionProperty) {
        const auto u1 = named("U1"), u2 = named("U2");
        return u1 && u2 && a.open(*u1) && a.open(*u2) && !a.open(*u1 & *u2);
    }
    if (w.property == kSgProperty) {
        const auto d = named("D");
        return d && a.sgIsClosed(*d) && !a.closed(*d);
    }
    throw UnknownPropertyError(w.property);
}

}  // namespace gt
