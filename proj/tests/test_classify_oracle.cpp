// Re-derives every classification predicate straight from the definitions,
// using only the core family operations, and compares against classify().

#include <doctest.h>

#include <functional>
#include <vector>

#include "fixtures.hpp"
#include "gt/axioms.hpp"
#include "gt/space.hpp"

using namespace gt;

namespace {

struct Oracle {
    const Space& s;
    const SetFamily& open;
    const SetFamily& closed;
    Subset full;

    explicit Oracle(const Space& sp)
        : s(sp), open(sp.slambda_open()), closed(sp.slambda_closed()), full(sp.universe()) {}

    Subset scl(Subset d) const { return closure_in_family(open, d, s.ground()); }

    bool weakly_sep(Subset g, Subset h) const {
        return !g.intersects(scl(h)) && !h.intersects(scl(g));
    }

    bool strongly_sep(Subset g, Subset h) const {
        for (const Subset u : open)
            for (const Subset v : open)
                if (g.subset_of(u) && h.subset_of(v) && !u.intersects(v)) return true;
        return false;
    }

    bool closure_sep(Subset g, Subset h) const {
        for (const Subset u : open)
            for (const Subset v : open)
                if (g.subset_of(u) && h.subset_of(v) && !scl(u).intersects(scl(v)))
                    return true;
        return false;
    }

    // Partitions of Y into open blocks with a designated 0-block covering A
    // and a distinct 1-block covering B; exact = the blocks must equal A and
    // B themselves (exact fibers instead of containment).
    bool partition_separates(Subset A, Subset B, bool exact) const {
        const int n = s.points();
        std::vector<int> block(static_cast<std::size_t>(n), 0);
        const std::function<bool(int, int)> rec = [&](int i, int used) {
            if (i == n) {
                std::vector<Subset> blocks(static_cast<std::size_t>(used));
                for (int p = 0; p < n; ++p) {
                    auto& b = blocks[static_cast<std::size_t>(block[static_cast<std::size_t>(p)])];
                    b = b | Subset::singleton(p);
                }
                for (const Subset b : blocks)
                    if (!open.contains(b)) return false;
                for (std::size_t x = 0; x < blocks.size(); ++x)
                    for (std::size_t y = 0; y < blocks.size(); ++y) {
                        if (x == y) continue;
                        const bool zeroOk = exact ? blocks[x] == A : A.subset_of(blocks[x]);
                        const bool oneOk = exact ? blocks[y] == B : B.subset_of(blocks[y]);
                        if (zeroOk && oneOk) return true;
                    }
                return false;
            }
            for (int b = 0; b <= used && b < n; ++b) {
                block[static_cast<std::size_t>(i)] = b;
                if (rec(i + 1, b == used ? used + 1 : used)) return true;
            }
            return false;
        };
        return rec(0, 0);
    }

    bool t0() const {
        for (int p = 0; p < s.points(); ++p)
            for (int q = p + 1; q < s.points(); ++q) {
                bool split = false;
                for (const Subset u : open)
                    if (u.test(p) != u.test(q)) split = true;
                if (!split) return false;
            }
        return true;
    }

    bool t1() const {
        for (int p = 0; p < s.points(); ++p)
            if (!closed.contains(Subset::singleton(p))) return false;
        return true;
    }

    bool t2() const {
        for (int p = 0; p < s.points(); ++p)
            for (int q = p + 1; q < s.points(); ++q)
                if (!strongly_sep(Subset::singleton(p), Subset::singleton(q))) return false;
        return true;
    }

    bool urysohn() const {
        for (int p = 0; p < s.points(); ++p)
            for (int q = p + 1; q < s.points(); ++q)
                if (!closure_sep(Subset::singleton(p), Subset::singleton(q))) return false;
        return true;
    }

    bool completely_hausdorff() const {
        for (int p = 0; p < s.points(); ++p)
            for (int q = p + 1; q < s.points(); ++q)
                if (!partition_separates(Subset::singleton(p), Subset::singleton(q), false))
                    return false;
        return true;
    }

    bool r0() const {
        for (const Subset g : open)
            for (int y = 0; y < s.points(); ++y)
                if (g.test(y) && !scl(Subset::singleton(y)).subset_of(g)) return false;
        return true;
    }

    bool r1() const {
        for (int p = 0; p < s.points(); ++p)
            for (int q = 0; q < s.points(); ++q) {
                if (p == q || scl(Subset::singleton(q)).test(p)) continue;
                if (!strongly_sep(Subset::singleton(p), Subset::singleton(q))) return false;
            }
        return true;
    }

    bool regular(bool strong) const {
        for (const Subset A : closed)
            for (int p = 0; p < s.points(); ++p) {
                if (A.test(p)) continue;
                const Subset point = Subset::singleton(p);
                if (strong ? !closure_sep(A, point) : !strongly_sep(A, point)) return false;
            }
        return true;
    }

    bool completely_regular() const {
        for (const Subset F : closed) {
            if (F.empty()) continue;
            for (int p = 0; p < s.points(); ++p)
                if (!F.test(p) && !partition_separates(Subset::singleton(p), F, false))
                    return false;
        }
        return true;
    }

    bool t3() const {
        if (!t1()) return false;
        for (const Subset P : closed) {
            if (P.empty()) continue;
            for (int q = 0; q < s.points(); ++q)
                if (!P.test(q) && !strongly_sep(Subset::singleton(q), P)) return false;
        }
        return true;
    }

    bool normal(bool strong) const {
        for (const Subset A : closed)
            for (const Subset B : closed) {
                if (A.empty() || B.empty() || A.intersects(B)) continue;
                if (strong ? !closure_sep(A, B) : !strongly_sep(A, B)) return false;
            }
        return true;
    }

    bool completely_normal() const {
        for (std::uint64_t g = 1; g <= full.bits; ++g)
            for (std::uint64_t h = 1; h <= full.bits; ++h)
                if (weakly_sep(Subset{g}, Subset{h}) && !closure_sep(Subset{g}, Subset{h}))
                    return false;
        return true;
    }

    bool t5() const {
        if (!t1()) return false;
        for (std::uint64_t g = 1; g <= full.bits; ++g)
            for (std::uint64_t h = 1; h <= full.bits; ++h)
                if (weakly_sep(Subset{g}, Subset{h}) && !strongly_sep(Subset{g}, Subset{h}))
                    return false;
        return true;
    }

    bool perfectly_normal() const {
        for (const Subset M : closed)
            for (const Subset N : closed) {
                if (M.empty() || N.empty() || M.intersects(N)) continue;
                if (!partition_separates(M, N, true)) return false;
            }
        return true;
    }

    bool condition_a() const {
        for (const Subset u : open)
            for (const Subset v : open)
                if (!open.contains(u & v)) return false;
        return true;
    }

    bool closure_additive() const {
        for (std::uint64_t e = 0; e <= full.bits; ++e)
            for (std::uint64_t f = 0; f <= full.bits; ++f)
                if (scl(Subset{e} | Subset{f}) != (scl(Subset{e}) | scl(Subset{f})))
                    return false;
        return true;
    }
};

void compare(const Space& s) {
    const Oracle o(s);
    const AxiomReport r = classify(s);
    CHECK(r.T0 == o.t0());
    CHECK(r.T1 == o.t1());
    CHECK(r.T2 == o.t2());
    CHECK(r.urysohn == o.urysohn());
    CHECK(r.completelyHausdorff == o.completely_hausdorff());
    CHECK(r.R0 == o.r0());
    CHECK(r.R1 == o.r1());
    CHECK(r.regularStrong == o.regular(true));
    CHECK(r.regularWeak == o.regular(false));
    CHECK(r.completelyRegular == o.completely_regular());
    CHECK(r.T3 == o.t3());
    CHECK(r.tychonoff == (o.completely_regular() && o.t1()));
    CHECK(r.normalStrong == o.normal(true));
    CHECK(r.normalWeak == o.normal(false));
    CHECK(r.completelyNormal == o.completely_normal());
    CHECK(r.T4 == (o.t1() && o.normal(false)));
    CHECK(r.T5 == o.t5());
    CHECK(r.perfectlyNormal == o.perfectly_normal());
    CHECK(r.conditionA == o.condition_a());
    CHECK(r.closureAdditive == o.closure_additive());
}

}  // namespace

TEST_CASE("classify matches the definition-level oracle on all small spaces") {
    for (const Space& s : fixtures::spaces_up_to(3)) compare(s);
}

TEST_CASE("classify matches the definition-level oracle on four-point orbits") {
    enumerate_spaces(4, true, [&](const Space& s) { compare(s); });
}
