#include <doctest.h>

#include <algorithm>
#include <optional>

#include "fixtures.hpp"
#include "gt/analysis.hpp"
#include "gt/axioms.hpp"
#include "gt/errors.hpp"
#include "gt/realfn.hpp"

using namespace gt;
using fixtures::set_of;

namespace {

const Dyadic kZero = Dyadic::zero();
const Dyadic kOne = Dyadic::one();
const Dyadic kHalf = Dyadic::fraction(1, 1);

// Oracle: enumerate every partition of the points into lambda-open blocks and
// look for one whose blocks isolate A at value 0 and B at value 1.
bool brute_partition_separates(const Space& s, Subset A, Subset B) {
    const int n = s.points();
    std::vector<int> block(static_cast<std::size_t>(n), -1);

    const auto blocksValid = [&](int used) {
        std::vector<Subset> blocks(static_cast<std::size_t>(used));
        for (int i = 0; i < n; ++i)
            blocks[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])] =
                blocks[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])] |
                Subset::singleton(i);
        for (const Subset b : blocks)
            if (!s.slambda_open().contains(b)) return false;
        // One block must swallow A, a different one B.
        int ablock = -1, bblock = -1;
        for (int i = 0; i < n; ++i) {
            if (A.test(i)) {
                if (ablock == -1) ablock = block[static_cast<std::size_t>(i)];
                if (ablock != block[static_cast<std::size_t>(i)]) return false;
            }
            if (B.test(i)) {
                if (bblock == -1) bblock = block[static_cast<std::size_t>(i)];
                if (bblock != block[static_cast<std::size_t>(i)]) return false;
            }
        }
        return ablock != bblock;
    };

    const std::function<bool(int, int)> rec = [&](int i, int used) {
        if (i == n) return blocksValid(used);
        for (int b = 0; b <= used && b < n; ++b) {
            block[static_cast<std::size_t>(i)] = b;
            if (rec(i + 1, b == used ? used + 1 : used)) return true;
        }
        block[static_cast<std::size_t>(i)] = -1;
        return false;
    };
    return rec(0, 0);
}

// Preimage of an open interval (lo, hi); either bound may be absent.
Subset interval_preimage(const DyadicFn& f, std::optional<Dyadic> lo,
                         std::optional<Dyadic> hi) {
    Subset out;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        const Dyadic v = f.values[i];
        if (lo && !(*lo < v)) continue;
        if (hi && !(v < *hi)) continue;
        out = out | Subset::singleton(static_cast<int>(i));
    }
    return out;
}

}  // namespace

TEST_CASE("dyadic arithmetic is exact and normalized") {
    CHECK(Dyadic::fraction(2, 2) == kHalf);
    CHECK(Dyadic::fraction(4, 2) == kOne);
    CHECK(Dyadic::fraction(0, 5) == kZero);
    CHECK(kHalf.plus(Dyadic::fraction(1, 2)) == Dyadic::fraction(3, 2));
    CHECK(Dyadic::fraction(1, 3).scaled_down(2) == Dyadic::fraction(1, 5));
    CHECK(kZero < kHalf);
    CHECK(kHalf < kOne);
    CHECK(Dyadic::fraction(3, 3) < kHalf);
    CHECK(kZero.str() == "0/2^0");
    CHECK(kOne.str() == "1/2^0");
    CHECK(Dyadic::fraction(3, 2).str() == "3/2^2");
    CHECK_THROWS_AS(Dyadic::fraction(5, 2), std::invalid_argument);
}

TEST_CASE("continuity is the fiber criterion") {
    const Space e2 = fixtures::e2();
    CHECK(is_continuous(e2, DyadicFn{{kZero, kZero, kOne}}));
    CHECK(!is_continuous(e2, DyadicFn{{kZero, kOne, kOne}}));
    CHECK(is_continuous(e2, DyadicFn{{kHalf, kHalf, kHalf}}));
    const Space e1 = fixtures::e1();
    CHECK(is_continuous(e1, DyadicFn{{kHalf, kHalf, kHalf, kHalf}}));
}

TEST_CASE("fiber continuity matches interval preimages on small spaces") {
    // Sampled dyadic cut points: 0, 1/4, 1/2, 3/4, 1.
    const std::vector<Dyadic> cuts{kZero, Dyadic::fraction(1, 2), kHalf,
                                   Dyadic::fraction(3, 2), kOne};
    for (const Space& s : fixtures::spaces_up_to(2)) {
        const Analysis a = Analysis::of(s);
        // All functions with values in {0, 1/2, 1} over up to 2 points.
        const std::vector<Dyadic> range{kZero, kHalf, kOne};
        const int n = s.points();
        std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
        while (true) {
            DyadicFn f;
            for (int i = 0; i < n; ++i)
                f.values.push_back(range[pick[static_cast<std::size_t>(i)]]);
            bool allIntervalsOpen = true;
            for (const Dyadic& lo : cuts)
                for (const Dyadic& hi : cuts) {
                    if (!(lo < hi)) continue;
                    if (!a.open(interval_preimage(f, lo, hi))) allIntervalsOpen = false;
                }
            for (const Dyadic& hi : cuts)
                if (!a.open(interval_preimage(f, std::nullopt, hi)))
                    allIntervalsOpen = false;
            for (const Dyadic& lo : cuts)
                if (!a.open(interval_preimage(f, lo, std::nullopt)))
                    allIntervalsOpen = false;
            CHECK(is_continuous(a, f) == allIntervalsOpen);

            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == range.size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
    }
}

TEST_CASE("separation by a function on the fixtures") {
    const Space e0 = fixtures::e0();
    const auto f0 = separated_by_function(e0, set_of(e0, {"a"}), set_of(e0, {"b"}));
    REQUIRE(f0.has_value());
    CHECK(f0->values == std::vector<Dyadic>{kZero, kOne});

    const Space e2 = fixtures::e2();
    const auto f2 = separated_by_function(e2, set_of(e2, {"a"}), set_of(e2, {"c"}));
    REQUIRE(f2.has_value());
    CHECK(f2->values == std::vector<Dyadic>{kZero, kZero, kOne});

    CHECK(!separated_by_function(e2, set_of(e2, {"a"}), set_of(e2, {"b"})));

    CHECK_THROWS_AS((void)separated_by_function(e2, Subset{}, set_of(e2, {"b"})),
                    EmptyArgumentError);
    CHECK_THROWS_AS(
        (void)separated_by_function(e2, set_of(e2, {"a", "b"}), set_of(e2, {"b"})),
        NotDisjointError);
}

TEST_CASE("the three-block search matches the full partition search") {
    for (const Space& s : fixtures::spaces_up_to(3)) {
        const Analysis a = Analysis::of(s);
        for (std::uint64_t g = 1; g <= a.full.bits; ++g)
            for (std::uint64_t h = 1; h <= a.full.bits; ++h) {
                const Subset A{g}, B{h};
                if (A.intersects(B)) continue;
                const auto f = separated_by_function(a, A, B);
                CHECK(f.has_value() == brute_partition_separates(s, A, B));
                if (f) {
                    CHECK(is_continuous(a, *f));
                    for (int i = 0; i < s.points(); ++i) {
                        if (A.test(i)) CHECK(f->at(i) == kZero);
                        if (B.test(i)) CHECK(f->at(i) == kOne);
                    }
                }
            }
    }
}

TEST_CASE("dyadic separation family on the two-point fixtures") {
    const Space d2 = fixtures::discrete(2);
    const auto [fam1, f1] = urysohn_construct(d2, Subset{0b01}, Subset{0b10}, 1);
    REQUIRE(fam1.levels.size() == 1);
    CHECK(fam1.levels[0].first == kHalf);
    CHECK(fam1.levels[0].second == Subset{0b01});
    CHECK(f1.values == std::vector<Dyadic>{kZero, kOne});

    const Space e0 = fixtures::e0();
    const Analysis a0 = Analysis::of(e0);
    const auto [fam2, f2] =
        urysohn_construct(a0, set_of(e0, {"a"}), set_of(e0, {"b"}), 2);
    CHECK(fam2.levels.size() == 3);
    check_dyadic_family(a0, set_of(e0, {"a"}), set_of(e0, {"b"}), fam2);
    CHECK(f2.at(0) == kZero);
    CHECK(f2.at(1) == kOne);
}

TEST_CASE("dyadic separation construction rejects bad input") {
    const Space e0 = fixtures::e0();
    CHECK_THROWS_AS(urysohn_construct(e0, set_of(e0, {"a"}), set_of(e0, {"a"}), 1),
                    NotDisjointError);
    CHECK_THROWS_AS(urysohn_construct(e0, Subset{}, set_of(e0, {"a"}), 1),
                    EmptyArgumentError);
    CHECK_THROWS_AS(urysohn_construct(e0, set_of(e0, {"a"}), set_of(e0, {"b"}), 0),
                    std::invalid_argument);

    // E1 satisfies weak normality but not condition (A).
    const Space e1 = fixtures::e1();
    try {
        urysohn_construct(e1, set_of(e1, {"a"}), set_of(e1, {"c"}), 1);
        FAIL("expected HypothesisViolatedError");
    } catch (const HypothesisViolatedError& e) {
        CHECK(e.hypothesis == "conditionA");
    }

    // {a,c} is not lambda-closed in E1.
    try {
        urysohn_construct(e1, set_of(e1, {"a", "c"}), set_of(e1, {"d"}), 1);
        FAIL("expected HypothesisViolatedError");
    } catch (const HypothesisViolatedError& e) {
        CHECK(e.hypothesis == "A is slambda-closed");
    }
}

TEST_CASE("family invariants hold wherever the hypotheses do") {
    for (const Space& s : fixtures::spaces_up_to(3)) {
        const Analysis a = Analysis::of(s);
        if (!a.conditionA || !normal_weak(a)) continue;
        for (const Subset A : a.lamClosed) {
            if (A.empty()) continue;
            for (const Subset B : a.lamClosed) {
                if (B.empty() || A.intersects(B)) continue;
                const auto [fam, f] = urysohn_construct(a, A, B, 3);
                check_dyadic_family(a, A, B, fam);
                CHECK(fam.levels.size() == 7);
                for (int y = 0; y < s.points(); ++y) {
                    CHECK(f.at(y) <= kOne);
                    if (A.test(y)) CHECK(f.at(y) == kZero);
                    if (B.test(y)) CHECK(f.at(y) == kOne);
                    // Monotone against the level order: anything inside every
                    // level a point z lies in gets a value at most f(z).
                    for (int z = 0; z < s.points(); ++z) {
                        bool dominated = true;
                        for (const auto& [q, v] : fam.levels)
                            if (v.test(z) && !v.test(y)) dominated = false;
                        if (dominated && f.at(z) < f.at(y)) CHECK(false);
                    }
                }
            }
        }
    }
}

TEST_CASE("gdelta family") {
    const Space e0 = fixtures::e0();
    CHECK(g_delta_family(e0).size() == 4);

    const Space e2 = fixtures::e2();
    CHECK(g_delta_family(e2) == e2.slambda_open());

    for (const Space& s : fixtures::spaces_up_to(3)) {
        for (const Subset v : s.slambda_open()) CHECK(s.gdelta().contains(v));
        CHECK(s.gdelta().intersection_closed());
    }
}

TEST_CASE("exact zero-set construction") {
    const Space e0 = fixtures::e0();
    const DyadicFn f = zero_set_function(e0, set_of(e0, {"a"}), set_of(e0, {"b"}));
    CHECK(f.at(0) == kZero);
    CHECK(f.at(1) == kOne);

    try {
        zero_set_function(e0, Subset{}, set_of(e0, {"b"}));
        FAIL("expected HypothesisViolatedError");
    } catch (const HypothesisViolatedError& e) {
        CHECK(e.hypothesis == "M is nonempty");
    }

    const Space e1 = fixtures::e1();
    CHECK_THROWS_AS(zero_set_function(e1, set_of(e1, {"a"}), set_of(e1, {"c"})),
                    HypothesisViolatedError);

    // Exactness across every eligible pair on small spaces.
    for (const Space& s : fixtures::spaces_up_to(3)) {
        const Analysis a = Analysis::of(s);
        if (!a.conditionA || !normal_weak(a)) continue;
        for (const Subset M : a.lamClosed) {
            if (M.empty() || !a.gdeltaMember(M)) continue;
            for (const Subset N : a.lamClosed) {
                if (N.empty() || M.intersects(N)) continue;
                const DyadicFn g = zero_set_function(a, M, N);
                for (int y = 0; y < s.points(); ++y) {
                    CHECK(g.at(y).is_zero() == M.test(y));
                    CHECK(g.at(y) <= kOne);
                    if (N.test(y)) CHECK(g.at(y) == kOne);
                }
            }
        }
    }
}

TEST_CASE("perfect normality check") {
    const auto e0 = perfectly_normal_check(fixtures::e0());
    CHECK(e0.holds);
    CHECK(!e0.vacuous);

    // Only nested closed sets: no disjoint pair exists.
    const Space nested = Space::make({"a", "b"}, {{}, {"a", "b"}});
    const auto r = perfectly_normal_check(nested);
    CHECK(r.holds);
    CHECK(r.vacuous);

    const auto e2 = perfectly_normal_check(fixtures::e2());
    CHECK(e2.holds);

    const auto e1 = perfectly_normal_check(fixtures::e1());
    CHECK(!e1.holds);
    REQUIRE(e1.failure.has_value());
}
