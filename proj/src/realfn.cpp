#include "gt/realfn.hpp"

#include <stdexcept>

#include "gt/axioms.hpp"
#include "gt/detail/check.hpp"
#include "gt/errors.hpp"

namespace gt {

using detail::check;

bool is_continuous(const Analysis& a, const DyadicFn& f) {
    check(f.values.size() == static_cast<std::size_t>(a.n), "function must be total");
    std::vector<bool> done(f.values.size(), false);
    for (int i = 0; i < a.n; ++i) {
        if (done[static_cast<std::size_t>(i)]) continue;
        Subset fiber;
        for (int j = 0; j < a.n; ++j)
            if (f.at(j) == f.at(i)) {
                fiber = fiber | Subset::singleton(j);
                done[static_cast<std::size_t>(j)] = true;
            }
        if (!a.open(fiber)) return false;
    }
    return true;
}

bool is_continuous(const Space& s, const DyadicFn& f) {
    return is_continuous(Analysis::of(s), f);
}

namespace {

DyadicFn three_block_function(const Analysis& a, Subset zeroBlock, Subset oneBlock) {
    DyadicFn f;
    f.values.assign(static_cast<std::size_t>(a.n), Dyadic::fraction(1, 1));
    for (int i = 0; i < a.n; ++i) {
        if (zeroBlock.test(i)) f.values[static_cast<std::size_t>(i)] = Dyadic::zero();
        else if (oneBlock.test(i)) f.values[static_cast<std::size_t>(i)] = Dyadic::one();
    }
    return f;
}

}  // namespace

std::optional<DyadicFn> separated_by_function(const Analysis& a, Subset A, Subset B) {
    if (A.empty()) throw EmptyArgumentError("A");
    if (B.empty()) throw EmptyArgumentError("B");
    if (A.intersects(B)) throw NotDisjointError();

    for (const Subset u : a.lamOpen) {
        if (!A.subset_of(u) || u.intersects(B)) continue;
        for (const Subset v : a.lamOpen) {
            if (!B.subset_of(v) || u.intersects(v)) continue;
            const Subset mid = a.full.minus(u).minus(v);
            if (!mid.empty() && !a.open(mid)) continue;
            DyadicFn f = three_block_function(a, u, v);
            check(is_continuous(a, f), "separating function must be continuous");
            return f;
        }
    }
    return std::nullopt;
}

std::optional<DyadicFn> separated_by_function(const Space& s, Subset A, Subset B) {
    return separated_by_function(Analysis::of(s), A, B);
}

// ---------------------------------------------------------------------------
// Dyadic separation family

void check_dyadic_family(const Analysis& a, Subset A, Subset B, const DyadicFamily& fam) {
    const Subset top = a.full.minus(B);
    check(fam.top == top, "family top must be the complement of B");
    for (const auto& [q, v] : fam.levels) {
        (void)q;
        check(A.subset_of(v), "A must lie inside every level");
        check(a.sclosure(v).subset_of(top), "level closures must avoid B");
    }
    for (std::size_t i = 0; i < fam.levels.size(); ++i)
        for (std::size_t j = i + 1; j < fam.levels.size(); ++j) {
            check(fam.levels[i].first < fam.levels[j].first, "labels must ascend");
            check(a.sclosure(fam.levels[i].second).subset_of(fam.levels[j].second),
                  "level closures must nest");
        }
}

std::pair<DyadicFamily, DyadicFn> urysohn_construct(const Analysis& a, Subset A, Subset B,
                                                    int depth) {
    if (depth < 1) throw std::invalid_argument("depth must be positive");
    if (A.empty()) throw EmptyArgumentError("A");
    if (B.empty()) throw EmptyArgumentError("B");
    if (A.intersects(B)) throw NotDisjointError();
    if (!a.closed(A)) throw HypothesisViolatedError("A is slambda-closed");
    if (!a.closed(B)) throw HypothesisViolatedError("B is slambda-closed");
    if (!normal_weak(a)) throw HypothesisViolatedError("normalWeak");
    if (!a.conditionA) throw HypothesisViolatedError("conditionA");

    const Subset top = a.full.minus(B);

    // Levels at depth k are V(r/2^k) for r = 1..2^k-1, ascending. Bisect:
    // a new lowest level shrinks A into the old lowest, and between old
    // neighbours the closure of the lower shrinks into the upper.
    std::vector<Subset> levels{a.shrink(A, top)};
    for (int k = 2; k <= depth; ++k) {
        std::vector<Subset> next;
        next.reserve(levels.size() * 2 + 1);
        next.push_back(a.shrink(A, levels.front()));
        for (std::size_t i = 0; i < levels.size(); ++i) {
            next.push_back(levels[i]);
            const Subset upper = i + 1 < levels.size() ? levels[i + 1] : top;
            next.push_back(a.shrink(a.sclosure(levels[i]), upper));
        }
        levels = std::move(next);
    }

    DyadicFamily fam;
    fam.depth = depth;
    fam.top = top;
    for (std::size_t r = 1; r <= levels.size(); ++r)
        fam.levels.emplace_back(Dyadic::fraction(r, static_cast<unsigned>(depth)),
                                levels[r - 1]);
    check_dyadic_family(a, A, B, fam);

    DyadicFn f;
    f.values.assign(static_cast<std::size_t>(a.n), Dyadic::one());
    for (int y = 0; y < a.n; ++y) {
        if (levels.front().test(y)) {
            f.values[static_cast<std::size_t>(y)] = Dyadic::zero();
            continue;
        }
        for (std::size_t r = 2; r <= levels.size(); ++r)
            if (levels[r - 1].test(y)) {
                f.values[static_cast<std::size_t>(y)] =
                    Dyadic::fraction(r, static_cast<unsigned>(depth));
                break;
            }
    }
    for (int y = 0; y < a.n; ++y) {
        if (A.test(y)) check(f.at(y).is_zero(), "f must vanish on A");
        if (B.test(y)) check(f.at(y).is_one(), "f must be one on B");
    }
    return {std::move(fam), std::move(f)};
}

std::pair<DyadicFamily, DyadicFn> urysohn_construct(const Space& s, Subset A, Subset B,
                                                    int depth) {
    return urysohn_construct(Analysis::of(s), A, B, depth);
}

const SetFamily& g_delta_family(const Space& s) { return s.gdelta(); }

DyadicFn zero_set_function(const Analysis& a, Subset M, Subset N) {
    if (M.empty()) throw HypothesisViolatedError("M is nonempty");
    if (N.empty()) throw HypothesisViolatedError("N is nonempty");
    if (M.intersects(N)) throw HypothesisViolatedError("M and N are disjoint");
    if (!a.closed(M)) throw HypothesisViolatedError("M is slambda-closed");
    if (!a.closed(N)) throw HypothesisViolatedError("N is slambda-closed");
    if (!normal_weak(a)) throw HypothesisViolatedError("normalWeak");
    if (!a.conditionA) throw HypothesisViolatedError("conditionA");

    Subset kernel = a.full;
    for (const Subset u : a.lamOpen)
        if (M.subset_of(u)) kernel = kernel & u;
    if (kernel != M) throw NotGDeltaError();

    // Start from an open superset of M that misses N (weak normality supplies
    // one), then intersect in the remaining open supersets. Condition (A)
    // keeps every chain element open; duplicates are skipped, so the chain
    // strictly decreases and ends at M.
    Subset start;
    bool haveStart = false;
    for (const Subset u : a.lamOpen)
        if (M.subset_of(u) && !u.intersects(N)) {
            start = u;
            haveStart = true;
            break;
        }
    check(haveStart, "weak normality must supply an open superset missing N");

    std::vector<Subset> chain{start};
    for (const Subset u : a.lamOpen) {
        if (chain.back() == M) break;
        if (!M.subset_of(u)) continue;
        const Subset next = chain.back() & u;
        check(a.open(next), "chain elements must stay open");
        if (next != chain.back()) chain.push_back(next);
    }
    check(chain.back() == M, "chain must stabilize at M");
    const std::size_t s = chain.size();

    // f = sum over k<=s of f_k/2^k plus the exact tail f_s/2^s, where f_k
    // separates M from the complement of the k-th chain element.
    std::vector<DyadicFn> parts;
    parts.reserve(s);
    for (const Subset v : chain)
        parts.push_back(urysohn_construct(a, M, a.full.minus(v), 1).second);

    DyadicFn f;
    f.values.assign(static_cast<std::size_t>(a.n), Dyadic::zero());
    for (int y = 0; y < a.n; ++y) {
        Dyadic acc = Dyadic::zero();
        for (std::size_t k = 1; k <= s; ++k)
            acc = acc.plus(parts[k - 1].at(y).scaled_down(static_cast<unsigned>(k)));
        acc = acc.plus(parts[s - 1].at(y).scaled_down(static_cast<unsigned>(s)));
        f.values[static_cast<std::size_t>(y)] = acc;
    }

    for (int y = 0; y < a.n; ++y) {
        check(f.at(y).is_zero() == M.test(y), "zero set must equal M exactly");
        if (N.test(y)) check(f.at(y).is_one(), "f must be one on N");
    }
    return f;
}

DyadicFn zero_set_function(const Space& s, Subset M, Subset N) {
    return zero_set_function(Analysis::of(s), M, N);
}

PerfectNormality perfectly_normal_check(const Analysis& a) {
    PerfectNormality out;
    out.holds = true;
    out.vacuous = true;
    for (std::size_t i = 0; i < a.lamClosed.size(); ++i) {
        const Subset m = a.lamClosed[i];
        if (m.empty()) continue;
        for (std::size_t j = i + 1; j < a.lamClosed.size(); ++j) {
            const Subset n = a.lamClosed[j];
            if (n.empty() || m.intersects(n)) continue;
            out.vacuous = false;
            const Subset mid = a.full.minus(m).minus(n);
            const bool pairOk =
                a.open(m) && a.open(n) && (mid.empty() || a.open(mid));
            if (!pairOk) {
                out.holds = false;
                out.failure = {m, n};
                return out;
            }
        }
    }
    return out;
}

PerfectNormality perfectly_normal_check(const Space& s) {
    return perfectly_normal_check(Analysis::of(s));
}

}  // namespace gt
