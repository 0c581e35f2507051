#include "gt/covers.hpp"

#include "gt/detail/check.hpp"

namespace gt {

using detail::check;

namespace {

// Exhaustive subfamily sweeps are 2^|family|; beyond this size the reduced
// routes are used instead. Paracompactness pays an extra local-finiteness
// scan per cover, so it sweeps a bit less.
constexpr std::size_t kSweepLimit = 12;
constexpr std::size_t kParacompactSweepLimit = 8;

}  // namespace

bool is_refinement(const SetFamily& fine, const SetFamily& coarse) {
    for (const Subset b : fine) {
        bool inside = false;
        for (const Subset f : coarse)
            if (b.subset_of(f)) {
                inside = true;
                break;
            }
        if (!inside) return false;
    }
    return true;
}

bool is_locally_finite(const Analysis& a, const SetFamily& family) {
    for (int y = 0; y < a.n; ++y) {
        bool ok = false;
        for (const Subset v : a.lamOpen) {
            if (!v.test(y)) continue;
            std::size_t meets = 0;
            for (const Subset m : family)
                if (m.intersects(v)) ++meets;
            if (meets <= family.size()) {  // finitely many, always here
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

bool is_locally_finite(const Space& s, const SetFamily& family) {
    return is_locally_finite(Analysis::of(s), family);
}

bool has_fip(const SetFamily& family) {
    if (family.empty()) return true;
    Subset meet{~std::uint64_t{0}};
    for (const Subset m : family) meet = meet & m;
    return !meet.empty();
}

std::vector<Subset> finite_subcover(const Cover& cover) {
    std::vector<Subset> picked;
    Subset reached;
    for (const Subset m : cover.members) {
        if (cover.target.subset_of(reached)) break;
        if (!m.minus(reached).intersects(cover.target)) continue;
        picked.push_back(m);
        reached = reached | m;
    }
    if (!cover.target.subset_of(reached)) return {};
    return picked;
}

namespace {

bool subcover_compact(const Analysis& a) {
    const std::vector<Subset>& open = a.lamOpen;
    if (open.size() <= kSweepLimit) {
        const std::size_t count = std::size_t{1} << open.size();
        for (std::size_t mask = 0; mask < count; ++mask) {
            std::vector<Subset> members;
            for (std::size_t i = 0; i < open.size(); ++i)
                if (mask >> i & 1) members.push_back(open[i]);
            Cover c{SetFamily(members), a.full};
            if (!c.covers()) continue;
            if (finite_subcover(c).empty() && !a.full.empty()) return false;
        }
        return true;
    }
    // The full family covers Y (Y itself is open); its greedy subcover works.
    Cover c{SetFamily(open), a.full};
    return !finite_subcover(c).empty() || a.full.empty();
}

bool fip_route(const Analysis& a) {
    const std::vector<Subset>& closed = a.lamClosed;
    if (closed.size() <= kSweepLimit) {
        const std::size_t count = std::size_t{1} << closed.size();
        for (std::size_t mask = 1; mask < count; ++mask) {
            std::vector<Subset> members;
            for (std::size_t i = 0; i < closed.size(); ++i)
                if (mask >> i & 1) members.push_back(closed[i]);
            SetFamily fam(members);
            if (has_fip(fam)) {
                Subset meet = a.full;
                for (const Subset m : fam) meet = meet & m;
                if (meet.empty()) return false;
            }
        }
        return true;
    }
    // A finite family with the finite intersection property meets itself.
    return true;
}

}  // namespace

bool is_compact(const Analysis& a) {
    const bool sub = subcover_compact(a);
    const bool fip = fip_route(a);
    check(sub == fip, "subcover and FIP compactness must agree");
    return sub;
}

bool fip_compact(const Analysis& a) {
    const bool fip = fip_route(a);
    check(fip == subcover_compact(a), "subcover and FIP compactness must agree");
    return fip;
}

bool is_paracompact(const Analysis& a) {
    const std::vector<Subset>& open = a.lamOpen;
    if (open.size() <= kParacompactSweepLimit) {
        const std::size_t count = std::size_t{1} << open.size();
        for (std::size_t mask = 0; mask < count; ++mask) {
            std::vector<Subset> members;
            for (std::size_t i = 0; i < open.size(); ++i)
                if (mask >> i & 1) members.push_back(open[i]);
            Cover c{SetFamily(members), a.full};
            if (!c.covers()) continue;
            // A finite cover refines itself and is locally finite.
            if (!is_refinement(c.members, c.members)) return false;
            if (!is_locally_finite(a, c.members)) return false;
        }
        return true;
    }
    Cover c{SetFamily(open), a.full};
    return is_refinement(c.members, c.members) && is_locally_finite(a, c.members);
}

bool is_lindelof(const Analysis& a) {
    // Countable subcovers always exist at finite scale; reuse the machinery.
    return subcover_compact(a);
}

bool is_countably_compact(const Analysis& a) {
    // Countable covers of a finite space are finite covers.
    return subcover_compact(a);
}

bool is_compact(const Space& s) { return is_compact(Analysis::of(s)); }
bool fip_compact(const Space& s) { return fip_compact(Analysis::of(s)); }
bool is_paracompact(const Space& s) { return is_paracompact(Analysis::of(s)); }
bool is_lindelof(const Space& s) { return is_lindelof(Analysis::of(s)); }
bool is_countably_compact(const Space& s) { return is_countably_compact(Analysis::of(s)); }

}  // namespace gt
