#include "gt/space.hpp"

#include <mutex>
#include <optional>
#include <stdexcept>

#include "gt/errors.hpp"

namespace gt {

namespace {

void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant failed: ") + what);
}

// Family computations enumerate all subsets of the ground set.
constexpr int kMaxDerivedPoints = 16;

void require_derivable(const GroundSet& g) {
    if (g.size() > kMaxDerivedPoints)
        throw TooLargeError("derived families need at most " +
                            std::to_string(kMaxDerivedPoints) + " points");
}

// One-shot cache fill. The compute step runs outside the lock so it may fill
// other slots recursively; concurrent fills compute identical values, so
// last-write-wins is correct.
template <typename T, typename F>
const T& fill_once(std::mutex& m, std::optional<T>& slot, F&& compute) {
    {
        std::scoped_lock lk(m);
        if (slot) return *slot;
    }
    T value = compute();
    std::scoped_lock lk(m);
    if (!slot) slot = std::move(value);
    return *slot;
}

}  // namespace

// ---------------------------------------------------------------------------
// GroundSet

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw EmptyCarrierError();
    if (labels_.size() > 64) throw TooLargeError("a ground set holds at most 64 points");
    for (std::size_t i = 0; i < labels_.size(); ++i)
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j]) throw DuplicatePointError(labels_[i]);
}

int GroundSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == name) return static_cast<int>(i);
    throw UnknownPointError(name);
}

Subset GroundSet::subset_of_names(const std::vector<std::string>& names) const {
    Subset s;
    for (const auto& n : names) s = s | Subset::singleton(index_of(n));
    return s;
}

std::vector<std::string> GroundSet::names(Subset s) const {
    std::vector<std::string> out;
    for (int i = 0; i < size(); ++i)
        if (s.test(i)) out.push_back(labels_[static_cast<std::size_t>(i)]);
    return out;
}

std::string GroundSet::format(Subset s) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < size(); ++i) {
        if (!s.test(i)) continue;
        if (!first) out += ",";
        out += label(i);
        first = false;
    }
    out += "}";
    return out;
}

// ---------------------------------------------------------------------------
// Generic open-family operators

Subset closure_in_family(const SetFamily& open_family, Subset d, const GroundSet& ground) {
    const Subset full = ground.universe();

    // Pointwise adherence: y survives iff every member containing y meets d.
    Subset adh;
    for (int i = 0; i < ground.size(); ++i) {
        bool adherent = true;
        for (const Subset v : open_family)
            if (v.test(i) && !v.intersects(d)) {
                adherent = false;
                break;
            }
        if (adherent) adh = adh | Subset::singleton(i);
    }

    // Intersection of closed supersets; the empty intersection counts as Y.
    Subset meet = full;
    for (const Subset v : open_family) {
        const Subset closed = full.minus(v);
        if (d.subset_of(closed)) meet = meet & closed;
    }

    internal_check(adh == meet, "closure routes disagree");
    return adh;
}

Subset interior_in_family(const SetFamily& open_family, Subset d, const GroundSet& ground) {
    Subset join;
    for (const Subset v : open_family)
        if (v.subset_of(d)) join = join | v;

    const Subset full = ground.universe();
    const Subset dual = full.minus(closure_in_family(open_family, full.minus(d), ground));
    internal_check(join == dual, "interior duality failed");
    return join;
}

// ---------------------------------------------------------------------------
// Space

struct Space::Caches {
    std::mutex fill;
    std::optional<SetFamily> semiOpen, semiClosed, lamClosed, lamOpen, sgClosed, sgOpen,
        gdelta;
    std::uint64_t emptyKernelUses = 0;
};

Space Space::make(const std::vector<std::string>& points,
                  const std::vector<std::vector<std::string>>& opens) {
    GroundSet ground(points);
    std::vector<Subset> members;
    members.reserve(opens.size() + 1);
    for (const auto& open : opens) members.push_back(ground.subset_of_names(open));
    return from_family(std::move(ground), std::move(members));
}

Space Space::from_family(GroundSet ground, std::vector<Subset> gamma) {
    const Subset full = ground.universe();
    for (const Subset m : gamma)
        if (!m.subset_of(full)) throw UnknownPointError("<bit outside ground set>");

    gamma.push_back(Subset::empty_set());
    SetFamily family(std::move(gamma));

    for (const Subset a : family)
        for (const Subset b : family)
            if (!family.contains(a | b))
                throw NotUnionClosedError(ground.format(a), ground.format(b),
                                          ground.format(a | b));

    Space s;
    s.ground_ = std::move(ground);
    s.gamma_ = std::move(family);
    s.caches_ = std::make_shared<Caches>();
    return s;
}

Subset Space::gamma_closure(Subset d) const {
    // Y - (union of the open sets missing d); identical to intersecting the
    // gamma-closed supersets, and that collection is never empty.
    Subset avoid;
    for (const Subset v : gamma_)
        if (!v.intersects(d)) avoid = avoid | v;
    return universe().minus(avoid);
}

const SetFamily& Space::sgamma_open() const {
    return fill_once(caches_->fill, caches_->semiOpen, [&] {
        require_derivable(ground_);
        const std::uint64_t full = universe().bits;
        const auto& members = gamma_.members();

        std::vector<Subset> closures;
        closures.reserve(members.size());
        for (const Subset v : members) closures.push_back(gamma_closure(v));

        std::vector<Subset> out;
        for (std::uint64_t d = 0;; ++d) {
            const Subset cand{d};
            for (std::size_t i = 0; i < members.size(); ++i)
                if (members[i].subset_of(cand) && cand.subset_of(closures[i])) {
                    out.push_back(cand);
                    break;
                }
            if (d == full) break;
        }
        SetFamily fam(std::move(out));
        internal_check(fam.union_closed(), "semi-open family must be union-closed");
        return fam;
    });
}

const SetFamily& Space::sgamma_closed() const {
    const SetFamily& open = sgamma_open();
    return fill_once(caches_->fill, caches_->semiClosed,
                     [&] { return open.complements(universe()); });
}

Subset Space::sclosure_gamma(Subset d) const {
    return closure_in_family(sgamma_open(), d, ground_);
}

Subset Space::sker(Subset d) const {
    Subset meet = universe();
    bool any = false;
    for (const Subset v : sgamma_open())
        if (d.subset_of(v)) {
            meet = meet & v;
            any = true;
        }
    if (!any) {
        std::scoped_lock lk(caches_->fill);
        ++caches_->emptyKernelUses;
    }
    return meet;
}

std::uint64_t Space::empty_kernel_uses() const {
    std::scoped_lock lk(caches_->fill);
    return caches_->emptyKernelUses;
}

const SetFamily& Space::slambda_closed() const {
    return fill_once(caches_->fill, caches_->lamClosed, [&] {
        require_derivable(ground_);
        const std::uint64_t full = universe().bits;

        // Fixed-point route: D = sker(D) ∩ sclosure(D).
        std::vector<Subset> fixed;
        for (std::uint64_t d = 0;; ++d) {
            const Subset cand{d};
            if ((sker(cand) & sclosure_gamma(cand)) == cand) fixed.push_back(cand);
            if (d == full) break;
        }
        SetFamily viaFormula(std::move(fixed));

        // Pair route: M ∩ N with M kernel-fixed and N semi-closed.
        std::vector<Subset> kernelFixed;
        for (std::uint64_t m = 0;; ++m) {
            const Subset cand{m};
            if (sker(cand) == cand) kernelFixed.push_back(cand);
            if (m == full) break;
        }
        std::vector<Subset> pairs;
        for (const Subset m : kernelFixed)
            for (const Subset n : sgamma_closed()) pairs.push_back(m & n);
        SetFamily viaPairs(std::move(pairs));

        internal_check(viaFormula == viaPairs, "lambda-closed routes disagree");
        internal_check(viaFormula.intersection_closed(),
                       "lambda-closed family must be intersection-closed");
        return viaFormula;
    });
}

const SetFamily& Space::slambda_open() const {
    const SetFamily& closed = slambda_closed();
    return fill_once(caches_->fill, caches_->lamOpen, [&] {
        SetFamily open = closed.complements(universe());
        internal_check(open.union_closed(), "lambda-open family must be union-closed");
        return open;
    });
}

Subset Space::sclosure_lambda(Subset d) const {
    return closure_in_family(slambda_open(), d, ground_);
}

Subset Space::sinterior_lambda(Subset d) const {
    return interior_in_family(slambda_open(), d, ground_);
}

const SetFamily& Space::sg_closed() const {
    return fill_once(caches_->fill, caches_->sgClosed, [&] {
        const SetFamily& open = slambda_open();
        const std::uint64_t full = universe().bits;

        std::vector<Subset> out;
        for (std::uint64_t d = 0;; ++d) {
            const Subset cand{d};
            const Subset cl = sclosure_lambda(cand);
            bool ok = true;
            for (const Subset v : open)
                if (cand.subset_of(v) && !cl.subset_of(v)) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(cand);
            if (d == full) break;
        }
        SetFamily fam(std::move(out));

        // Dual characterization of the complements: D' is sg-open iff every
        // lambda-closed P inside D' lies in the lambda-interior of D'.
        for (std::uint64_t d = 0;; ++d) {
            const Subset comp{full & ~d};
            bool dual = true;
            for (const Subset p : slambda_closed())
                if (p.subset_of(comp) && !p.subset_of(sinterior_lambda(comp))) {
                    dual = false;
                    break;
                }
            internal_check(dual == fam.contains(Subset{d}), "sg duality failed");
            if (d == full) break;
        }
        return fam;
    });
}

const SetFamily& Space::sg_open() const {
    const SetFamily& closed = sg_closed();
    return fill_once(caches_->fill, caches_->sgOpen,
                     [&] { return closed.complements(universe()); });
}

const SetFamily& Space::gdelta() const {
    return fill_once(caches_->fill, caches_->gdelta, [&] {
        // Close the open family under pairwise intersection; on a finite
        // space that is exactly the intersections of nonempty subfamilies.
        const SetFamily& open = slambda_open();
        std::vector<Subset> work(open.members());
        std::vector<bool> seen(universe().bits + 1, false);
        for (const Subset s : work) seen[s.bits] = true;
        for (std::size_t i = 0; i < work.size(); ++i)
            for (std::size_t j = 0; j < i; ++j) {
                const Subset meet = work[i] & work[j];
                if (!seen[meet.bits]) {
                    seen[meet.bits] = true;
                    work.push_back(meet);
                }
            }
        return SetFamily(std::move(work));
    });
}

Space Space::subspace(Subset carrier) const {
    if (carrier.empty()) throw EmptyCarrierError();

    std::vector<std::string> labels;
    std::vector<int> oldIndex;
    for (int i = 0; i < points(); ++i)
        if (carrier.test(i)) {
            labels.push_back(ground_.label(i));
            oldIndex.push_back(i);
        }

    std::vector<Subset> traces;
    traces.reserve(gamma_.size());
    for (const Subset v : gamma_) {
        Subset t;
        for (std::size_t k = 0; k < oldIndex.size(); ++k)
            if (v.test(oldIndex[k])) t = t | Subset::singleton(static_cast<int>(k));
        traces.push_back(t);
    }
    return from_family(GroundSet(std::move(labels)), std::move(traces));
}

}  // namespace gt
