#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gt/space.hpp"

namespace gt {

enum class TheoremStatus { verified, vacuous, failed };

/// A demonstrating instance: a space plus the named subsets that exhibit a
/// phenomenon. Replaying a witness re-checks the phenomenon from scratch.
struct Witness {
    std::string property;  // a mined property id, or "theorem:<id>"
    Space space;
    std::vector<std::pair<std::string, Subset>> sets;
    std::string note;
};

struct TheoremReport {
    std::string id;
    bool hypothesesHeld = false;
    bool conclusionHeld = false;
    TheoremStatus status = TheoremStatus::vacuous;
    std::optional<Witness> witness;
};

const char* status_name(TheoremStatus s);

/// All union-closed families containing the empty set over an n-point ground
/// set, emitted by canonical augmentation (each family exactly once, no
/// global storage). Exhaustive enumeration is capped at n = 4; n = 5 needs
/// sample_spaces.
void enumerate_spaces(int n, bool dedup, const std::function<void(const Space&)>& emit);
std::uint64_t count_spaces(int n, bool dedup);

/// Deterministic fixed-seed sampler for sizes where exhaustive enumeration is
/// off the table: draws a generator count, draws that many random subsets and
/// closes them under union. Duplicates across draws are expected.
void sample_spaces(int n, std::uint64_t count, std::uint64_t seed,
                   const std::function<void(const Space&)>& emit);

/// Lexicographically least relabeling of gamma under all point permutations.
/// Idempotent and constant on permutation orbits.
Space canonical_form(const Space& s);

/// Instantiates every implication of the catalogue on the given space.
/// FAILED always means the hypotheses held and the conclusion did not.
std::vector<TheoremReport> verify_theorems(const Space& s);

const std::vector<std::string>& theorem_ids();

const std::vector<std::string>& mine_properties();

/// Scans all spaces with exactly n points for the named phenomenon and
/// returns the smallest witnesses (fewest open sets, then canonical order).
std::vector<Witness> mine_counterexamples(int n, const std::string& property,
                                          int limit = 1);

bool replay_witness(const Witness& w);

}  // namespace gt
