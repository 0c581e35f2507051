#pragma once

#include <string>
#include <vector>

#include "gt/explorer.hpp"
#include "gt/space.hpp"

namespace gt {

struct NamedSpace {
    std::string name;
    Space space;
};

/// Parses one space block:
///   space <name>
///   points <p1> <p2> ...
///   open [<p> ...]        (bare "open" is the empty set)
/// '#' starts a comment; tokens are whitespace-separated; UTF-8 throughout.
/// Syntax and validation errors carry the offending line number.
NamedSpace parse_space(const std::string& text);

/// Canonical rendering; parse(render(s)) == s.
std::string render_space(const std::string& name, const Space& s);

/// Witness blocks are a space block preceded by "witness <property>" and
/// followed by "subset <role> [<p> ...]" lines and an optional "note <text>".
std::string render_witness(const Witness& w);
std::vector<Witness> parse_witnesses(const std::string& text);

}  // namespace gt
