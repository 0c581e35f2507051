#pragma once

#include <vector>

#include "gt/explorer.hpp"
#include "gt/space.hpp"

namespace fixtures {

// Ground set {a,b,c,d} with gamma = {∅,{a,b},{b,c},{a,b,c}}: the running
// four-point example whose derived families are frozen in several tests.
inline gt::Space e1() {
    return gt::Space::make({"a", "b", "c", "d"}, {{}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}});
}

// Two points, only the empty set open.
inline gt::Space e0() { return gt::Space::make({"a", "b"}, {{}}); }

// Three points, gamma = {∅,{a,b}}.
inline gt::Space e2() { return gt::Space::make({"a", "b", "c"}, {{}, {"a", "b"}}); }

inline gt::Space discrete(int n) {
    std::vector<std::string> points;
    for (int i = 0; i < n; ++i) points.emplace_back(1, static_cast<char>('a' + i));
    std::vector<std::vector<std::string>> opens;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<std::string> open;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) open.push_back(points[static_cast<std::size_t>(i)]);
        opens.push_back(open);
    }
    return gt::Space::make(points, opens);
}

inline gt::Subset set_of(const gt::Space& s, const std::vector<std::string>& names) {
    return s.ground().subset_of_names(names);
}

inline std::vector<gt::Space> spaces_up_to(int maxN) {
    std::vector<gt::Space> out;
    for (int n = 1; n <= maxN; ++n)
        gt::enumerate_spaces(n, false, [&](const gt::Space& s) { out.push_back(s); });
    return out;
}

}  // namespace fixtures
