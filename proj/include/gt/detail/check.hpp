#pragma once

#include <stdexcept>
#include <string>

namespace gt::detail {

inline void check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant failed: ") + what);
}

}  // namespace gt::detail
