#pragma once

// Shared test scaffolding: element construction shortcuts and lookups.

#include "wfact/group.hpp"
#include "wfact/wreath.hpp"

#include <algorithm>
#include <vector>

namespace wfact::testutil {

inline WreathElement elem(std::vector<int> perm, std::vector<int> colors) {
    return WreathElement{std::move(perm), std::move(colors)};
}

// reflection-list index of an element id, or -1
inline int refl_index_of(const FiniteGroup& fg, int elem_id) {
    auto it = std::find(fg.reflections.begin(), fg.reflections.end(), elem_id);
    if (it == fg.reflections.end()) return -1;
    return static_cast<int>(it - fg.reflections.begin());
}

inline uint64_t full_mask(const FiniteGroup& fg) {
    int nr = fg.nrefl();
    return nr == 64 ? ~uint64_t{0} : (uint64_t{1} << nr) - 1;
}

} // namespace wfact::testutil
