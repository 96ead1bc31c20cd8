#pragma once

#include <vector>

#include "nilorbit/orbit.hpp"

namespace nilorbit {

namespace detail {
inline void enumerate_c_rec(Column remaining, Column cap, Columns& acc, std::vector<Orbit>& out) {
    if (remaining == 0) {
        out.push_back(validate(GroupKind::SymplecticC, acc));
        return;
    }
    // choose the next column pair (a >= b, a + b even, a <= cap)
    for (Column a = std::min(cap, remaining); a >= 1; --a) {
        for (Column b = std::min(a, remaining - a); b >= 0; --b) {
            if ((a + b) % 2 != 0) continue;
            if (remaining - a - b < 0) continue;
            acc.push_back(a);
            acc.push_back(b);
            enumerate_c_rec(remaining - a - b, b, acc, out);
            acc.pop_back();
            acc.pop_back();
        }
    }
}
} // namespace detail

// All type-C orbits of the given even size, canonical columns.
inline std::vector<Orbit> enumerate_orbits_c(Column size) {
    require(size >= 0 && size % 2 == 0, ErrorCode::BadRequest, "size must be even");
    std::vector<Orbit> out;
    if (size == 0) {
        out.push_back(validate(GroupKind::SymplecticC, {}));
        return out;
    }
    Columns acc;
    detail::enumerate_c_rec(size, size, acc, out);
    return out;
}

inline std::vector<Orbit> enumerate_generic_orbits_c(Column size) {
    std::vector<Orbit> out;
    for (const Orbit& o : enumerate_orbits_c(size))
        if (!o.columns.empty() && is_generic(o)) out.push_back(o);
    return out;
}

} // namespace nilorbit
