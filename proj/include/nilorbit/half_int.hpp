#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "nilorbit/error.hpp"

namespace nilorbit {

// Exact half-integer, stored as twice its value.  All coordinates in this
// library (Langlands strings, infinitesimal characters, weights) go through
// this type or its doubled representation; no floating point anywhere.
struct HalfInt {
    std::int64_t doubled = 0;

    constexpr HalfInt() = default;

    static constexpr HalfInt from_doubled(std::int64_t d) {
        HalfInt h;
        h.doubled = d;
        return h;
    }
    static constexpr HalfInt whole(std::int64_t v) { return from_doubled(2 * v); }

    constexpr bool is_integer() const { return doubled % 2 == 0; }

    std::int64_t as_integer() const {
        require(is_integer(), ErrorCode::NonIntegralResult, "half-integer where integer expected");
        return doubled / 2;
    }

    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_doubled(a.doubled + b.doubled); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_doubled(a.doubled - b.doubled); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_doubled(-a.doubled); }
    friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

    std::string str() const {
        if (is_integer()) return std::to_string(doubled / 2);
        return std::to_string(doubled) + "/2";
    }
};

} // namespace nilorbit
