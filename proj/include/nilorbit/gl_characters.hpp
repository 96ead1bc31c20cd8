#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <vector>

#include "nilorbit/error.hpp"

namespace nilorbit {

// Weight multiplicities of GL(a) irreducibles, integer coordinates.
// Computed by the branching GL(a) -> GL(a-1): summands indexed by the
// interlacing highest weights.
using GlWeight = std::vector<std::int64_t>;
using GlWeightMap = std::map<GlWeight, std::int64_t>;

namespace detail {

inline GlWeightMap gl_weight_map_partition(int a, const GlWeight& lam);

inline const GlWeightMap& gl_weight_map_cached(int a, const GlWeight& lam) {
    static std::map<std::pair<int, GlWeight>, GlWeightMap> cache;
    static std::mutex mutex;
    auto key = std::make_pair(a, lam);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    GlWeightMap computed = gl_weight_map_partition(a, lam);  // recurses below this level
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::move(key), std::move(computed)).first->second;
}

inline GlWeightMap gl_weight_map_partition(int a, const GlWeight& lam) {
    hard_assert(static_cast<int>(lam.size()) == a, "partition length mismatch");
    GlWeightMap out;
    if (a == 0) {
        out[{}] = 1;
        return out;
    }
    if (a == 1) {
        out[{lam[0]}] = 1;
        return out;
    }
    std::int64_t total = std::accumulate(lam.begin(), lam.end(), std::int64_t{0});
    // enumerate interlacing mu: lam[i+1] <= mu[i] <= lam[i]
    GlWeight mu(static_cast<std::size_t>(a - 1));
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == mu.size()) {
            std::int64_t sub = std::accumulate(mu.begin(), mu.end(), std::int64_t{0});
            const GlWeightMap& inner = gl_weight_map_cached(a - 1, mu);
            for (const auto& [w, m] : inner) {
                GlWeight ext = w;
                ext.push_back(total - sub);
                out[ext] = checked_add(out.count(ext) ? out[ext] : 0, m);
            }
            return;
        }
        for (std::int64_t v = lam[pos]; v >= lam[pos + 1]; --v) {
            mu[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace detail

// Weight map for any GL-dominant integer highest weight (entries may be
// negative; tensoring by a power of det shifts every weight uniformly).
inline const GlWeightMap& gl_weight_map(int a, const GlWeight& highest) {
    require(a >= 0 && static_cast<int>(highest.size()) == a, ErrorCode::ShapeMismatch, "length != a");
    for (std::size_t i = 0; i + 1 < highest.size(); ++i)
        require(highest[i] >= highest[i + 1], ErrorCode::NotDominant, "GL highest weight not dominant");

    static std::map<std::pair<int, GlWeight>, GlWeightMap> shifted_cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(a, highest);
    auto it = shifted_cache.find(key);
    if (it != shifted_cache.end()) return it->second;

    std::int64_t shift = highest.empty() ? 0 : std::min<std::int64_t>(highest.back(), 0);
    GlWeight lam = highest;
    for (auto& x : lam) x -= shift;
    GlWeightMap base = detail::gl_weight_map_partition(a, lam);
    GlWeightMap shifted;
    for (const auto& [w, m] : base) {
        GlWeight v = w;
        for (auto& x : v) x += shift;
        shifted[v] = m;
    }
    return shifted_cache.emplace(key, std::move(shifted)).first->second;
}

inline std::int64_t gl_dimension(int a, const GlWeight& highest) {
    std::int64_t d = 0;
    for (const auto& [w, m] : gl_weight_map(a, highest)) d = checked_add(d, m);
    return d;
}

} // namespace nilorbit
