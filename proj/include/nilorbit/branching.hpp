#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "nilorbit/freudenthal.hpp"
#include "nilorbit/gl_characters.hpp"

namespace nilorbit {

// K-types and block targets in plain integer coordinates.
using KType = std::vector<std::int64_t>;
using BlockTuple = std::vector<GlWeight>;

struct LeviShape {
    std::vector<std::int64_t> block_sizes;
    BlockTuple block_targets;  // one GL-dominant weight per block
};

namespace detail {

inline BlockTuple split_blocks(const GlWeight& w, const std::vector<std::int64_t>& sizes) {
    BlockTuple t;
    std::size_t at = 0;
    for (auto s : sizes) {
        t.emplace_back(w.begin() + static_cast<std::ptrdiff_t>(at),
                       w.begin() + static_cast<std::ptrdiff_t>(at + static_cast<std::size_t>(s)));
        at += static_cast<std::size_t>(s);
    }
    return t;
}

inline bool tuple_dominant(const BlockTuple& t) {
    for (const auto& b : t)
        for (std::size_t i = 0; i + 1 < b.size(); ++i)
            if (b[i] < b[i + 1]) return false;
    return true;
}

} // namespace detail

// Restriction of the Sp(2n) irreducible with highest weight `mu` to the
// block subgroup U(a_1) x ... x U(a_k): the full decomposition map.
//
// Algorithm: take the complete weight multiset of V_mu, view each weight as a
// tuple of block weights, and repeatedly strip the module generated by the
// lexicographically extreme weight (its per-block character is the product of
// the GL weight maps).
inline std::map<BlockTuple, std::int64_t> levi_decomposition_compute(int rank, const KType& mu,
                                                                     const std::vector<std::int64_t>& sizes) {
    std::int64_t total = 0;
    for (auto s : sizes) {
        require(s >= 1, ErrorCode::ShapeMismatch, "block sizes must be positive");
        total += s;
    }
    require(total == rank, ErrorCode::ShapeMismatch, "block sizes must sum to the rank");
    require(static_cast<int>(mu.size()) == rank, ErrorCode::ShapeMismatch, "K-type length != rank");

    const WeightSystem& ws = weight_system(RsType::C, rank, wt_from_ints(mu));

    std::map<GlWeight, std::int64_t> remaining;
    for (const auto& [w, m] : ws.full) remaining[wt_to_ints(w)] = m;

    std::map<BlockTuple, std::int64_t> out;
    while (!remaining.empty()) {
        auto top = std::prev(remaining.end());  // lexicographically largest weight
        GlWeight lead = top->first;
        std::int64_t mult = top->second;
        hard_assert(mult > 0, "negative remainder in branching subtraction");
        BlockTuple tuple = detail::split_blocks(lead, sizes);
        hard_assert(detail::tuple_dominant(tuple), "extreme weight must be block-dominant");

        // subtract mult copies of the product character
        std::vector<const GlWeightMap*> maps;
        for (std::size_t b = 0; b < sizes.size(); ++b)
            maps.push_back(&gl_weight_map(static_cast<int>(sizes[b]), tuple[b]));
        std::vector<GlWeightMap::const_iterator> its;
        for (auto* m : maps) its.push_back(m->begin());
        for (;;) {
            GlWeight w;
            std::int64_t prod = 1;
            for (std::size_t b = 0; b < its.size(); ++b) {
                w.insert(w.end(), its[b]->first.begin(), its[b]->first.end());
                prod = checked_mul(prod, its[b]->second);
            }
            auto it = remaining.find(w);
            hard_assert(it != remaining.end() && it->second >= mult * prod,
                        "branching subtraction went negative");
            it->second -= mult * prod;
            if (it->second == 0) remaining.erase(it);

            std::size_t b = its.size();
            bool done = true;
            while (b-- > 0) {
                if (++its[b] != maps[b]->end()) {
                    done = false;
                    break;
                }
                its[b] = maps[b]->begin();
                if (b == 0) break;
            }
            if (done) break;
        }
        out[tuple] = checked_add(out.count(tuple) ? out[tuple] : 0, mult);
    }
    return out;
}

inline const std::map<BlockTuple, std::int64_t>& levi_decomposition(int rank, const KType& mu,
                                                                    const std::vector<std::int64_t>& sizes) {
    static std::map<std::tuple<int, KType, std::vector<std::int64_t>>, std::map<BlockTuple, std::int64_t>> cache;
    static std::mutex mutex;
    auto key = std::make_tuple(rank, mu, sizes);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto computed = levi_decomposition_compute(rank, mu, sizes);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::move(key), std::move(computed)).first->second;
}

inline std::int64_t branch_to_levi(int rank, const KType& mu, const LeviShape& shape) {
    require(shape.block_targets.size() == shape.block_sizes.size(), ErrorCode::ShapeMismatch,
            "one target per block required");
    for (std::size_t b = 0; b < shape.block_sizes.size(); ++b)
        require(static_cast<std::int64_t>(shape.block_targets[b].size()) == shape.block_sizes[b],
                ErrorCode::ShapeMismatch, "block target length mismatch");
    const auto& decomp = levi_decomposition(rank, mu, shape.block_sizes);
    auto it = decomp.find(shape.block_targets);
    return it == decomp.end() ? 0 : it->second;
}

} // namespace nilorbit
