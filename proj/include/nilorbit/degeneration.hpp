#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "nilorbit/orbit.hpp"

namespace nilorbit {

enum class DegenerationCase { StrictStrict, EqualLeft, EqualRight, AllEqual };

// One local column move (b0 >= b1 = b2 >= b3) -> 2..4 new columns.
struct Degeneration {
    DegenerationCase kase = DegenerationCase::StrictStrict;
    int position = 0;  // global index of b0 in the member's column list
    std::array<Column, 4> before{};
    Columns after;
};

inline Columns fundamental_degeneration_raw(Column b0, Column b1, Column b2, Column b3,
                                            DegenerationCase* kase_out = nullptr) {
    require(b1 == b2, ErrorCode::NoEqualPair, "middle columns differ");
    require(b0 >= b1 && b2 >= b3 && b3 >= 0, ErrorCode::BadRequest, "quadruple not weakly decreasing");
    require(b1 > 0, ErrorCode::BadRequest, "degeneration needs a positive pair");
    require((b0 - b1) % 2 == 0 && (b2 - b3) % 2 == 0, ErrorCode::ParityViolation,
            "quadruple entries must share parity");
    DegenerationCase kase;
    Columns out;
    if (b0 > b1 && b2 > b3) {
        kase = DegenerationCase::StrictStrict;
        out = {b0, b1 + 2, b2 - 2, b3};
    } else if (b0 == b1 && b2 > b3) {
        kase = DegenerationCase::EqualLeft;
        out = {b0 + 1, b1 + 1, b2 - 2, b3};
    } else if (b0 > b1 && b2 == b3) {
        kase = DegenerationCase::EqualRight;
        out = {b0, b1 + 2, b2 - 1, b3 - 1};
    } else {
        kase = DegenerationCase::AllEqual;
        out = {b0 + 1, b1 + 1, b2 - 1, b3 - 1};
    }
    // In the first two cases the trailing (0, 0) is omitted.
    if ((kase == DegenerationCase::StrictStrict || kase == DegenerationCase::EqualLeft) &&
        out[2] == 0 && out[3] == 0)
        out.resize(2);
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        hard_assert(out[i] >= out[i + 1], "degeneration output not weakly decreasing");
    if (kase_out) *kase_out = kase;
    return out;
}

inline Columns fundamental_degeneration(Column b0, Column b1, Column b2, Column b3) {
    return fundamental_degeneration_raw(b0, b1, b2, b3);
}

// A Norm member keeps, per chain of the original orbit, the columns its
// family has degenerated to.  The chain parity delta of the original chain
// rides along; parameter attachment depends on it, not on the parity of the
// degenerated entries.
struct NormSegment {
    Columns columns;
    Parity delta = Parity::Even;

    friend bool operator<(const NormSegment& a, const NormSegment& b) {
        if (a.columns != b.columns) return a.columns < b.columns;
        return a.delta < b.delta;
    }
    friend bool operator==(const NormSegment& a, const NormSegment& b) {
        return a.columns == b.columns && a.delta == b.delta;
    }
};

struct NormMember {
    Orbit orbit;
    std::vector<NormSegment> segments;
    int depth = 0;  // co-rank: number of degenerations from the origin

    std::int64_t interior_pairs() const {
        std::int64_t n = 0;
        for (const auto& seg : segments)
            for (const auto& part : chain_split(seg.columns))
                n += static_cast<std::int64_t>(part.size()) / 2 - 1;
        return n;
    }
};

struct NormEdge {
    int from = 0;
    Degeneration deg;
    int to = 0;
};

struct NormSet {
    Orbit origin;
    std::vector<NormMember> members;  // origin first, then sorted by (depth, columns)
    std::vector<NormEdge> edges;

    const NormMember* find(const Columns& cols) const {
        for (const auto& m : members)
            if (m.orbit.columns == cols) return &m;
        return nullptr;
    }
};

namespace detail {

inline Columns assemble(const std::vector<NormSegment>& segments) {
    Columns cols;
    for (const auto& s : segments) cols.insert(cols.end(), s.columns.begin(), s.columns.end());
    return cols;
}

// Apply one degeneration inside segment `si` at the interior pair starting at
// local index `pos` (so the quadruple is local columns pos-1 .. pos+2).
inline std::vector<NormSegment> degenerate_segment(const std::vector<NormSegment>& segments,
                                                   std::size_t si, std::size_t pos,
                                                   Degeneration& deg_out) {
    std::vector<NormSegment> next = segments;
    Columns& cols = next[si].columns;
    hard_assert(pos >= 1 && pos + 2 < cols.size(), "degeneration position out of range");
    Column b0 = cols[pos - 1], b1 = cols[pos], b2 = cols[pos + 1], b3 = cols[pos + 2];
    DegenerationCase kase;
    Columns repl = fundamental_degeneration_raw(b0, b1, b2, b3, &kase);
    deg_out.kase = kase;
    deg_out.before = {b0, b1, b2, b3};
    deg_out.after = repl;
    Columns rebuilt(cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(pos) - 1);
    rebuilt.insert(rebuilt.end(), repl.begin(), repl.end());
    rebuilt.insert(rebuilt.end(), cols.begin() + static_cast<std::ptrdiff_t>(pos) + 3, cols.end());
    rebuilt = strip_trailing_zeros(std::move(rebuilt));
    if (rebuilt.size() % 2 != 0) rebuilt.push_back(0);
    cols = std::move(rebuilt);
    return next;
}

} // namespace detail

// All orbits reachable from a generic orbit by iterated fundamental
// degenerations at interior chain pairs, with edges retained.
inline NormSet norm_set(const Orbit& orbit) {
    require(orbit.kind == GroupKind::SymplecticC, ErrorCode::BadRequest, "type C only");
    require(is_generic(orbit), ErrorCode::NotGeneric, "Norm set defined for generic orbits");

    NormSet result;
    result.origin = orbit;

    std::vector<NormSegment> origin_segments;
    for (const Chain& c : chain_decompose(orbit).chains)
        origin_segments.push_back(NormSegment{c.entries, c.parity});

    std::map<std::vector<NormSegment>, int> index_of;
    std::vector<NormMember> created;          // insertion order
    std::vector<Columns> created_columns;

    auto add_member = [&](std::vector<NormSegment> segments, int depth) -> int {
        auto it = index_of.find(segments);
        if (it != index_of.end()) return it->second;
        Orbit member_orbit = validate(GroupKind::SymplecticC, detail::assemble(segments));
        // The global chain decomposition must refine the per-chain families.
        std::vector<std::vector<Column>> global = chain_split(member_orbit.columns);
        std::vector<std::vector<Column>> local;
        for (const auto& s : segments)
            for (auto& part : chain_split(s.columns)) local.push_back(part);
        hard_assert(global == local, "member chains do not split along origin chains");
        int idx = static_cast<int>(created.size());
        created_columns.push_back(member_orbit.columns);
        created.push_back(NormMember{std::move(member_orbit), std::move(segments), depth});
        index_of.emplace(created.back().segments, idx);
        return idx;
    };

    add_member(origin_segments, 0);
    for (std::size_t qi = 0; qi < created.size(); ++qi) {
        const std::vector<NormSegment> segments = created[qi].segments;
        const int depth = created[qi].depth;
        std::size_t global_offset = 0;
        for (std::size_t si = 0; si < segments.size(); ++si) {
            const Columns& cols = segments[si].columns;
            std::size_t local_offset = 0;
            for (const auto& part : chain_split(cols)) {
                for (std::size_t p = 1; p + 2 < part.size(); p += 2) {
                    Degeneration deg;
                    deg.position = static_cast<int>(global_offset + local_offset + p - 1);
                    auto next = detail::degenerate_segment(segments, si, local_offset + p, deg);
                    int to = add_member(std::move(next), depth + 1);
                    result.edges.push_back(NormEdge{static_cast<int>(qi), deg, to});
                }
                local_offset += part.size();
            }
            global_offset += cols.size();
        }
    }

    result.members = created;
    std::sort(result.members.begin(), result.members.end(), [](const NormMember& a, const NormMember& b) {
        if (a.depth != b.depth) return a.depth < b.depth;
        return a.orbit.columns > b.orbit.columns;
    });
    std::map<Columns, int> reindex;
    for (std::size_t i = 0; i < result.members.size(); ++i)
        reindex[result.members[i].orbit.columns] = static_cast<int>(i);
    hard_assert(reindex.size() == result.members.size(), "duplicate Norm members after sort");
    for (auto& e : result.edges) {
        e.from = reindex.at(created_columns[static_cast<std::size_t>(e.from)]);
        e.to = reindex.at(created_columns[static_cast<std::size_t>(e.to)]);
    }
    return result;
}

inline Orbit norm_minimum(const Orbit& orbit) {
    NormSet ns = norm_set(orbit);
    const NormMember* best = nullptr;
    for (const auto& m : ns.members) {
        bool minimal = true;
        for (const auto& other : ns.members)
            if (!closure_leq(m.orbit, other.orbit)) {
                minimal = false;
                break;
            }
        if (minimal) {
            hard_assert(best == nullptr, "Norm minimum not unique");
            best = &m;
        }
    }
    hard_assert(best != nullptr, "Norm set has no minimum");
    for (const auto& part : chain_split(best->orbit.columns))
        hard_assert(part.size() == 2, "Norm minimum must have length-2 chains");
    return best->orbit;
}

} // namespace nilorbit
