#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "nilorbit/error.hpp"
#include "nilorbit/half_int.hpp"

namespace nilorbit {

using Column = std::int64_t;
using Columns = std::vector<Column>;

enum class GroupKind { SymplecticC, OrthogonalBD };
enum class Parity { Even, Odd };

inline Parity parity_of(Column c) { return (c % 2 == 0) ? Parity::Even : Parity::Odd; }

// A classical nilpotent orbit recorded by the columns of its Young diagram,
// weakly decreasing.  Canonical form: symplectic orbits carry an even number
// of columns (at most one trailing zero), orthogonal orbits an odd number.
struct Orbit {
    GroupKind kind = GroupKind::SymplecticC;
    Columns columns;

    Column size() const { return std::accumulate(columns.begin(), columns.end(), Column{0}); }

    friend bool operator==(const Orbit& a, const Orbit& b) {
        return a.kind == b.kind && a.columns == b.columns;
    }
    friend bool operator<(const Orbit& a, const Orbit& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.columns < b.columns;
    }
};

// Row lengths (transpose of the column list).
inline Columns rows_of(const Columns& cols) {
    Columns rows;
    if (cols.empty()) return rows;
    for (Column r = 1; r <= cols.front(); ++r) {
        Column count = 0;
        for (Column c : cols)
            if (c >= r) ++count;
        rows.push_back(count);
    }
    return rows;
}

inline Columns strip_trailing_zeros(Columns cols) {
    while (!cols.empty() && cols.back() == 0) cols.pop_back();
    return cols;
}

inline Orbit validate(GroupKind kind, Columns cols) {
    for (Column c : cols)
        require(c >= 0, ErrorCode::NegativeColumn, "column " + std::to_string(c));
    for (std::size_t i = 0; i + 1 < cols.size(); ++i)
        require(cols[i] >= cols[i + 1], ErrorCode::NotDecreasing,
                "columns not weakly decreasing at index " + std::to_string(i));
    cols = strip_trailing_zeros(std::move(cols));
    if (kind == GroupKind::SymplecticC) {
        if (cols.size() % 2 != 0) cols.push_back(0);
        for (std::size_t i = 0; i + 1 < cols.size(); i += 2)
            require((cols[i] + cols[i + 1]) % 2 == 0, ErrorCode::ParityViolation,
                    "column pair " + std::to_string(i / 2) + " has odd sum " +
                        std::to_string(cols[i]) + "+" + std::to_string(cols[i + 1]));
    } else {
        if (cols.size() % 2 == 0) cols.push_back(0);
        // Even rows of the diagram must occur an even number of times.
        Columns rows = rows_of(cols);
        for (std::size_t i = 0; i < rows.size();) {
            std::size_t j = i;
            while (j < rows.size() && rows[j] == rows[i]) ++j;
            require(rows[i] % 2 != 0 || (j - i) % 2 == 0, ErrorCode::ParityViolation,
                    "even row length " + std::to_string(rows[i]) + " occurs " +
                        std::to_string(j - i) + " times");
            i = j;
        }
    }
    return Orbit{kind, std::move(cols)};
}

// A maximal segment [b0 >= (b1=b2) >= ... >= (b_{2k-1}=b_{2k}) >= b_{2k+1}]
// of the column list.  Entries always share one parity.
struct Chain {
    std::vector<Column> entries;
    Parity parity = Parity::Even;
    bool is_generic = false;

    std::int64_t pair_count() const { return static_cast<std::int64_t>(entries.size()) / 2 - 1; }
    Column front() const { return entries.front(); }
    Column back() const { return entries.back(); }

    friend bool operator==(const Chain& a, const Chain& b) { return a.entries == b.entries; }
};

struct ChainDecomposition {
    std::vector<Chain> chains;
};

inline bool chain_entries_generic(const std::vector<Column>& e) {
    if (e.size() == 2) return true;
    for (std::size_t i = 0; i + 1 < e.size(); i += 2)
        if (e[i] <= e[i + 1]) return false;
    return true;
}

inline Chain make_chain(std::vector<Column> entries) {
    hard_assert(entries.size() >= 2 && entries.size() % 2 == 0, "chain must have even length >= 2");
    Parity p = parity_of(entries.front());
    for (Column b : entries)
        hard_assert(parity_of(b) == p, "chain parity broken by entry " + std::to_string(b));
    for (std::size_t i = 1; i + 2 < entries.size(); i += 2)
        hard_assert(entries[i] == entries[i + 1], "interior chain pair not equal");
    Chain c;
    c.is_generic = chain_entries_generic(entries);
    c.parity = p;
    c.entries = std::move(entries);
    return c;
}

// Greedy decomposition: cut after the first odd index j with c_j > c_{j+1}.
inline std::vector<std::vector<Column>> chain_split(const Columns& cols) {
    std::vector<std::vector<Column>> out;
    std::size_t start = 0;
    while (start < cols.size()) {
        std::size_t end = cols.size();
        for (std::size_t j = start + 1; j + 1 < cols.size(); j += 2) {
            if (cols[j] > cols[j + 1]) {
                end = j + 1;
                break;
            }
        }
        out.emplace_back(cols.begin() + start, cols.begin() + end);
        start = end;
    }
    return out;
}

inline ChainDecomposition chain_decompose(const Orbit& orbit) {
    require(orbit.kind == GroupKind::SymplecticC, ErrorCode::BadRequest,
            "chains are defined on symplectic orbits; map orthogonal orbits through to_symplectic");
    ChainDecomposition d;
    for (auto& seg : chain_split(orbit.columns)) d.chains.push_back(make_chain(std::move(seg)));
    for (std::size_t i = 0; i + 1 < d.chains.size(); ++i)
        hard_assert(d.chains[i].back() > d.chains[i + 1].front(), "chains not strictly separated");
    return d;
}

inline bool is_generic(const Orbit& orbit) {
    for (const Chain& c : chain_decompose(orbit).chains)
        if (!c.is_generic) return false;
    return true;
}

inline bool is_special(const Orbit& orbit) {
    require(orbit.kind == GroupKind::SymplecticC, ErrorCode::BadRequest, "specialness implemented for type C");
    const Columns& c = orbit.columns;
    for (std::size_t i = 0; i + 1 < c.size(); i += 2)
        if (c[i] % 2 != 0 && c[i] != c[i + 1]) return false;
    return true;
}

// Rank l of the component group A(O) = (Z/2Z)^l.
inline int component_group_rank(const Orbit& orbit) {
    return static_cast<int>(chain_decompose(orbit).chains.size());
}

// Rank l' of the Lusztig quotient: chains ending in a positive even integer.
// Defined for special orbits, whose chains are even or constant odd.
inline int lusztig_quotient_rank(const Orbit& orbit) {
    require(is_special(orbit), ErrorCode::NotSpecialForm, "orbit is not special");
    int rank = 0;
    for (const Chain& c : chain_decompose(orbit).chains) {
        if (c.parity == Parity::Odd) {
            for (Column b : c.entries)
                require(b == c.front(), ErrorCode::NotSpecialForm, "odd chain of a special orbit must be constant");
        }
        if (c.back() > 0 && c.back() % 2 == 0) ++rank;
    }
    return rank;
}

// Witness for the Kraft-Procesi non-normality pattern
//   b_{2i-2} > (b_{2i-1}=b_{2i}) = ... = (b_{2j-1}=b_{2j}) > b_{2j+1}.
// Indices i, j are 1-based pair positions inside the chain.
struct KpWitness {
    int chain_index = 0;
    int i = 0;
    int j = 0;
};

inline std::optional<KpWitness> kp_normality(const Orbit& orbit) {
    auto chains = chain_decompose(orbit).chains;
    for (std::size_t ci = 0; ci < chains.size(); ++ci) {
        const auto& e = chains[ci].entries;
        std::int64_t k = chains[ci].pair_count();
        for (std::int64_t i = 1; i <= k; ++i) {
            Column v = e[2 * i - 1];
            std::int64_t j = i;
            while (j < k && e[2 * j + 1] == v) ++j;
            if (e[2 * i - 2] > v && v > e[2 * j + 1])
                return KpWitness{static_cast<int>(ci), static_cast<int>(i), static_cast<int>(j)};
        }
    }
    return std::nullopt;
}

// Coordinates attached to the orbit: c_{2i} -> (c_{2i}/2, ..., 1) and
// c_{2i+1} -> (c_{2i+1}/2 - 1, ..., 0), descending by 1 inside each string.
inline std::vector<HalfInt> infinitesimal_character(const Orbit& orbit) {
    require(orbit.kind == GroupKind::SymplecticC, ErrorCode::BadRequest, "type C only");
    std::vector<HalfInt> coords;
    const Columns& c = orbit.columns;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::int64_t top = (i % 2 == 0) ? c[i] : c[i] - 2;   // doubled first value
        std::int64_t low = (c[i] % 2 == 0) ? ((i % 2 == 0) ? 2 : 0) : 1;
        for (std::int64_t d = top; d >= low; d -= 2) coords.push_back(HalfInt::from_doubled(d));
    }
    std::sort(coords.begin(), coords.end(), [](HalfInt a, HalfInt b) { return b < a; });
    hard_assert(2 * static_cast<std::int64_t>(coords.size()) == orbit.size(),
                "infinitesimal character length mismatch");
    return coords;
}

// O^#: average each consecutive column pair and repeat it twice.
inline Orbit sharp_orbit(const Orbit& orbit) {
    require(is_generic(orbit), ErrorCode::NotGeneric, "sharp orbit defined for generic orbits");
    Columns out;
    for (std::size_t i = 0; i + 1 < orbit.columns.size(); i += 2) {
        Column avg = (orbit.columns[i] + orbit.columns[i + 1]) / 2;
        out.push_back(avg);
        out.push_back(avg);
    }
    Orbit sharp = validate(GroupKind::SymplecticC, std::move(out));
    hard_assert(!kp_normality(sharp).has_value(), "sharp orbit must be normal");
    return sharp;
}

// Closure order: a lies in the closure of b.  Dominance of row partitions.
inline bool closure_leq(const Orbit& a, const Orbit& b) {
    require(a.kind == b.kind, ErrorCode::SizeMismatch, "kind mismatch");
    require(a.size() == b.size(), ErrorCode::SizeMismatch, "orbit sizes differ");
    Columns ra = rows_of(a.columns), rb = rows_of(b.columns);
    std::size_t m = std::max(ra.size(), rb.size());
    Column sa = 0, sb = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sa += i < ra.size() ? ra[i] : 0;
        sb += i < rb.size() ? rb[i] : 0;
        if (sa > sb) return false;
    }
    return true;
}

struct GenericExtraction {
    Orbit generic;
    Columns extracted_pairs;  // value c for each extracted pair (c, c)
};

// Remove as few column pairs (c, c) as possible so the remainder is generic.
// Greedy: re-decompose, find the leftmost strictness violation, remove one
// pair at its value.  Reproduces the worked repeated-column examples and is
// locally minimal (putting back any extracted pair breaks genericity).
inline GenericExtraction extract_generic(const Orbit& orbit) {
    require(orbit.kind == GroupKind::SymplecticC, ErrorCode::BadRequest, "type C only");
    Columns cols = orbit.columns;
    Columns extracted;
    for (;;) {
        Orbit current = validate(GroupKind::SymplecticC, cols);
        auto chains = chain_decompose(current).chains;
        std::optional<Column> drop;
        for (const Chain& ch : chains) {
            if (ch.is_generic) continue;
            const auto& e = ch.entries;
            for (std::size_t i = 0; i + 1 < e.size(); i += 2) {
                if (e[i] == e[i + 1]) {
                    drop = e[i];
                    break;
                }
            }
            hard_assert(drop.has_value(), "non-generic chain without an equal pair");
            break;
        }
        if (!drop) return GenericExtraction{current, extracted};
        extracted.push_back(*drop);
        auto it = std::find(cols.begin(), cols.end(), *drop);
        hard_assert(it != cols.end() && *(it + 1) == *drop, "extraction pair not found");
        cols.erase(it, it + 2);
    }
}

// Add the column c_0 = c_1 + 2 to an orthogonal orbit, producing the
// symplectic partner used throughout the parameter transfer.
inline Orbit to_symplectic(const Orbit& q) {
    require(q.kind == GroupKind::OrthogonalBD, ErrorCode::InvalidOrthogonal, "expected an orthogonal orbit");
    Columns cols = q.columns;  // canonical: odd length
    Column head = cols.empty() ? 2 : cols.front() + 2;
    cols.insert(cols.begin(), head);
    return validate(GroupKind::SymplecticC, std::move(cols));
}

} // namespace nilorbit
