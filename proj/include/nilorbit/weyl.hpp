#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "nilorbit/error.hpp"
#include "nilorbit/half_int.hpp"

namespace nilorbit {

// Weights and roots live in the standard coordinates, stored DOUBLED so that
// half-integral weights stay exact integers.
using Wt = std::vector<std::int64_t>;

inline Wt wt_from_ints(const std::vector<std::int64_t>& v) {
    Wt w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = 2 * v[i];
    return w;
}

inline std::vector<std::int64_t> wt_to_ints(const Wt& w) {
    std::vector<std::int64_t> v(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        require(w[i] % 2 == 0, ErrorCode::NonIntegralResult, "weight is not integral");
        v[i] = w[i] / 2;
    }
    return v;
}

// 4<a,b> for doubled vectors (exact).
inline std::int64_t dot4(const Wt& a, const Wt& b) {
    hard_assert(a.size() == b.size(), "dot of mismatched lengths");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

inline Wt wt_add(const Wt& a, const Wt& b) {
    Wt r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Wt wt_sub(const Wt& a, const Wt& b) {
    Wt r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

enum class RsType { A, B, C, D };

struct RootSystem {
    RsType type = RsType::C;
    int rank = 0;
    std::vector<Wt> positive_roots;  // doubled
    Wt rho;                          // doubled

    static RootSystem make(RsType type, int rank) {
        require(rank >= 0, ErrorCode::BadRequest, "rank must be nonnegative");
        RootSystem rs;
        rs.type = type;
        rs.rank = rank;
        auto unit = [&](int i, std::int64_t v) {
            Wt w(static_cast<std::size_t>(rank), 0);
            w[static_cast<std::size_t>(i)] = v;
            return w;
        };
        for (int i = 0; i < rank; ++i) {
            for (int j = i + 1; j < rank; ++j) {
                Wt d = unit(i, 2);
                d[static_cast<std::size_t>(j)] = -2;
                rs.positive_roots.push_back(d);  // e_i - e_j
                if (type != RsType::A) {
                    Wt s = unit(i, 2);
                    s[static_cast<std::size_t>(j)] = 2;
                    rs.positive_roots.push_back(s);  // e_i + e_j
                }
            }
            if (type == RsType::B) rs.positive_roots.push_back(unit(i, 2));   // e_i
            if (type == RsType::C) rs.positive_roots.push_back(unit(i, 4));   // 2 e_i
        }
        rs.rho.assign(static_cast<std::size_t>(rank), 0);
        for (const Wt& a : rs.positive_roots)
            for (int i = 0; i < rank; ++i) rs.rho[static_cast<std::size_t>(i)] += a[static_cast<std::size_t>(i)] / 2;
        return rs;
    }

    std::size_t expected_root_count() const {
        auto n = static_cast<std::size_t>(rank);
        switch (type) {
            case RsType::A: return n * (n - 1) / 2;
            case RsType::B:
            case RsType::C: return n * n;
            case RsType::D: return n * (n - 1);
        }
        return 0;
    }
};

inline bool is_dominant(const RootSystem& rs, const Wt& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) return false;
    if (w.empty()) return true;
    switch (rs.type) {
        case RsType::A: return true;
        case RsType::B:
        case RsType::C: return w.back() >= 0;
        case RsType::D: return w.size() < 2 || w[w.size() - 2] >= std::llabs(w.back());
    }
    return false;
}

inline Wt dominantize(const RootSystem& rs, Wt w) {
    switch (rs.type) {
        case RsType::A:
            std::sort(w.begin(), w.end(), std::greater<>());
            return w;
        case RsType::B:
        case RsType::C: {
            for (auto& x : w) x = std::llabs(x);
            std::sort(w.begin(), w.end(), std::greater<>());
            return w;
        }
        case RsType::D: {
            int negatives = 0;
            bool has_zero = false;
            for (auto& x : w) {
                if (x < 0) {
                    ++negatives;
                    x = -x;
                }
                if (x == 0) has_zero = true;
            }
            std::sort(w.begin(), w.end(), std::greater<>());
            if (negatives % 2 != 0 && !has_zero && !w.empty()) w.back() = -w.back();
            return w;
        }
    }
    return w;
}

// Coefficients of v over the simple roots; empty result if v is not a
// nonnegative integral combination.  v is doubled.
inline bool in_positive_root_cone(const RootSystem& rs, const Wt& v) {
    const int n = rs.rank;
    if (n == 0) return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
    std::vector<std::int64_t> partial(static_cast<std::size_t>(n), 0);
    std::int64_t s = 0;
    for (int i = 0; i < n; ++i) {
        s += v[static_cast<std::size_t>(i)];
        partial[static_cast<std::size_t>(i)] = s;  // doubled partial sums
    }
    auto nonneg_even = [](std::int64_t x) { return x >= 0 && x % 2 == 0; };
    switch (rs.type) {
        case RsType::A: {
            for (int i = 0; i < n - 1; ++i)
                if (!nonneg_even(partial[static_cast<std::size_t>(i)])) return false;
            return partial[static_cast<std::size_t>(n - 1)] == 0;
        }
        case RsType::B: {
            for (int i = 0; i < n; ++i)
                if (!nonneg_even(partial[static_cast<std::size_t>(i)])) return false;
            return true;
        }
        case RsType::C: {
            for (int i = 0; i < n - 1; ++i)
                if (!nonneg_even(partial[static_cast<std::size_t>(i)])) return false;
            std::int64_t last = partial[static_cast<std::size_t>(n - 1)];
            return last >= 0 && last % 4 == 0;
        }
        case RsType::D: {
            for (int i = 0; i < n - 2; ++i)
                if (!nonneg_even(partial[static_cast<std::size_t>(i)])) return false;
            std::int64_t s_prev = (n >= 2) ? partial[static_cast<std::size_t>(n - 2)] : 0;
            std::int64_t vn = v[static_cast<std::size_t>(n - 1)];
            std::int64_t c1 = s_prev - vn, c2 = s_prev + vn;  // 4x the coefficients
            return c1 >= 0 && c2 >= 0 && c1 % 4 == 0 && c2 % 4 == 0;
        }
    }
    return false;
}

// Height of v = sum of its simple-root coefficients (v assumed in the cone).
inline std::int64_t cone_height(const RootSystem& rs, const Wt& v) {
    const int n = rs.rank;
    std::int64_t h = 0, s = 0;
    switch (rs.type) {
        case RsType::A:
            for (int i = 0; i < n - 1; ++i) {
                s += v[static_cast<std::size_t>(i)];
                h += s / 2;
            }
            return h;
        case RsType::B:
            for (int i = 0; i < n; ++i) {
                s += v[static_cast<std::size_t>(i)];
                h += s / 2;
            }
            return h;
        case RsType::C: {
            for (int i = 0; i < n - 1; ++i) {
                s += v[static_cast<std::size_t>(i)];
                h += s / 2;
            }
            s += v[static_cast<std::size_t>(n - 1)];
            return h + s / 4;
        }
        case RsType::D: {
            for (int i = 0; i < n - 2; ++i) {
                s += v[static_cast<std::size_t>(i)];
                h += s / 2;
            }
            std::int64_t s_prev = (n >= 2) ? s + v[static_cast<std::size_t>(n - 2)] : 0;
            std::int64_t vn = (n >= 1) ? v[static_cast<std::size_t>(n - 1)] : 0;
            return h + (s_prev - vn) / 4 + (s_prev + vn) / 4;
        }
    }
    return h;
}

// Explicit Weyl group elements as (permutation, sign mask); used only for
// the small factors of the character formula and Weyl orbit expansion.
struct WeylElement {
    std::vector<int> perm;   // image positions: out[i] = sign_i * v[perm[i]]
    std::uint32_t flips = 0; // bit i set: negate coordinate i after permuting

    Wt apply(const Wt& v) const {
        Wt out(perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) {
            out[i] = v[static_cast<std::size_t>(perm[i])];
            if (flips & (1u << i)) out[i] = -out[i];
        }
        return out;
    }

    int sign() const {
        int s = 1;
        std::vector<bool> seen(perm.size(), false);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            if (seen[i]) continue;
            std::size_t cycle = 0;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
                seen[j] = true;
                ++cycle;
            }
            if (cycle % 2 == 0) s = -s;
        }
        for (std::size_t i = 0; i < perm.size(); ++i)
            if (flips & (1u << i)) s = -s;
        return s;
    }
};

inline std::vector<WeylElement> weyl_elements(RsType type, int rank) {
    require(rank >= 0 && rank <= 12, ErrorCode::BadRequest, "explicit Weyl enumeration limited to small rank");
    std::vector<WeylElement> out;
    std::vector<int> perm(static_cast<std::size_t>(rank));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (type == RsType::A) {
            out.push_back(WeylElement{perm, 0});
            continue;
        }
        std::uint32_t limit = 1u << rank;
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            if (type == RsType::D && (__builtin_popcount(mask) % 2) != 0) continue;
            out.push_back(WeylElement{perm, mask});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// All distinct vectors in the Weyl orbit of a dominant weight.
inline std::vector<Wt> weyl_orbit(const RootSystem& rs, const Wt& dominant) {
    std::vector<Wt> sorted_perms;
    {
        Wt base = dominant;
        std::sort(base.begin(), base.end());
        do {
            sorted_perms.push_back(base);
        } while (std::next_permutation(base.begin(), base.end()));
    }
    if (rs.type == RsType::A) return sorted_perms;

    std::vector<Wt> out;
    for (const Wt& p : sorted_perms) {
        std::vector<std::size_t> nonzero;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) nonzero.push_back(i);
        // with a zero coordinate present, a D-type flip pair can absorb the
        // parity, so every sign pattern on the nonzero entries occurs
        bool has_zero = nonzero.size() < p.size();
        std::uint64_t limit = 1ull << nonzero.size();
        for (std::uint64_t mask = 0; mask < limit; ++mask) {
            if (rs.type == RsType::D && !has_zero && (__builtin_popcountll(mask) % 2) != 0) continue;
            Wt v = p;
            for (std::size_t b = 0; b < nonzero.size(); ++b)
                if (mask & (1ull << b)) v[nonzero[b]] = -v[nonzero[b]];
            out.push_back(std::move(v));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace nilorbit
