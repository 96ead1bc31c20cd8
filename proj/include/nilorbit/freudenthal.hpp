#pragma once

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

#include "nilorbit/weyl.hpp"

namespace nilorbit {

// Full weight data of one irreducible: multiplicities on dominant weights
// via the Freudenthal recursion, expanded over Weyl orbits on demand.
struct WeightSystem {
    RootSystem sys;
    Wt highest;
    std::map<Wt, std::int64_t> dominant_mults;  // zero entries kept out
    std::map<Wt, std::int64_t> full;            // every weight with multiplicity

    std::int64_t mult(const Wt& w) const {
        auto it = dominant_mults.find(dominantize(sys, w));
        return it == dominant_mults.end() ? 0 : it->second;
    }

    std::int64_t dimension_by_sum() const {
        std::int64_t d = 0;
        for (const auto& [w, m] : full) d = checked_add(d, m);
        return d;
    }
};

namespace detail {

// Dominant candidates mu with highest - mu in the positive root cone.
inline void dominant_candidates_rec(const RootSystem& rs, const Wt& highest, Wt& acc, std::size_t pos,
                                    std::vector<Wt>& out) {
    const auto n = static_cast<std::size_t>(rs.rank);
    if (pos == n) {
        if (rs.type == RsType::D && !acc.empty() && acc.back() > 0) {
            Wt flipped = acc;
            flipped.back() = -flipped.back();
            if (in_positive_root_cone(rs, wt_sub(highest, flipped))) out.push_back(flipped);
        }
        if (in_positive_root_cone(rs, wt_sub(highest, acc))) out.push_back(acc);
        return;
    }
    std::int64_t cap = pos == 0 ? highest.front() : acc[pos - 1];
    std::int64_t lo = rs.type == RsType::A ? highest.back() : 0;
    // the integrality class of `highest` is preserved across its weights
    std::int64_t parity = ((highest.front() % 2) + 2) % 2;
    for (std::int64_t v = cap; v >= lo; --v) {
        if (((v % 2 + 2) % 2) != parity) continue;
        acc[pos] = v;
        dominant_candidates_rec(rs, highest, acc, pos + 1, out);
    }
}

inline std::vector<Wt> dominant_candidates(const RootSystem& rs, const Wt& highest) {
    std::vector<Wt> out;
    if (rs.rank == 0) {
        out.push_back(Wt{});
        return out;
    }
    Wt acc(static_cast<std::size_t>(rs.rank), 0);
    dominant_candidates_rec(rs, highest, acc, 0, out);
    return out;
}

} // namespace detail

inline WeightSystem compute_weight_system(RsType type, int rank, const Wt& highest) {
    RootSystem rs = RootSystem::make(type, rank);
    require(static_cast<int>(highest.size()) == rank, ErrorCode::ShapeMismatch, "weight length != rank");
    require(is_dominant(rs, highest), ErrorCode::NotDominant, "highest weight not dominant");

    WeightSystem ws;
    ws.sys = rs;
    ws.highest = highest;

    std::vector<Wt> cands = detail::dominant_candidates(rs, highest);
    std::sort(cands.begin(), cands.end(), [&](const Wt& a, const Wt& b) {
        std::int64_t ha = cone_height(rs, wt_sub(highest, a));
        std::int64_t hb = cone_height(rs, wt_sub(highest, b));
        if (ha != hb) return ha < hb;
        return a > b;
    });

    const Wt lam_rho = wt_add(highest, rs.rho);
    const std::int64_t norm_lam_rho = dot4(lam_rho, lam_rho);
    const std::int64_t norm_lam = dot4(highest, highest);

    for (const Wt& mu : cands) {
        if (mu == highest) {
            ws.dominant_mults[mu] = 1;
            continue;
        }
        std::int64_t num = 0;
        for (const Wt& alpha : rs.positive_roots) {
            for (std::int64_t k = 1;; ++k) {
                Wt nu = mu;
                for (std::size_t i = 0; i < nu.size(); ++i) nu[i] += k * alpha[i];
                std::int64_t norm_nu = dot4(nu, nu);
                std::int64_t nu_alpha = dot4(nu, alpha);
                if (norm_nu > norm_lam) {
                    if (nu_alpha >= 0) break;  // norm is increasing from here on
                    continue;
                }
                auto it = ws.dominant_mults.find(dominantize(rs, nu));
                if (it != ws.dominant_mults.end())
                    num = checked_add(num, checked_mul(2 * it->second, nu_alpha));
            }
        }
        if (num == 0) continue;
        Wt mu_rho = wt_add(mu, rs.rho);
        std::int64_t den = norm_lam_rho - dot4(mu_rho, mu_rho);
        hard_assert(den > 0, "Freudenthal denominator must be positive");
        hard_assert(num % den == 0, "Freudenthal division must be exact");
        std::int64_t m = num / den;
        hard_assert(m >= 0, "negative weight multiplicity");
        if (m > 0) ws.dominant_mults[mu] = m;
    }

    for (const auto& [mu, m] : ws.dominant_mults)
        for (const Wt& w : weyl_orbit(rs, mu)) ws.full[w] = m;
    return ws;
}

// Memoized access; safe under concurrent readers.
inline const WeightSystem& weight_system(RsType type, int rank, const Wt& highest) {
    static std::map<std::tuple<RsType, int, Wt>, WeightSystem> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_tuple(type, rank, highest);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_weight_system(type, rank, highest)).first;
    return it->second;
}

inline std::int64_t weight_multiplicity(RsType type, int rank, const Wt& highest, const Wt& target) {
    return weight_system(type, rank, highest).mult(target);
}

// Weyl dimension formula, exact.
inline std::int64_t dimension(RsType type, int rank, const Wt& highest) {
    RootSystem rs = RootSystem::make(type, rank);
    require(static_cast<int>(highest.size()) == rank, ErrorCode::ShapeMismatch, "weight length != rank");
    require(is_dominant(rs, highest), ErrorCode::NotDominant, "highest weight not dominant");
    Wt lam_rho = wt_add(highest, rs.rho);
    auto gcd128 = [](__int128 a, __int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b) {
            __int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    __int128 num = 1, den = 1;
    for (const Wt& a : rs.positive_roots) {
        num *= dot4(lam_rho, a);
        den *= dot4(rs.rho, a);
        __int128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        hard_assert(num < (__int128{1} << 120), "dimension overflow");
    }
    hard_assert(den != 0 && num % den == 0, "Weyl dimension must be integral");
    __int128 d = num / den;
    hard_assert(d > 0 && d <= INT64_MAX, "dimension out of range");
    return static_cast<std::int64_t>(d);
}

inline std::vector<std::vector<std::int64_t>> diminutive_ktypes(int n) {
    require(n >= 1, ErrorCode::BadRequest, "rank must be >= 1");
    std::vector<std::vector<std::int64_t>> out;
    for (int k = 0; k <= n; ++k) {
        std::vector<std::int64_t> mu(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < k; ++i) mu[static_cast<std::size_t>(i)] = 1;
        out.push_back(std::move(mu));
    }
    return out;
}

} // namespace nilorbit
