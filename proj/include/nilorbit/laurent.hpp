#pragma once

#include <cstdlib>
#include <map>
#include <mutex>
#include <vector>

#include "nilorbit/branching.hpp"
#include "nilorbit/weyl.hpp"

namespace nilorbit {

// Exact multivariate Laurent polynomial: exponent vector -> coefficient.
struct Laurent {
    using Expo = std::vector<std::int32_t>;
    std::map<Expo, std::int64_t> terms;

    static Laurent zero() { return Laurent{}; }
    static Laurent one(std::size_t nvars) {
        Laurent p;
        p.terms[Expo(nvars, 0)] = 1;
        return p;
    }
    static Laurent monomial(Expo e, std::int64_t c) {
        Laurent p;
        if (c != 0) p.terms[std::move(e)] = c;
        return p;
    }

    bool empty() const { return terms.empty(); }

    void add_term(const Expo& e, std::int64_t c) {
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms.emplace(e, c);
        } else {
            it->second = checked_add(it->second, c);
            if (it->second == 0) terms.erase(it);
        }
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }

    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.terms) add_term(e, -c);
        return *this;
    }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ea, ca] : a.terms) {
            for (const auto& [eb, cb] : b.terms) {
                Expo e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, checked_mul(ca, cb));
            }
        }
        return r;
    }

    std::int64_t constant_coefficient(std::size_t nvars) const {
        auto it = terms.find(Expo(nvars, 0));
        return it == terms.end() ? 0 : it->second;
    }

    // Exact division; the divisor's lex-leading coefficient must be a unit
    // and the division must terminate with zero remainder.
    friend Laurent divide_exact(Laurent num, const Laurent& den) {
        hard_assert(!den.terms.empty(), "division by zero polynomial");
        auto lead = std::prev(den.terms.end());
        hard_assert(lead->second == 1 || lead->second == -1, "divisor leading coefficient must be a unit");
        Laurent q;
        std::int64_t guard = 0;
        while (!num.terms.empty()) {
            hard_assert(++guard < 20'000'000, "division does not terminate");
            auto top = std::prev(num.terms.end());
            Expo shift(top->first.size());
            for (std::size_t i = 0; i < shift.size(); ++i)
                shift[i] = top->first[i] - lead->first[i];
            std::int64_t coeff = top->second / lead->second;
            hard_assert(coeff * lead->second == top->second, "non-exact division step");
            q.add_term(shift, coeff);
            for (const auto& [e, c] : den.terms) {
                Expo moved(e.size());
                for (std::size_t i = 0; i < e.size(); ++i) moved[i] = e[i] + shift[i];
                num.add_term(moved, -checked_mul(c, coeff));
            }
        }
        return q;
    }
};

namespace detail {

inline Laurent::Expo to_expo(const std::vector<std::int64_t>& v) {
    Laurent::Expo e(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        hard_assert(v[i] >= INT32_MIN && v[i] <= INT32_MAX, "exponent out of range");
        e[i] = static_cast<std::int32_t>(v[i]);
    }
    return e;
}

// Alternant sum_w sgn(w) x^{w(v)} for the full signed/plain permutation group.
inline Laurent alternant(RsType type, int rank, const std::vector<std::int64_t>& v) {
    Laurent p;
    for (const WeylElement& w : weyl_elements(type, rank)) {
        Wt img = w.apply(wt_from_ints(v));
        p.add_term(to_expo(wt_to_ints(img)), w.sign());
    }
    return p;
}

} // namespace detail

// Symplectic character chi_mu(x_1..x_n) via the Weyl character formula with
// exact alternant division.
inline Laurent symplectic_character_compute(int rank, const KType& mu) {
    RootSystem rs = RootSystem::make(RsType::C, rank);
    require(is_dominant(rs, wt_from_ints(mu)), ErrorCode::NotDominant, "K-type not dominant");
    std::vector<std::int64_t> rho = wt_to_ints(rs.rho);
    std::vector<std::int64_t> shifted(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) shifted[i] = mu[i] + rho[i];
    Laurent num = detail::alternant(RsType::C, rank, shifted);
    Laurent den = detail::alternant(RsType::C, rank, rho);
    return divide_exact(std::move(num), den);
}

inline const Laurent& symplectic_character(int rank, const KType& mu) {
    static std::map<std::pair<int, KType>, Laurent> cache;
    static std::mutex mutex;
    auto key = std::make_pair(rank, mu);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Laurent computed = symplectic_character_compute(rank, mu);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(std::move(key), std::move(computed)).first->second;
}

// Schur polynomial of a GL block embedded in n ambient variables
// [offset, offset + a); invert = true evaluates at inverse variables.
inline Laurent schur_in_block(int nvars, int offset, int a, const GlWeight& tau, bool invert) {
    std::vector<std::int64_t> rho(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) rho[static_cast<std::size_t>(i)] = a - 1 - i;
    std::vector<std::int64_t> shifted(static_cast<std::size_t>(a));
    for (int i = 0; i < a; ++i) shifted[static_cast<std::size_t>(i)] = tau[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(i)];

    auto embed = [&](const std::vector<std::int64_t>& local, int sign) {
        Laurent::Expo e(static_cast<std::size_t>(nvars), 0);
        for (int i = 0; i < a; ++i) {
            std::int64_t x = sign * local[static_cast<std::size_t>(i)];
            hard_assert(x >= INT32_MIN && x <= INT32_MAX, "exponent out of range");
            e[static_cast<std::size_t>(offset + i)] = static_cast<std::int32_t>(x);
        }
        return e;
    };

    Laurent num, den;
    std::vector<int> perm(static_cast<std::size_t>(a));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        WeylElement w{perm, 0};
        std::vector<std::int64_t> img_n(static_cast<std::size_t>(a)), img_d(static_cast<std::size_t>(a));
        for (int i = 0; i < a; ++i) {
            img_n[static_cast<std::size_t>(i)] = shifted[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
            img_d[static_cast<std::size_t>(i)] = rho[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        }
        num.add_term(embed(img_n, invert ? -1 : 1), w.sign());
        den.add_term(embed(img_d, invert ? -1 : 1), w.sign());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return divide_exact(std::move(num), den);
}

inline std::int64_t oracle_rank_budget() {
    if (const char* env = std::getenv("NILORBIT_ORACLE_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 8) return v;
    }
    return 5;
}

// Independent multiplicity oracle: Weyl integration over the block subgroup,
// by exact constant-term extraction.
//   [V_mu|_L : (x)tau_i] = (1/|W_L|) CT( chi_mu * prod_i s_{tau_i}(x^-1)
//                                        * prod_{roots of L} (1 - x^alpha) ).
inline std::int64_t constant_term(int rank, const KType& mu, const LeviShape& shape) {
    require(rank <= oracle_rank_budget(), ErrorCode::RankBudgetExceeded,
            "oracle limited to rank <= " + std::to_string(oracle_rank_budget()));
    std::int64_t total = 0;
    for (auto s : shape.block_sizes) total += s;
    require(total == rank, ErrorCode::ShapeMismatch, "block sizes must sum to the rank");
    require(shape.block_targets.size() == shape.block_sizes.size(), ErrorCode::ShapeMismatch,
            "one target per block required");

    const Laurent& chi = symplectic_character(rank, mu);

    // g = prod over blocks of s_tau(x^-1) * prod_{block roots} (1 - x^alpha);
    // then CT(chi * g) is a plain coefficient pairing.
    Laurent g = Laurent::one(static_cast<std::size_t>(rank));
    int offset = 0;
    std::int64_t order = 1;
    for (std::size_t b = 0; b < shape.block_sizes.size(); ++b) {
        int a = static_cast<int>(shape.block_sizes[b]);
        require(static_cast<int>(shape.block_targets[b].size()) == a, ErrorCode::ShapeMismatch,
                "block target length mismatch");
        Laurent gb = schur_in_block(rank, offset, a, shape.block_targets[b], true);
        for (int i = 0; i < a; ++i) {
            for (int j = 0; j < a; ++j) {
                if (i == j) continue;
                Laurent root_factor = Laurent::one(static_cast<std::size_t>(rank));
                Laurent::Expo e(static_cast<std::size_t>(rank), 0);
                e[static_cast<std::size_t>(offset + i)] = 1;
                e[static_cast<std::size_t>(offset + j)] = -1;
                root_factor.add_term(e, -1);
                gb = gb * root_factor;
            }
        }
        g = g * gb;
        for (int i = 2; i <= a; ++i) order = checked_mul(order, i);
        offset += a;
    }

    std::int64_t ct = 0;
    for (const auto& [e, c] : chi.terms) {
        Laurent::Expo neg(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
        auto it = g.terms.find(neg);
        if (it != g.terms.end()) ct = checked_add(ct, checked_mul(c, it->second));
    }
    hard_assert(ct % order == 0, "constant term must divide the Weyl group order");
    std::int64_t m = ct / order;
    hard_assert(m >= 0, "negative oracle multiplicity");
    return m;
}

} // namespace nilorbit
