#pragma once

#include <map>
#include <vector>

#include "nilorbit/branching.hpp"
#include "nilorbit/params.hpp"
#include "nilorbit/weyl.hpp"

namespace nilorbit {

struct MultiplicityTable {
    std::map<KType, std::int64_t> entries;

    std::int64_t at(const KType& mu) const {
        auto it = entries.find(mu);
        return it == entries.end() ? 0 : it->second;
    }

    MultiplicityTable& operator+=(const MultiplicityTable& o) {
        for (const auto& [mu, m] : o.entries) entries[mu] = checked_add(at(mu), m);
        return *this;
    }

    friend bool operator==(const MultiplicityTable& a, const MultiplicityTable& b) {
        auto nonzero = [](const MultiplicityTable& t) {
            std::map<KType, std::int64_t> out;
            for (const auto& [mu, m] : t.entries)
                if (m != 0) out.emplace(mu, m);
            return out;
        };
        return nonzero(a) == nonzero(b);
    }
};

enum class KTypeSelect { Diminutive, UpToHeight, Explicit };

struct SpectrumRequest {
    KTypeSelect select = KTypeSelect::Diminutive;
    std::int64_t height = 0;
    std::vector<KType> explicit_list;

    static SpectrumRequest diminutive() { return SpectrumRequest{}; }
    static SpectrumRequest up_to_height(std::int64_t h) {
        require(h >= 0, ErrorCode::BadRequest, "height must be >= 0");
        return SpectrumRequest{KTypeSelect::UpToHeight, h, {}};
    }
    static SpectrumRequest explicit_ktypes(std::vector<KType> list) {
        return SpectrumRequest{KTypeSelect::Explicit, 0, std::move(list)};
    }
};

namespace detail {

inline void dominant_ktypes_rec(int rank, std::int64_t remaining, std::int64_t cap, KType& acc,
                                std::vector<KType>& out) {
    if (static_cast<int>(acc.size()) == rank) {
        out.push_back(acc);
        return;
    }
    for (std::int64_t v = std::min(cap, remaining); v >= 0; --v) {
        acc.push_back(v);
        dominant_ktypes_rec(rank, remaining - v, v, acc, out);
        acc.pop_back();
    }
}

} // namespace detail

// Dominant Sp(2n) K-types with |mu| <= height.
inline std::vector<KType> dominant_ktypes_up_to(int rank, std::int64_t height) {
    std::vector<KType> out;
    KType acc;
    detail::dominant_ktypes_rec(rank, height, height, acc, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<KType> requested_ktypes(int rank, const SpectrumRequest& req) {
    switch (req.select) {
        case KTypeSelect::Diminutive: return diminutive_ktypes(rank);
        case KTypeSelect::UpToHeight: return dominant_ktypes_up_to(rank, req.height);
        case KTypeSelect::Explicit: return req.explicit_list;
    }
    return {};
}

// K-spectrum of an induced module I(blocks) by Frobenius reciprocity:
// [I : V_mu] = [V_mu|_L : (x) block K-types].
inline MultiplicityTable induced_spectrum(const InducedForm& form, const SpectrumRequest& req) {
    int rank = static_cast<int>(form.rank());
    LeviShape shape;
    for (const auto& b : form.blocks) {
        shape.block_sizes.push_back(b.gl_size);
        shape.block_targets.push_back(b.block_ktype);
    }
    MultiplicityTable table;
    for (const KType& mu : requested_ktypes(rank, req))
        table.entries[mu] = branch_to_levi(rank, mu, shape);
    return table;
}

namespace detail {

// GL block sizes of the induced-from-trivial model for R(orbit): per chain,
// interior pair sizes then the outer pair average.
inline std::vector<std::int64_t> r_orbit_shape(const Orbit& orbit) {
    std::vector<std::int64_t> shape;
    for (const Chain& c : chain_decompose(orbit).chains) {
        const auto& e = c.entries;
        for (std::int64_t i = 1; i <= c.pair_count(); ++i)
            shape.push_back((e[static_cast<std::size_t>(2 * i - 1)] + e[static_cast<std::size_t>(2 * i)]) / 2);
        shape.push_back((e.front() + e.back()) / 2);
    }
    std::erase(shape, 0);
    return shape;
}

// GL block sizes for R(closure): consecutive column pair averages.
inline std::vector<std::int64_t> r_closure_shape(const Orbit& orbit) {
    std::vector<std::int64_t> shape;
    for (std::size_t i = 0; i + 1 < orbit.columns.size(); i += 2)
        shape.push_back((orbit.columns[i] + orbit.columns[i + 1]) / 2);
    std::erase(shape, 0);
    return shape;
}

} // namespace detail

inline MultiplicityTable r_orbit_spectrum(const Orbit& orbit, const SpectrumRequest& req) {
    require(is_generic(orbit), ErrorCode::NotGeneric, "R(orbit) spectrum model needs a generic orbit");
    require(req.select == KTypeSelect::Diminutive, ErrorCode::BadRequest,
            "R(orbit) spectrum is only modeled on diminutive K-types");
    return induced_spectrum(induced_from_trivial(detail::r_orbit_shape(orbit)), req);
}

inline MultiplicityTable r_closure_spectrum(const Orbit& orbit, const SpectrumRequest& req) {
    require(is_generic(orbit), ErrorCode::NotGeneric, "R(closure) spectrum model needs a generic orbit");
    require(req.select == KTypeSelect::Diminutive, ErrorCode::BadRequest,
            "R(closure) spectrum is only modeled on diminutive K-types");
    return induced_spectrum(induced_from_trivial(detail::r_closure_shape(orbit)), req);
}

inline MultiplicityTable sum_distinguished_spectrum(const Orbit& orbit, const SpectrumRequest& req) {
    require(is_generic(orbit), ErrorCode::NotGeneric, "distinguished modules indexed by Norm need genericity");
    NormSet ns = norm_set(orbit);
    MultiplicityTable total;
    for (const auto& member : ns.members)
        total += induced_spectrum(to_induced_form(distinguished_parameter(ns, member)), req);
    return total;
}

// Normality criterion on the spectrum level: R(orbit) and R(closure) agree
// on every diminutive K-type.
inline bool normality_by_spectrum(const Orbit& orbit) {
    SpectrumRequest req = SpectrumRequest::diminutive();
    return r_orbit_spectrum(orbit, req) == r_closure_spectrum(orbit, req);
}

// ---------------------------------------------------------------------------
// Character formula for B(closure) of an even generic orbit.
//
// Columns pair as (c_{2i}, c_{2i+1}), i = 0..p.  Each unswapped pair carries
// the coordinates mu_i = (c_{2i}/2..1; c_{2i+1}/2-1..0) with Weyl factor
// W(C_{c_{2i}/2}) x W(D_{c_{2i+1}/2}); swapping a pair (i in I) replaces them
// by nu_i = (c_{2i+1}/2-1..1; c_{2i}/2..0) with W(C_{c_{2i+1}/2-1}) x
// W(D_{c_{2i}/2+1}).  The multiplicity of V_mu is
//   (1/2^{p+1}) sum_I sum_{w in W_I} sgn(w) m_{V_mu}(lambda_I - w lambda_I).

struct CharSegment {
    RsType type = RsType::C;
    int rank = 0;
    std::vector<std::int64_t> coords;
};

struct CharTerm {
    std::vector<CharSegment> segments;
    std::vector<std::int64_t> lambda;  // concatenated segment coordinates
};

struct CharFormulaSpec {
    Orbit orbit;
    int rank = 0;
    std::vector<CharTerm> terms;  // one per subset I, in subset-mask order
};

inline CharFormulaSpec char_formula_spec(const Orbit& orbit) {
    require(is_generic(orbit), ErrorCode::NotGeneric, "character formula stated for even generic orbits");
    for (Column c : orbit.columns) {
        require(c % 2 == 0, ErrorCode::BadRequest, "character formula stated for even orbits");
        // a zero column breaks the swapped coordinate count (the pair only
        // admits one sign there), so the alternating-sum form excludes it
        require(c > 0, ErrorCode::BadRequest, "character formula needs positive columns");
    }

    CharFormulaSpec spec;
    spec.orbit = orbit;
    spec.rank = static_cast<int>(orbit.size() / 2);
    require(spec.rank <= 12, ErrorCode::RankBudgetExceeded,
            "character formula evaluation enumerates Weyl factors; rank capped at 12");
    const Columns& cols = orbit.columns;
    std::size_t pairs = cols.size() / 2;

    auto descending = [](std::int64_t from, std::int64_t to) {
        std::vector<std::int64_t> v;
        for (std::int64_t x = from; x >= to; --x) v.push_back(x);
        return v;
    };

    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        CharTerm term;
        for (std::size_t i = 0; i < pairs; ++i) {
            Column a = cols[2 * i], b = cols[2 * i + 1];
            CharSegment first, second;
            if (mask & (1u << i)) {
                first = {RsType::C, static_cast<int>(b / 2 - 1), descending(b / 2 - 1, 1)};
                second = {RsType::D, static_cast<int>(a / 2 + 1), descending(a / 2, 0)};
            } else {
                first = {RsType::C, static_cast<int>(a / 2), descending(a / 2, 1)};
                second = {RsType::D, static_cast<int>(b / 2), descending(b / 2 - 1, 0)};
            }
            if (first.rank < 0) first.rank = 0;
            hard_assert(static_cast<int>(first.coords.size()) == first.rank &&
                            static_cast<int>(second.coords.size()) == second.rank,
                        "segment rank mismatch");
            if (first.rank > 0) term.segments.push_back(first);
            if (second.rank > 0) term.segments.push_back(second);
            term.lambda.insert(term.lambda.end(), first.coords.begin(), first.coords.end());
            term.lambda.insert(term.lambda.end(), second.coords.begin(), second.coords.end());
        }
        hard_assert(static_cast<int>(term.lambda.size()) == spec.rank, "coordinates must fill the rank");
        spec.terms.push_back(std::move(term));
    }
    return spec;
}

inline std::int64_t char_formula_spectrum(const CharFormulaSpec& spec, const KType& mu) {
    const WeightSystem& ws = weight_system(RsType::C, spec.rank, wt_from_ints(mu));
    std::int64_t grand = 0;
    for (const CharTerm& term : spec.terms) {
        // enumerate W_I = product of segment groups
        std::vector<std::vector<WeylElement>> groups;
        for (const CharSegment& seg : term.segments) groups.push_back(weyl_elements(seg.type, seg.rank));

        std::vector<std::size_t> idx(groups.size(), 0);
        bool done = groups.empty();
        std::int64_t term_sum = 0;
        for (;;) {
            int sign = 1;
            std::vector<std::int64_t> gamma;
            gamma.reserve(term.lambda.size());
            for (std::size_t s = 0; s < groups.size(); ++s) {
                const WeylElement& w = groups[s][idx[s]];
                sign *= w.sign();
                const auto& coords = term.segments[s].coords;
                Wt img = w.apply(wt_from_ints(coords));
                for (std::size_t i = 0; i < coords.size(); ++i) gamma.push_back(coords[i] - img[i] / 2);
            }
            std::int64_t m = ws.mult(wt_from_ints(gamma));
            if (m != 0) term_sum = checked_add(term_sum, sign * m);

            if (done) break;
            std::size_t s = groups.size();
            bool wrapped = true;
            while (s-- > 0) {
                if (++idx[s] < groups[s].size()) {
                    wrapped = false;
                    break;
                }
                idx[s] = 0;
            }
            if (wrapped) break;
        }
        grand = checked_add(grand, term_sum);
    }
    std::int64_t denom = static_cast<std::int64_t>(spec.terms.size());  // 2^{p+1}
    require(grand % denom == 0, ErrorCode::NonIntegralResult,
            "character formula sum not divisible by 2^(p+1)");
    std::int64_t value = grand / denom;
    hard_assert(value >= 0, "character formula produced a negative multiplicity");
    return value;
}

inline MultiplicityTable char_formula_table(const CharFormulaSpec& spec, const SpectrumRequest& req) {
    MultiplicityTable t;
    for (const KType& mu : requested_ktypes(spec.rank, req)) t.entries[mu] = char_formula_spectrum(spec, mu);
    return t;
}

} // namespace nilorbit
