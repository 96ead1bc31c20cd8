#pragma once

#include <chrono>
#include <random>
#include <sstream>
#include <string>

#include "nilorbit/enumerate.hpp"
#include "nilorbit/format.hpp"
#include "nilorbit/laurent.hpp"
#include "nilorbit/spectra.hpp"

namespace nilorbit {

struct VerifyResult {
    std::string name;
    bool ok = true;
    std::int64_t cases = 0;
    std::string detail;
    double seconds = 0.0;

    void record(bool passed, const std::string& what) {
        ++cases;
        if (!passed && ok) {
            ok = false;
            detail = what;
        }
    }
};

namespace detail {

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

inline std::vector<std::vector<std::int64_t>> compositions_of(std::int64_t n) {
    std::vector<std::vector<std::int64_t>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (std::int64_t first = 1; first <= n; ++first)
        for (auto rest : compositions_of(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

inline std::vector<GlWeight> small_block_targets(std::int64_t a) {
    std::vector<GlWeight> out;
    for (std::int64_t ones = 0; ones <= a; ++ones)
        for (std::int64_t negs = 0; ones + negs <= a; ++negs) {
            GlWeight t(static_cast<std::size_t>(a), 0);
            for (std::int64_t i = 0; i < ones; ++i) t[static_cast<std::size_t>(i)] = 1;
            for (std::int64_t i = 0; i < negs; ++i) t[static_cast<std::size_t>(a - 1 - i)] = -1;
            out.push_back(std::move(t));
        }
    return out;
}

} // namespace detail

// The two multiplicity routes agree: exhaustive small ranks, randomized at
// the oracle budget rank.
inline VerifyResult verify_oracle(int exhaustive_max_rank = 4, int random_rank = 5,
                                  int random_samples = 200, std::uint64_t seed = 20240801) {
    detail::Stopwatch clock;
    VerifyResult r;
    r.name = "oracle";
    for (int rank = 1; rank <= exhaustive_max_rank; ++rank) {
        for (const auto& mu : diminutive_ktypes(rank)) {
            for (const auto& sizes : detail::compositions_of(rank)) {
                const auto& decomp = levi_decomposition(rank, mu, sizes);
                std::vector<std::vector<GlWeight>> per_block;
                for (auto a : sizes) per_block.push_back(detail::small_block_targets(a));
                std::vector<std::size_t> idx(sizes.size(), 0);
                bool done = false;
                while (!done) {
                    BlockTuple targets;
                    for (std::size_t b = 0; b < sizes.size(); ++b) targets.push_back(per_block[b][idx[b]]);
                    auto it = decomp.find(targets);
                    std::int64_t lhs = it == decomp.end() ? 0 : it->second;
                    std::int64_t rhs = constant_term(rank, mu, LeviShape{sizes, targets});
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "rank " << rank << " mu " << columns_to_string(mu) << ": branch " << lhs
                           << " != oracle " << rhs;
                        r.record(false, os.str());
                    } else {
                        r.record(true, "");
                    }
                    done = true;
                    for (std::size_t b = sizes.size(); b-- > 0;) {
                        if (++idx[b] < per_block[b].size()) {
                            done = false;
                            break;
                        }
                        idx[b] = 0;
                    }
                }
            }
        }
    }

    std::mt19937_64 rng(seed);
    auto shapes = detail::compositions_of(random_rank);
    auto dims = diminutive_ktypes(random_rank);
    for (int s = 0; s < random_samples; ++s) {
        const auto& mu = dims[rng() % dims.size()];
        const auto& sizes = shapes[rng() % shapes.size()];
        BlockTuple targets;
        for (auto a : sizes) {
            auto choices = detail::small_block_targets(a);
            targets.push_back(choices[rng() % choices.size()]);
        }
        std::int64_t lhs = branch_to_levi(random_rank, mu, LeviShape{sizes, targets});
        std::int64_t rhs = constant_term(random_rank, mu, LeviShape{sizes, targets});
        if (lhs != rhs) {
            std::ostringstream os;
            os << "random sample " << s << " mu " << columns_to_string(mu) << ": branch " << lhs
               << " != oracle " << rhs;
            r.record(false, os.str());
        } else {
            r.record(true, "");
        }
    }
    r.seconds = clock.seconds();
    return r;
}

// Sum of distinguished modules = paired-column induced module = R(sharp
// closure), exactly, on all diminutive K-types, for every generic orbit.
inline VerifyResult verify_distinguished_sum(Column max_size = 16) {
    detail::Stopwatch clock;
    VerifyResult r;
    r.name = "distinguished-sum";
    SpectrumRequest req = SpectrumRequest::diminutive();
    for (Column size = 2; size <= max_size; size += 2) {
        for (const Orbit& o : enumerate_generic_orbits_c(size)) {
            MultiplicityTable sum = sum_distinguished_spectrum(o, req);
            MultiplicityTable paired = induced_spectrum(induced_from_trivial(detail::r_closure_shape(o)), req);
            MultiplicityTable sharp = induced_spectrum(
                induced_from_trivial(detail::r_orbit_shape(sharp_orbit(o))), req);
            bool ok = sum == paired && paired == sharp;
            if (!ok) {
                r.record(false, "mismatch at orbit " + columns_to_string(o.columns));
            } else {
                r.record(true, "");
            }
        }
    }
    r.seconds = clock.seconds();
    return r;
}

// Spectrum normality criterion agrees with the chain criterion.
inline VerifyResult verify_normality_equivalence(Column max_size = 16) {
    detail::Stopwatch clock;
    VerifyResult r;
    r.name = "normality-equivalence";
    for (Column size = 2; size <= max_size; size += 2) {
        for (const Orbit& o : enumerate_generic_orbits_c(size)) {
            bool spectral = normality_by_spectrum(o);
            bool chain = !kp_normality(o).has_value();
            if (spectral != chain) {
                r.record(false, "disagreement at orbit " + columns_to_string(o.columns));
            } else {
                r.record(true, "");
            }
        }
    }
    r.seconds = clock.seconds();
    return r;
}

// Character formula for (6,4,4,2): term structure, nonnegativity and
// integrality, and equality with the distinguished sum on all diminutive
// K-types and all dominant mu with |mu| <= 2.
inline VerifyResult verify_char_formula() {
    detail::Stopwatch clock;
    VerifyResult r;
    r.name = "char-formula";
    Orbit o = validate(GroupKind::SymplecticC, {6, 4, 4, 2});
    CharFormulaSpec spec = char_formula_spec(o);

    auto profile = [](const CharTerm& t) {
        std::string s;
        for (const auto& seg : t.segments)
            s += (seg.type == RsType::C ? "C" : "D") + std::to_string(seg.rank);
        return s;
    };
    std::vector<std::string> expected = {"C3D2C2D1", "C1D4C2D1", "C3D2D3", "C1D4D3"};
    r.record(spec.terms.size() == 4, "expected four terms");
    for (std::size_t i = 0; i < spec.terms.size() && i < 4; ++i)
        r.record(profile(spec.terms[i]) == expected[i],
                 "term " + std::to_string(i) + " profile " + profile(spec.terms[i]));

    std::vector<KType> mus = diminutive_ktypes(spec.rank);
    for (const KType& mu : dominant_ktypes_up_to(spec.rank, 2)) mus.push_back(mu);
    std::sort(mus.begin(), mus.end());
    mus.erase(std::unique(mus.begin(), mus.end()), mus.end());

    NormSet ns = norm_set(o);
    for (const KType& mu : mus) {
        std::int64_t lhs = char_formula_spectrum(spec, mu);  // throws if not divisible by 4
        std::int64_t rhs = 0;
        for (const auto& member : ns.members) {
            InducedForm form = to_induced_form(distinguished_parameter(ns, member));
            LeviShape shape;
            for (const auto& b : form.blocks) {
                shape.block_sizes.push_back(b.gl_size);
                shape.block_targets.push_back(b.block_ktype);
            }
            rhs = checked_add(rhs, branch_to_levi(spec.rank, mu, shape));
        }
        if (lhs != rhs) {
            r.record(false, "mu " + columns_to_string(mu) + ": formula " + std::to_string(lhs) +
                                " != sum " + std::to_string(rhs));
        } else {
            r.record(true, "");
        }
        if (mu == KType(static_cast<std::size_t>(spec.rank), 0))
            r.record(lhs == 1, "trivial K-type multiplicity must be 1");
    }
    r.seconds = clock.seconds();
    return r;
}

// Structural invariants: chain round trip, uniform parity, parameter counts,
// unique distinguished parameter, Norm inside the closure interval, rank
// conservation, Freudenthal totals, spectrum monotonicity.
inline VerifyResult verify_invariants(Column max_size = 16, Column spectra_max_size = 16) {
    detail::Stopwatch clock;
    VerifyResult r;
    r.name = "invariants";
    for (Column size = 2; size <= max_size; size += 2) {
        for (const Orbit& o : enumerate_orbits_c(size)) {
            Columns glued;
            for (const Chain& c : chain_decompose(o).chains) {
                for (Column b : c.entries) {
                    r.record(parity_of(b) == c.parity, "chain parity at " + columns_to_string(o.columns));
                    glued.push_back(b);
                }
            }
            r.record(glued == o.columns, "chain round trip at " + columns_to_string(o.columns));
        }
        for (const Orbit& o : enumerate_generic_orbits_c(size)) {
            bool even = true;
            for (Column c : o.columns)
                if (c % 2 != 0) even = false;
            NormSet ns = norm_set(o);
            Orbit minimum = norm_minimum(o);
            for (const auto& m : ns.members) {
                r.record(closure_leq(m.orbit, o) && closure_leq(minimum, m.orbit),
                         "Norm interval at " + columns_to_string(o.columns));
                auto params = attach_parameters(ns, m);
                if (even)
                    r.record(params.size() == (std::size_t{1} << lusztig_quotient_rank(m.orbit)),
                             "parameter count at " + columns_to_string(m.orbit.columns));
                AttachedParameter d = distinguished_parameter(ns, m);
                std::size_t hits = 0;
                for (const auto& p : params) {
                    if (p == d) ++hits;
                    r.record(to_induced_form(p).rank() == o.size() / 2,
                             "rank conservation at " + columns_to_string(m.orbit.columns));
                }
                r.record(hits == 1, "unique distinguished parameter at " + columns_to_string(m.orbit.columns));
            }
        }
    }
    for (int rank = 1; rank <= 4; ++rank) {
        for (const auto& mu : diminutive_ktypes(rank)) {
            const WeightSystem& ws = weight_system(RsType::C, rank, wt_from_ints(mu));
            r.record(ws.dimension_by_sum() == dimension(RsType::C, rank, wt_from_ints(mu)),
                     "Freudenthal total at rank " + std::to_string(rank));
        }
    }
    SpectrumRequest req = SpectrumRequest::diminutive();
    for (Column size = 2; size <= spectra_max_size; size += 2) {
        for (const Orbit& o : enumerate_generic_orbits_c(size)) {
            MultiplicityTable ro = r_orbit_spectrum(o, req);
            MultiplicityTable rc = r_closure_spectrum(o, req);
            for (const auto& [mu, m] : rc.entries)
                r.record(m <= ro.at(mu), "monotonicity at " + columns_to_string(o.columns));
            r.record(rc.at(KType(static_cast<std::size_t>(o.size() / 2), 0)) == 1,
                     "trivial multiplicity at " + columns_to_string(o.columns));
        }
    }
    r.seconds = clock.seconds();
    return r;
}

} // namespace nilorbit
