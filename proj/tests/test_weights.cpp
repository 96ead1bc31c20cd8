#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "nilorbit/branching.hpp"
#include "nilorbit/freudenthal.hpp"
#include "nilorbit/laurent.hpp"

using namespace nilorbit;

namespace {

Wt W(const std::vector<std::int64_t>& v) { return wt_from_ints(v); }

// Independent oracle for the C_2 five-dimensional module: weights of the
// second exterior power of the standard module minus one trivial summand.
std::map<std::vector<std::int64_t>, std::int64_t> c2_lambda2_reduced() {
    std::vector<std::vector<std::int64_t>> basis = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    std::map<std::vector<std::int64_t>, std::int64_t> mult;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            ++mult[{basis[i][0] + basis[j][0], basis[i][1] + basis[j][1]}];
    --mult[{0, 0}];  // remove the invariant symplectic form
    return mult;
}

std::vector<std::vector<std::int64_t>> compositions(std::int64_t n) {
    std::vector<std::vector<std::int64_t>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (std::int64_t first = 1; first <= n; ++first)
        for (auto rest : compositions(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(rest);
        }
    return out;
}

// all block-dominant target tuples with entries in {-1,0,1}
std::vector<BlockTuple> small_targets(const std::vector<std::int64_t>& sizes) {
    std::vector<BlockTuple> out{{}};
    for (auto a : sizes) {
        std::vector<GlWeight> block_choices;
        for (std::int64_t ones = 0; ones <= a; ++ones)
            for (std::int64_t negs = 0; ones + negs <= a; ++negs) {
                GlWeight t(static_cast<std::size_t>(a), 0);
                for (std::int64_t i = 0; i < ones; ++i) t[static_cast<std::size_t>(i)] = 1;
                for (std::int64_t i = 0; i < negs; ++i) t[static_cast<std::size_t>(a - 1 - i)] = -1;
                block_choices.push_back(t);
            }
        std::vector<BlockTuple> next;
        for (const auto& prefix : out)
            for (const auto& choice : block_choices) {
                BlockTuple t = prefix;
                t.push_back(choice);
                next.push_back(t);
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST_CASE("weight multiplicities, small anchors") {
    // highest weight itself
    CHECK(weight_multiplicity(RsType::C, 2, W({1, 1}), W({1, 1})) == 1);
    CHECK(weight_multiplicity(RsType::C, 3, W({2, 1, 0}), W({2, 1, 0})) == 1);

    // C_1 standard: weights +1, -1
    CHECK(weight_multiplicity(RsType::C, 1, W({1}), W({1})) == 1);
    CHECK(weight_multiplicity(RsType::C, 1, W({1}), W({-1})) == 1);
    CHECK(weight_multiplicity(RsType::C, 1, W({1}), W({0})) == 0);

    // C_2 five-dimensional module against the exterior-power oracle
    auto oracle = c2_lambda2_reduced();
    for (const auto& [w, m] : oracle)
        CHECK(weight_multiplicity(RsType::C, 2, W({1, 1}), W(w)) == m);
    CHECK(weight_multiplicity(RsType::C, 2, W({1, 1}), W({0, 0})) == 1);

    CHECK_THROWS_AS(weight_multiplicity(RsType::C, 2, W({1, 2}), W({0, 0})), DomainError);
}

TEST_CASE("dimension formula") {
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::int64_t> std_wt(static_cast<std::size_t>(n), 0);
        std_wt[0] = 1;
        CHECK(dimension(RsType::C, n, W(std_wt)) == 2 * n);
    }
    CHECK(dimension(RsType::C, 2, W({0, 0})) == 1);
    CHECK(dimension(RsType::A, 3, W({0, 0, 0})) == 1);
    CHECK(dimension(RsType::D, 3, W({0, 0, 0})) == 1);
    CHECK(dimension(RsType::C, 2, W({1, 1})) == 5);
    // adjoint of C_3: dim 21
    CHECK(dimension(RsType::C, 3, W({2, 0, 0})) == 21);
    // B_2 spin module: dim 4
    Wt spin = {1, 1};  // doubled (1/2, 1/2)
    CHECK(dimension(RsType::B, 2, spin) == 4);
    // D_4 standard: dim 8
    CHECK(dimension(RsType::D, 4, W({1, 0, 0, 0})) == 8);
}

TEST_CASE("Freudenthal totals equal the Weyl dimension") {
    struct Case {
        RsType type;
        int rank;
        Wt highest;
    };
    std::vector<Case> cases = {
        {RsType::C, 2, W({1, 1})},   {RsType::C, 2, W({2, 1})},    {RsType::C, 3, W({1, 1, 1})},
        {RsType::C, 3, W({2, 1, 0})}, {RsType::C, 4, W({1, 1, 0, 0})}, {RsType::B, 2, {1, 1}},
        {RsType::B, 2, W({1, 1})},   {RsType::B, 3, W({1, 1, 0})}, {RsType::D, 3, W({1, 1, 1})},
        {RsType::D, 4, W({1, 1, 0, 0})}, {RsType::A, 3, W({2, 1, 0})}, {RsType::A, 5, W({1, 1, 0, 0, 0})},
        {RsType::D, 4, {2, 2, 2, -2}},
    };
    for (const auto& c : cases) {
        const WeightSystem& ws = weight_system(c.type, c.rank, c.highest);
        CHECK(ws.dimension_by_sum() == dimension(c.type, c.rank, c.highest));
    }
}

TEST_CASE("weight multiplicity is Weyl invariant") {
    const WeightSystem& ws = weight_system(RsType::C, 3, W({2, 1, 0}));
    for (const auto& [mu, m] : ws.dominant_mults) {
        for (const Wt& img : weyl_orbit(ws.sys, mu)) CHECK(ws.mult(img) == m);
    }
}

TEST_CASE("GL weight maps") {
    // V_(1,-1) of GL(2): weights (1,-1), (0,0), (-1,1)
    const auto& adj = gl_weight_map(2, {1, -1});
    REQUIRE(adj.size() == 3);
    CHECK(adj.at({1, -1}) == 1);
    CHECK(adj.at({0, 0}) == 1);
    CHECK(adj.at({-1, 1}) == 1);

    // V_(2,1,0) of GL(3): dim 8, weight (1,1,1) has multiplicity 2
    const auto& w210 = gl_weight_map(3, {2, 1, 0});
    CHECK(gl_dimension(3, {2, 1, 0}) == 8);
    CHECK(w210.at({1, 1, 1}) == 2);

    // exterior powers have 0/1 weights
    const auto& ext = gl_weight_map(4, {1, 1, 0, 0});
    CHECK(ext.size() == 6);
    for (const auto& [w, m] : ext) CHECK(m == 1);

    // negative entries shift uniformly
    const auto& shifted = gl_weight_map(2, {0, -2});
    CHECK(shifted.at({-1, -1}) == 1);
    CHECK(gl_dimension(2, {0, -2}) == 3);
}

TEST_CASE("branching examples") {
    // trivial restricts to trivial
    CHECK(branch_to_levi(2, {0, 0}, LeviShape{{2}, {{0, 0}}}) == 1);
    CHECK(branch_to_levi(3, {0, 0, 0}, LeviShape{{1, 2}, {{0}, {0, 0}}}) == 1);

    // C_1 standard under U(1)
    CHECK(branch_to_levi(1, {1}, LeviShape{{1}, {{1}}}) == 1);
    CHECK(branch_to_levi(1, {1}, LeviShape{{1}, {{-1}}}) == 1);
    CHECK(branch_to_levi(1, {1}, LeviShape{{1}, {{0}}}) == 0);

    // standard module of C_2 has no U(2) invariant
    CHECK(branch_to_levi(2, {1, 0}, LeviShape{{2}, {{0, 0}}}) == 0);

    // V_(1,1) of C_2 under U(2): det + adjoint + det^{-1}
    CHECK(branch_to_levi(2, {1, 1}, LeviShape{{2}, {{1, 1}}}) == 1);
    CHECK(branch_to_levi(2, {1, 1}, LeviShape{{2}, {{1, -1}}}) == 1);
    CHECK(branch_to_levi(2, {1, 1}, LeviShape{{2}, {{-1, -1}}}) == 1);
    CHECK(branch_to_levi(2, {1, 1}, LeviShape{{2}, {{0, 0}}}) == 0);

    // torus invariants of V_(1,1) = its zero weight space
    CHECK(branch_to_levi(2, {1, 1}, LeviShape{{1, 1}, {{0}, {0}}}) == 1);
}

TEST_CASE("branching totals recover the dimension") {
    for (int rank = 1; rank <= 3; ++rank) {
        for (const auto& mu_ints : diminutive_ktypes(rank)) {
            for (const auto& sizes : compositions(rank)) {
                const auto& decomp = levi_decomposition(rank, mu_ints, sizes);
                std::int64_t total = 0;
                for (const auto& [tuple, m] : decomp) {
                    std::int64_t prod = m;
                    for (std::size_t b = 0; b < sizes.size(); ++b)
                        prod = checked_mul(prod, gl_dimension(static_cast<int>(sizes[b]), tuple[b]));
                    total = checked_add(total, prod);
                }
                CHECK(total == dimension(RsType::C, rank, wt_from_ints(mu_ints)));
            }
        }
    }
}

TEST_CASE("constant term oracle, small anchors") {
    CHECK(constant_term(2, {0, 0}, LeviShape{{2}, {{0, 0}}}) == 1);
    CHECK(constant_term(2, {1, 0}, LeviShape{{2}, {{0, 0}}}) == 0);
    CHECK(constant_term(2, {1, 1}, LeviShape{{2}, {{0, 0}}}) == 0);
    CHECK(constant_term(2, {1, 1}, LeviShape{{2}, {{1, -1}}}) == 1);
    CHECK(constant_term(3, {1, 1, 0}, LeviShape{{2, 1}, {{1, 0}, {1}}}) == 1);

    KType big(static_cast<std::size_t>(6), 0);
    CHECK_THROWS_AS(constant_term(6, big, LeviShape{{6}, {GlWeight(6, 0)}}), DomainError);
}

TEST_CASE("branching agrees with the integration oracle, exhaustive small rank") {
    for (int rank = 1; rank <= 3; ++rank) {
        for (const auto& mu : diminutive_ktypes(rank)) {
            for (const auto& sizes : compositions(rank)) {
                const auto& decomp = levi_decomposition(rank, mu, sizes);
                for (const auto& targets : small_targets(sizes)) {
                    auto it = decomp.find(targets);
                    std::int64_t lhs = it == decomp.end() ? 0 : it->second;
                    std::int64_t rhs = constant_term(rank, mu, LeviShape{sizes, targets});
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("diminutive K-types") {
    auto d2 = diminutive_ktypes(2);
    REQUIRE(d2.size() == 3);
    CHECK(d2[0] == KType{0, 0});
    CHECK(d2[1] == KType{1, 0});
    CHECK(d2[2] == KType{1, 1});
    CHECK(diminutive_ktypes(1).size() == 2);
    CHECK(diminutive_ktypes(8).size() == 9);
}
