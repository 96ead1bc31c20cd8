#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "nilorbit/degeneration.hpp"
#include "nilorbit/enumerate.hpp"
#include "nilorbit/format.hpp"

using namespace nilorbit;

namespace {

Orbit C(const Columns& cols) { return validate(GroupKind::SymplecticC, cols); }

std::set<std::string> member_chain_strings(const NormSet& ns) {
    std::set<std::string> out;
    for (const auto& m : ns.members) out.insert(chains_to_string(chain_decompose(m.orbit)));
    return out;
}

std::map<int, std::set<std::string>> members_by_depth(const NormSet& ns) {
    std::map<int, std::set<std::string>> out;
    for (const auto& m : ns.members) out[m.depth].insert(chains_to_string(chain_decompose(m.orbit)));
    return out;
}

} // namespace

TEST_CASE("fundamental degeneration rules") {
    CHECK(fundamental_degeneration(4, 2, 2, 0) == Columns{4, 4});
    CHECK(fundamental_degeneration(6, 6, 6, 4) == Columns{7, 7, 4, 4});
    CHECK(fundamental_degeneration(7, 5, 5, 5) == Columns{7, 7, 4, 4});
    CHECK(fundamental_degeneration(4, 4, 4, 4) == Columns{5, 5, 3, 3});
    CHECK(fundamental_degeneration(6, 4, 4, 2) == Columns{6, 6, 2, 2});
    CHECK(fundamental_degeneration(2, 2, 2, 0) == Columns{3, 3});

    CHECK_THROWS_AS(fundamental_degeneration(4, 4, 2, 2), DomainError);  // middle pair differs
}

TEST_CASE("Norm set of a single even chain, eight members") {
    NormSet ns = norm_set(C({8, 6, 6, 4, 4, 2, 2, 0}));
    REQUIRE(ns.members.size() == 8);

    auto by_depth = members_by_depth(ns);
    CHECK(by_depth[0] == std::set<std::string>{"[8(66)(44)(22)0]"});
    CHECK(by_depth[1] == std::set<std::string>{"[88][4(44)(22)0]", "[8(66)6][2(22)0]", "[8(66)(44)4]"});
    CHECK(by_depth[2] == std::set<std::string>{"[88][55][2(22)0]", "[88][4(44)4]", "[8(66)6][33]"});
    CHECK(by_depth[3] == std::set<std::string>{"[88][55][33]"});
}

TEST_CASE("Norm set of the worked two-chain odd/even orbit") {
    NormSet ns = norm_set(C({12, 10, 10, 8, 7, 5, 5, 3, 3, 1}));
    REQUIRE(ns.members.size() == 8);
    auto by_depth = members_by_depth(ns);
    CHECK(by_depth[0] == std::set<std::string>{"[12(10,10)8][7(55)(33)1]"});
    CHECK(by_depth[1] == std::set<std::string>{"[12(10,10)8][77][3(33)1]", "[12,12][88][7(55)(33)1]",
                                               "[12(10,10)8][7(55)5][11]"});
    CHECK(by_depth[2] == std::set<std::string>{"[12,12][88][77][3(33)1]", "[12(10,10)8][77][44][11]",
                                               "[12,12][88][7(55)5][11]"});
    CHECK(by_depth[3] == std::set<std::string>{"[12,12][88][77][44][11]"});
}

TEST_CASE("Norm set of (6,4,4,2,2,0)") {
    NormSet ns = norm_set(C({6, 4, 4, 2, 2, 0}));
    std::set<Columns> cols;
    for (const auto& m : ns.members) cols.insert(m.orbit.columns);
    CHECK(cols == std::set<Columns>{{6, 4, 4, 2, 2, 0}, {6, 4, 4, 4}, {6, 6, 2, 2, 2, 0}, {6, 6, 3, 3}});
}

TEST_CASE("Norm set without interior pairs is a singleton") {
    NormSet ns = norm_set(C({4, 4}));
    CHECK(ns.members.size() == 1);
    CHECK(ns.edges.empty());
}

TEST_CASE("norm_set rejects non-generic orbits") {
    CHECK_THROWS_AS(norm_set(C({4, 4, 4, 4})), DomainError);
}

TEST_CASE("norm_minimum") {
    CHECK(norm_minimum(C({6, 4, 4, 2, 2, 0})).columns == Columns{6, 6, 3, 3});
    CHECK(norm_minimum(C({8, 6, 6, 4, 4, 2, 2, 0})).columns == Columns{8, 8, 5, 5, 3, 3});
    CHECK(norm_minimum(C({2, 2})).columns == Columns{2, 2});
}

TEST_CASE("Norm properties over all generic orbits up to size 16") {
    for (Column size = 2; size <= 16; size += 2) {
        for (const Orbit& o : enumerate_generic_orbits_c(size)) {
            NormSet ns = norm_set(o);
            Orbit minimum = norm_minimum(o);
            bool origin_even = true;
            for (Column c : o.columns)
                if (c % 2 != 0) origin_even = false;

            std::int64_t origin_pairs = ns.members.front().interior_pairs();
            for (const auto& m : ns.members) {
                CHECK(closure_leq(m.orbit, o));
                CHECK(closure_leq(minimum, m.orbit));
                CHECK(m.depth == origin_pairs - m.interior_pairs());
                if (origin_even) CHECK(is_special(m.orbit));
            }

            // members deduplicate; origin present at depth 0
            CHECK(ns.members.front().orbit.columns == o.columns);
            CHECK(ns.members.front().depth == 0);
        }
    }
}

TEST_CASE("Norm of a multi-chain orbit is the product of its chain families") {
    for (Column size = 2; size <= 16; size += 2) {
        for (const Orbit& o : enumerate_generic_orbits_c(size)) {
            auto chains = chain_decompose(o).chains;
            if (chains.size() < 2) continue;
            std::size_t product = 1;
            for (const Chain& c : chains) {
                Orbit single = validate(GroupKind::SymplecticC, c.entries);
                product *= norm_set(single).members.size();
            }
            NormSet ns = norm_set(o);
            CHECK(ns.members.size() == product);

            // every member's segment columns form a member of the chain family
            for (const auto& m : ns.members) {
                REQUIRE(m.segments.size() == chains.size());
                for (std::size_t i = 0; i < chains.size(); ++i) {
                    Orbit single = validate(GroupKind::SymplecticC, chains[i].entries);
                    NormSet family = norm_set(single);
                    Columns canon = validate(GroupKind::SymplecticC, m.segments[i].columns).columns;
                    CHECK(family.find(canon) != nullptr);
                    CHECK(m.segments[i].delta == chains[i].parity);
                }
            }
        }
    }
}

TEST_CASE("prepending a pair to a single generic chain doubles the Norm count") {
    // [c0 (c1 c2) ...] built from [c2 ...] by putting (c0, c1) on the left
    std::vector<std::pair<Columns, Columns>> pairs = {
        {{6, 4, 4, 2}, {4, 2}},
        {{8, 6, 6, 4, 4, 2, 2, 0}, {6, 4, 4, 2, 2, 0}},
        {{6, 4, 4, 2, 2, 0}, {4, 2, 2, 0}},
        {{7, 5, 5, 3, 3, 1}, {5, 3, 3, 1}},
        {{9, 7, 7, 5, 5, 3, 3, 1}, {7, 5, 5, 3, 3, 1}},
    };
    for (const auto& [big, small] : pairs) {
        CHECK(norm_set(C(big)).members.size() == 2 * norm_set(C(small)).members.size());
    }
}

TEST_CASE("edges connect members one degeneration apart") {
    NormSet ns = norm_set(C({8, 6, 6, 4, 4, 2, 2, 0}));
    CHECK(!ns.edges.empty());
    for (const auto& e : ns.edges) {
        const auto& from = ns.members[static_cast<std::size_t>(e.from)];
        const auto& to = ns.members[static_cast<std::size_t>(e.to)];
        CHECK(to.depth == from.depth + 1);
        CHECK(closure_leq(to.orbit, from.orbit));
        CHECK(from.orbit.size() == to.orbit.size());
    }
}
