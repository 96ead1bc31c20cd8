#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "nilorbit/enumerate.hpp"
#include "nilorbit/format.hpp"
#include "nilorbit/params.hpp"

using namespace nilorbit;

namespace {

Orbit C(const Columns& cols) { return validate(GroupKind::SymplecticC, cols); }
Orbit BD(const Columns& cols) { return validate(GroupKind::OrthogonalBD, cols); }

// parameters of a member identified by its chain string
std::vector<AttachedParameter> params_of(const NormSet& ns, const std::string& chains) {
    for (const auto& m : ns.members)
        if (chains_to_string(chain_decompose(m.orbit)) == chains) return attach_parameters(ns, m);
    FAIL("member not found: " + chains);
    return {};
}

std::set<std::string> param_strings(const std::vector<AttachedParameter>& ps) {
    std::set<std::string> out;
    for (const auto& p : ps) out.insert(parameter_to_string(p));
    return out;
}

} // namespace

TEST_CASE("seventeen parameters attached to Norm((8,6,6,4,4,2,2,0))") {
    Orbit o = C({8, 6, 6, 4, 4, 2, 2, 0});
    NormSet ns = norm_set(o);
    std::size_t total = 0;
    for (const auto& m : ns.members) total += attach_parameters(ns, m).size();
    CHECK(total == 17);

    CHECK(param_strings(params_of(ns, "[8(66)(44)(22)0]")) ==
          std::set<std::string>{"[8(66)(44)(22)0]_0^+"});
    CHECK(param_strings(params_of(ns, "[88][4(44)(22)0]")) ==
          std::set<std::string>{"[88]_0^+[4(44)(22)0]_0^+", "[88]_0^-[4(44)(22)0]_0^+"});
    CHECK(param_strings(params_of(ns, "[88][4(44)4]")) ==
          std::set<std::string>{"[88]_0^+[4(44)4]_0^+", "[88]_0^+[4(44)4]_0^-",
                                "[88]_0^-[4(44)4]_0^+", "[88]_0^-[4(44)4]_0^-"});
    CHECK(param_strings(params_of(ns, "[88][55][33]")) ==
          std::set<std::string>{"[88]_0^+[55]_0^+[33]_0^+", "[88]_0^-[55]_0^+[33]_0^+"});

    // factor expansion in GL notation
    auto top = params_of(ns, "[8(66)(44)(22)0]");
    REQUIRE(top.size() == 1);
    CHECK(parameter_factors_to_string(top[0]) == "{6,6}^-{4,4}^-{2,2}^-{8,0}^+");
    auto bottom = params_of(ns, "[88][55][33]");
    CHECK(parameter_factors_to_string(bottom[0]) == "{8,8}^+<5,5>^+<3,3>^+");
}

TEST_CASE("parameters for the mixed-parity two-chain orbit") {
    Orbit o = C({12, 10, 10, 8, 7, 5, 5, 3, 3, 1});
    NormSet ns = norm_set(o);

    std::map<std::string, std::size_t> counts;
    std::size_t total = 0;
    for (const auto& m : ns.members) {
        auto ps = attach_parameters(ns, m);
        counts[chains_to_string(chain_decompose(m.orbit))] = ps.size();
        total += ps.size();
    }
    CHECK(counts["[12(10,10)8][7(55)(33)1]"] == 4);
    CHECK(counts["[12(10,10)8][77][3(33)1]"] == 8);
    CHECK(counts["[12,12][88][7(55)(33)1]"] == 8);
    CHECK(counts["[12(10,10)8][7(55)5][11]"] == 8);
    CHECK(counts["[12,12][88][77][3(33)1]"] == 16);
    CHECK(counts["[12(10,10)8][77][44][11]"] == 8);
    CHECK(counts["[12,12][88][7(55)5][11]"] == 16);
    CHECK(counts["[12,12][88][77][44][11]"] == 16);
    CHECK(total == 84);

    // the even pair [44] inside the odd family is forced to a single +
    auto ps = params_of(ns, "[12(10,10)8][77][44][11]");
    for (const auto& p : ps) {
        REQUIRE(p.factors.size() == 4);
        CHECK(p.factors[2].form == ChainFactor::Form::Angle);
        CHECK(chain_factor_to_string(p.factors[2]) == "[44]_1^+");
    }
}

TEST_CASE("parameter count equals the Lusztig quotient order for even generic origins") {
    for (Column size = 2; size <= 16; size += 2) {
        for (const Orbit& o : enumerate_generic_orbits_c(size)) {
            bool even = true;
            for (Column c : o.columns)
                if (c % 2 != 0) even = false;
            if (!even) continue;
            NormSet ns = norm_set(o);
            for (const auto& m : ns.members) {
                auto ps = attach_parameters(ns, m);
                int lq = lusztig_quotient_rank(m.orbit);
                CHECK(ps.size() == (std::size_t{1} << lq));
            }
        }
    }
}

TEST_CASE("distinguished parameters match the worked single-chain table") {
    Orbit o = C({8, 6, 6, 4, 4, 2, 2, 0});
    NormSet ns = norm_set(o);
    std::set<std::string> got;
    for (const auto& m : ns.members) got.insert(parameter_to_string(distinguished_parameter(ns, m)));
    CHECK(got == std::set<std::string>{
                     "[8(66)(44)(22)0]_0^+",
                     "[88]_0^+[4(44)(22)0]_0^+",
                     "[8(66)6]_0^-[2(22)0]_0^+",
                     "[8(66)(44)4]_0^+",
                     "[88]_0^+[55]_0^+[2(22)0]_0^+",
                     "[88]_0^+[4(44)4]_0^-",
                     "[8(66)6]_0^-[33]_0^+",
                     "[88]_0^+[55]_0^+[33]_0^+",
                 });
}

TEST_CASE("distinguished parameters match the worked two-chain table") {
    Orbit o = C({12, 10, 10, 8, 7, 5, 5, 3, 3, 1});
    NormSet ns = norm_set(o);
    std::set<std::string> got;
    for (const auto& m : ns.members) got.insert(parameter_to_string(distinguished_parameter(ns, m)));
    CHECK(got == std::set<std::string>{
                     "[12(10,10)8]_0^-[7(55)(33)1]_1^+",
                     "[12(10,10)8]_0^-[77]_1^+[3(33)1]_1^-",
                     "[12,12]_0^+[88]_0^+[7(55)(33)1]_1^+",
                     "[12(10,10)8]_0^-[7(55)5]_1^-[11]_1^+",
                     "[12,12]_0^+[88]_0^+[77]_1^+[3(33)1]_1^-",
                     "[12(10,10)8]_0^-[77]_1^+[44]_1^+[11]_1^+",
                     "[12,12]_0^+[88]_0^+[7(55)5]_1^-[11]_1^+",
                     "[12,12]_0^+[88]_0^+[77]_1^+[44]_1^+[11]_1^+",
                 });
}

TEST_CASE("exactly one distinguished parameter per member") {
    for (Column size = 2; size <= 14; size += 2) {
        for (const Orbit& o : enumerate_generic_orbits_c(size)) {
            NormSet ns = norm_set(o);
            for (const auto& m : ns.members) {
                auto all = attach_parameters(ns, m);
                AttachedParameter d = distinguished_parameter(ns, m);
                std::size_t hits = 0;
                for (const auto& p : all)
                    if (p == d) ++hits;
                CHECK(hits == 1);
            }
        }
    }
}

TEST_CASE("attach_parameters rejects non-members") {
    CHECK_THROWS_AS(attach_parameters(C({8, 6, 6, 4, 4, 2, 2, 0}), C({8, 8, 8, 8})), DomainError);
}

TEST_CASE("induced forms") {
    // [4(22)0]^+ -> GL(2) with (1,1), then GL(2) with (0,0)
    NormSet ns420 = norm_set(C({4, 2, 2, 0}));
    InducedForm f = to_induced_form(distinguished_parameter(ns420, ns420.members.front()));
    REQUIRE(f.blocks.size() == 2);
    CHECK(f.blocks[0].gl_size == 2);
    CHECK(f.blocks[0].block_ktype == Columns{1, 1});
    CHECK(f.blocks[1].gl_size == 2);
    CHECK(f.blocks[1].block_ktype == Columns{0, 0});

    // <3,3>^+ -> GL(3) trivial
    Factor angle = Factor::angle(3);
    CHECK(angle.gl_size() == 3);
    CHECK(angle.block_ktype() == Columns{0, 0, 0});

    // {8,8}^- -> GL(8) with (1^8)
    Factor minus = Factor::brace(8, 8, Sign::Minus);
    CHECK(minus.gl_size() == 8);
    CHECK(minus.block_ktype() == Columns{1, 1, 1, 1, 1, 1, 1, 1});

    // rank conservation across every parameter of every member
    for (Column size = 2; size <= 14; size += 2) {
        for (const Orbit& o : enumerate_generic_orbits_c(size)) {
            NormSet ns = norm_set(o);
            for (const auto& m : ns.members)
                for (const auto& p : attach_parameters(ns, m))
                    CHECK(to_induced_form(p).rank() == o.size() / 2);
        }
    }
}

TEST_CASE("Langlands strings behind the factor notation") {
    Factor plus = Factor::brace(8, 0, Sign::Plus);  // {8,0}^+ = (1 -> 4)
    auto s1 = plus.strings();
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].start == HalfInt::whole(1));
    CHECK(s1[0].end == HalfInt::whole(4));
    CHECK(s1[0].gl_size() == 4);

    Factor minus = Factor::brace(8, 6, Sign::Minus);  // {8,6}^-
    auto s2 = minus.strings();
    REQUIRE(s2.size() == 2);
    CHECK(s2[0].decoration == Decoration::Under);
    CHECK(s2[0].start == HalfInt::whole(-2));
    CHECK(s2[0].end == HalfInt::whole(3));
    CHECK(s2[1].start == HalfInt::whole(4));
    CHECK(s2[1].end == HalfInt::whole(4));
    CHECK(s2[0].gl_size() + s2[1].gl_size() == minus.gl_size());

    Factor angle = Factor::angle(3);  // <3,3>^+ = (-1 -> 1)
    auto s3 = angle.strings();
    REQUIRE(s3.size() == 1);
    CHECK(s3[0].start == HalfInt::whole(-1));
    CHECK(s3[0].end == HalfInt::whole(1));

    // odd columns give half-integer endpoints
    Factor odd = Factor::brace(7, 5, Sign::Plus);  // (-3/2 -> 7/2)
    auto s4 = odd.strings();
    CHECK(s4[0].start == HalfInt::from_doubled(-3));
    CHECK(s4[0].end == HalfInt::from_doubled(7));
    CHECK(s4[0].gl_size() == 6);
}

TEST_CASE("composition factor lists") {
    // generic orbit: one factor per Norm member
    auto fs = b_module_factors(C({4, 2, 2, 0}));
    REQUIRE(fs.size() == 2);
    std::set<std::string> got;
    for (const auto& f : fs) {
        CHECK(f.wrapper_columns.empty());
        got.insert(parameter_factors_to_string(f.param));
    }
    CHECK(got == std::set<std::string>{"{2,2}^-{4,0}^+", "{4,4}^+"});

    // normal orbit: single factor, all blocks trivial
    auto fn = b_module_factors(C({2, 2}));
    REQUIRE(fn.size() == 1);
    InducedForm form = fn[0].induced_form();
    for (const auto& b : form.blocks) CHECK(b.block_ktype == Columns(static_cast<std::size_t>(b.gl_size), 0));

    // repeated columns wrap the generic core
    auto fg = b_module_factors(C({6, 4, 4, 4, 4, 4, 4, 4, 4, 2, 2, 2}));
    NormSet core = norm_set(C({6, 4, 4, 2}));
    REQUIRE(fg.size() == core.members.size());
    for (const auto& f : fg) {
        Columns w = f.wrapper_columns;
        std::sort(w.begin(), w.end());
        CHECK(w == Columns{2, 4, 4, 4});
        InducedForm form = f.induced_form();
        CHECK(form.rank() == 22);  // Sp(44) has rank 22
    }
}

TEST_CASE("theta transfer drops the added column") {
    // origin factor of Q^c = (6,4,4,2): [6(44)2]_0^- -> {44}^- [2]^-
    Orbit qc = to_symplectic(BD({4, 4, 2}));
    REQUIRE(qc.columns == Columns{6, 4, 4, 2});
    NormSet ns = norm_set(qc);
    AttachedParameter origin_minus;
    for (const auto& p : attach_parameters(ns, ns.members.front()))
        if (p.factors.front().eps == Sign::Minus) origin_minus = p;
    REQUIRE(origin_minus.factors.size() == 1);

    TransferredParameter t = theta_transfer(origin_minus, qc);
    REQUIRE(t.leading_interior.size() == 1);
    CHECK(factor_to_string(t.leading_interior[0]) == "{4,4}^-");
    CHECK(t.tail.column == 2);
    CHECK(t.tail.eps == Sign::Minus);
    CHECK(t.rest.empty());
    CHECK(transferred_to_string(t) == "{4,4}^-[2]^-");
    // even tail column 2: coordinate string (0)
    REQUIRE(t.tail.coords().size() == 1);
    CHECK(t.tail.coords()[0] == HalfInt::whole(0));

    // Q = (2,2,0): Q^c = (4,2,2,0); transfer of {22}^-{40}^+ keeps {22}^-, tail [0]^+
    Orbit qc2 = to_symplectic(BD({2, 2}));
    NormSet ns2 = norm_set(qc2);
    AttachedParameter p2 = distinguished_parameter(ns2, ns2.members.front());
    CHECK(parameter_factors_to_string(p2) == "{2,2}^-{4,0}^+");
    TransferredParameter t2 = theta_transfer(p2, qc2);
    REQUIRE(t2.leading_interior.size() == 1);
    CHECK(factor_to_string(t2.leading_interior[0]) == "{2,2}^-");
    CHECK(t2.tail.column == 0);
    CHECK(t2.tail.eps == Sign::Plus);
    CHECK(t2.tail.coords().empty());

    // factors not containing the added column pass through untouched
    NormSet ns3 = norm_set(C({6, 4, 4, 2}));
    const NormMember* two_chains = nullptr;
    for (const auto& m : ns3.members)
        if (m.orbit.columns == Columns{6, 6, 2, 2}) two_chains = &m;
    REQUIRE(two_chains != nullptr);
    AttachedParameter p3 = distinguished_parameter(ns3, *two_chains);
    REQUIRE(p3.factors.size() == 2);
    TransferredParameter t3 = theta_transfer(p3, C({6, 4, 4, 2}));
    REQUIRE(t3.rest.size() == 1);
    CHECK(t3.rest[0] == p3.factors[1]);
    CHECK(t3.tail.column == 6);

    // GL sizes drop consistently: 2 * (blocks) + tail column = |Q|
    std::int64_t gl_total = 0;
    for (const auto& f : t.leading_interior) gl_total += f.gl_size();
    for (const auto& cf : t.rest)
        for (const auto& f : cf.expand()) gl_total += f.gl_size();
    CHECK(2 * gl_total + t.tail.column == BD({4, 4, 2}).size());

    // a parameter whose leading chain does not start with the added column
    CHECK_THROWS_AS(theta_transfer(p3, C({8, 6, 6, 4, 4, 2, 2, 0})), DomainError);
}

TEST_CASE("orthogonal member count transfers through the column map") {
    // removing the added column from each Norm member keeps counts aligned
    for (Columns q_cols : {Columns{4, 4, 2}, Columns{2, 2}, Columns{5, 5, 3, 1, 1}}) {
        Orbit q = BD(q_cols);
        Orbit qc = to_symplectic(q);
        if (!is_generic(qc)) continue;
        NormSet ns = norm_set(qc);
        for (const auto& m : ns.members) {
            CHECK(m.orbit.columns.front() == qc.columns.front());
            for (const auto& p : attach_parameters(ns, m)) {
                TransferredParameter t = theta_transfer(p, qc);
                std::int64_t gl_total = 0;
                for (const auto& f : t.leading_interior) gl_total += f.gl_size();
                for (const auto& cf : t.rest)
                    for (const auto& f : cf.expand()) gl_total += f.gl_size();
                CHECK(2 * gl_total + t.tail.column == q.size());
            }
        }
    }
}
