#include <random>

#include "../support/corpus.hpp"
#include "../support/oracles.hpp"
#include "../support/thm3_gen.hpp"
#include "doctest.h"
#include "sgm/error.hpp"
#include "sgm/invariants/term_homology.hpp"
#include "sgm/invariants/thm3.hpp"
#include "sgm/invariants/vanishing.hpp"
#include "sgm/term/parser.hpp"

using namespace sgm;

namespace {

const Coefficients Z = Coefficients::integers();

PolyhedronTerm term(const std::string& s) { return parse_term(s); }

Combination product(const CohomologyRing& r, const std::string& a, const std::string& b)
{
    return r.normalize(r.multiply(Combination{{*r.find(a), 1}}, Combination{{*r.find(b), 1}}));
}

Combination comb(const CohomologyRing& r, std::initializer_list<std::pair<const char*, std::int64_t>> items)
{
    Combination c;
    for (const auto& [label, v] : items) c[*r.find(label)] += v;
    return r.normalize(c);
}

}  // namespace

TEST_SUITE("invariants-engine")
{
    TEST_CASE("homology_of_term examples against the chain model")
    {
        for (int q = 1; q <= 4; ++q) {
            std::string s = "CS[@S2xS2";
            for (int i = 1; i < q; ++i) s += ",@S2xS2";
            s += "]";
            const PolyhedronTerm t = q == 1 ? term("@S2xS2") : term(s);
            const GradedModule h = homology_of_term(t, Z);
            CHECK(h == testing::free_module({{0, 1}, {2, 2 * q}, {4, 1}}));
            CHECK(h == homology(term_chain_model(t), Z));
        }
        const PolyhedronTerm p = term("P(S2,B(S3,S3))");
        CHECK(homology_of_term(p, Z) == testing::free_module({{0, 1}, {2, 1}, {3, 2}, {5, 2}}));
        CHECK(homology(complex_tensor(complex_for_sphere(2), complex_wedge({complex_for_sphere(3), complex_for_sphere(3)})), Z) ==
              homology_of_term(p, Z));
        CHECK(homology_of_term(term("S7"), Z) == testing::free_module({{0, 1}, {7, 1}}));
    }

    TEST_CASE("torsion atoms through products and sums")
    {
        for (const char* s : {"P(@Wu,@Wu)", "CS[@Wu,@Wu]", "B(@Wu,P(S2,@Wu))", "P(S1,@Wu)"})
            for (const Coefficients& k : {Z, Coefficients::rationals(), Coefficients::mod_p(2), Coefficients::mod_p(3)})
                CHECK_MESSAGE(homology_of_term(term(s), k) == homology(term_chain_model(term(s)), k), s);
    }

    TEST_CASE("hemisphere cell models give the same homology")
    {
        testing::TermCorpus corpus(testing::corpus_atoms(), 3);
        std::size_t bad = 0;
        corpus.for_each([&](const PolyhedronTerm& t, int) {
            if (!(homology(term_chain_model(t, SphereModel::hemispheres), Z) == homology_of_term(t, Z))) ++bad;
        });
        CHECK(bad == 0);
    }

    TEST_CASE("connectivity_of_term")
    {
        CHECK(connectivity_of_term(term("S3")).connectivity == 2);
        CHECK(connectivity_of_term(term("B(S2,S4)")).connectivity == 1);
        CHECK(connectivity_of_term(term("P(S3,S3)")).connectivity == 2);
        const auto flagged = connectivity_of_term(term("B(S1,S3)"));
        CHECK(flagged.homological_only);
        CHECK(flagged.flagged_atom == "S1");
        CHECK(connectivity_of_term(term("@pt")).connectivity >= kInfiniteConnectivity);
    }

    TEST_CASE("disc_with_holes_homology examples")
    {
        const HoleSpec three{{{3}, {3}, {3}}, {}};
        const DiscHomology b = disc_with_holes_homology(6, 2, three, Z);
        CHECK(b.homology == testing::free_module({{0, 1}, {2, 3}, {5, 3}}));
        CHECK(b.homology == disc_with_holes_oracle(6, three, Z));
        CHECK(b.warnings.empty());
        CHECK(disc_with_holes_homology(6, 2, HoleSpec{}, Z).homology == GradedModule::point(Z));
        const HoleSpec pair{{{2, 3}}, {}};
        CHECK(disc_with_holes_homology(6, 2, pair, Z).homology == testing::free_module({{0, 1}, {2, 1}, {3, 1}, {5, 1}}));
        CHECK(disc_with_holes_oracle(6, pair, Z) == testing::free_module({{0, 1}, {2, 1}, {3, 1}, {5, 1}}));
        // point holes contribute only to the top degree
        const HoleSpec points{{{}, {}}, {}};
        CHECK(disc_with_holes_homology(5, 2, points, Z).homology == testing::free_module({{0, 1}, {4, 2}}));
        CHECK(disc_with_holes_oracle(5, points, Z) == testing::free_module({{0, 1}, {4, 2}}));
        CHECK(!disc_with_holes_homology(6, 3, HoleSpec{{{3}}, {}}, Z).warnings.empty());
        CHECK_THROWS_AS(disc_with_holes_homology(6, 2, HoleSpec{{{5}}, {}}, Z), Error);
        CHECK_THROWS_AS(disc_with_holes_homology(6, 2, HoleSpec{{{-1}}, {}}, Z), Error);
    }

    TEST_CASE("linking only on complementary pairs")
    {
        HoleSpec h{{{2}, {3}, {2}}, {}};
        CHECK_NOTHROW(h.set_linking({0, 0}, {1, 0}, 1));
        CHECK(h.linking_of({1, 0}, {0, 0}) == 1);
        CHECK_NOTHROW(validate_hole_spec(6, h));
        h.set_linking({0, 0}, {2, 0}, 1);
        CHECK_THROWS_AS(validate_hole_spec(6, h), Error);
        HoleSpec out{{{2}}, {}};
        out.set_linking({0, 0}, {4, 0}, 1);
        CHECK_THROWS_AS(validate_hole_spec(6, out), Error);
    }

    TEST_CASE("realize_ranks examples")
    {
        const HoleSpec a = realize_ranks(6, 2, {{2, 3}, {5, 3}});
        CHECK(a.holes == std::vector<std::vector<int>>{{3}, {3}, {3}});
        const HoleSpec b = realize_ranks(6, 2, {{2, 3}, {5, 2}});
        CHECK(b.holes.size() == 2);
        CHECK(b.summand_count() == 3);
        CHECK(disc_with_holes_homology(6, 2, b, Z).homology == testing::free_module({{0, 1}, {2, 3}, {5, 2}}));
        CHECK_THROWS_AS(realize_ranks(6, 2, {{5, 1}}), Error);
        CHECK_THROWS_AS(realize_ranks(6, 3, {{2, 1}, {5, 1}}), Error);
        CHECK_THROWS_AS(realize_ranks(6, 2, {{6, 1}, {5, 1}}), Error);
    }

    TEST_CASE("realize_ranks composed with disc homology is the identity")
    {
        std::mt19937_64 rng(41);
        int checked = 0;
        for (int t = 0; t < 300; ++t) {
            const int n = std::uniform_int_distribution<int>(3, 8)(rng);
            const int k = std::uniform_int_distribution<int>(1, n - 2)(rng);
            RankVector r;
            std::int64_t total = 0;
            for (int j = std::max(k, 1); j <= n - 2; ++j) {
                const int v = std::uniform_int_distribution<int>(0, 2)(rng);
                if (v) r[j] = v;
                total += v;
            }
            if (total == 0) continue;
            r[n - 1] = std::uniform_int_distribution<std::int64_t>(1, total)(rng);
            const HoleSpec h = realize_ranks(n, k, r);
            const GradedModule g = disc_with_holes_homology(n, k, h, Z).homology;
            RankVector back;
            for (const auto& [d, m] : g.by_degree())
                if (d > 0) back[d] = m.free_rank();
            CHECK(back == r);
            CHECK(g == disc_with_holes_oracle(n, h, Z));
            ++checked;
        }
        CHECK(checked > 200);
    }

    TEST_CASE("hole ring at n = 6 with one linked pair")
    {
        Thm3Params p;
        p.n = 6;
        p.k = 2;
        p.ranks = {{2, 1}, {3, 1}, {5, 2}};
        p.a = {1};
        const CohomologyRing r = thm3_ring(p);
        CHECK(product(r, "e2_1", "e3_1") == comb(r, {{"e5_1", 1}, {"e5_2", 1}}));
        CHECK(product(r, "e3_1", "e2_1") == comb(r, {{"e5_1", 1}, {"e5_2", 1}}));
        CHECK(!testing::ring_axiom_scan(r));

        HoleSpec h{{{3}, {2}}, {}};
        h.set_linking({0, 0}, {1, 0}, 1);
        const CohomologyRing from_links = ring_from_holes(6, 2, h, Z);
        CHECK(product(from_links, "e2_1", "e3_1") == comb(from_links, {{"e5_1", 1}, {"e5_2", 1}}));
    }

    TEST_CASE("hole ring middle degree at n = 5")
    {
        Thm3Params p;
        p.n = 5;
        p.k = 2;
        p.ranks = {{2, 2}, {4, 2}};
        p.a = {0, 0, 0, 0};
        p.a0 = {3};
        const CohomologyRing r = thm3_ring(p);
        CHECK(product(r, "e2_1", "e2_2") == comb(r, {{"e4_1", 3}, {"e4_2", 3}}));
        CHECK(product(r, "e2_1", "e2_1").empty());
        CHECK(product(r, "e2_2", "e2_2").empty());
        CHECK(!testing::ring_axiom_scan(r));
        p.a = {0, 0};
        CHECK_THROWS_AS(thm3_ring(p), Error);
    }

    TEST_CASE("hole ring preconditions")
    {
        Thm3Params p;
        p.n = 6;
        p.k = 2;
        p.ranks = {{2, 1}, {3, 1}, {5, 1}};
        p.a = {1};
        CHECK_THROWS_AS(thm3_ring(p), Error);  // equality case fails
        p.ranks = {{2, 1}, {3, 1}, {5, 2}};
        p.a = {1, 2};
        CHECK_THROWS_AS(thm3_ring(p), Error);  // length
        p.a = {0};
        p.a0 = {1};
        CHECK_THROWS_AS(thm3_ring(p), Error);  // middle sequence at even n
        p.a0.clear();
        const CohomologyRing zero = thm3_ring(p);
        CHECK(std::all_of(zero.table().begin(), zero.table().end(), [](const auto& kv) { return kv.second.empty(); }));
        CHECK(thm3_zero_prefix(7, 3, {{2, 1}, {4, 1}, {6, 2}}) == 1);
        CHECK(thm3_middle_index(2, 4, 6, 4, IndexMode::literal) == 7);
        CHECK(thm3_middle_index(2, 4, 6, 4, IndexMode::triangular) == 5);
        CHECK(parse_index_mode("triangular") == IndexMode::triangular);
        CHECK_THROWS_AS(parse_index_mode("diagonal"), Error);
    }

    TEST_CASE("random hole rings satisfy the ring axioms")
    {
        std::mt19937_64 rng(8);
        for (int t = 0; t < 100; ++t) {
            const Thm3Params p = testing::random_thm3_params(rng);
            const CohomologyRing r = thm3_ring(p);
            CHECK(!testing::ring_axiom_scan(r));
            CHECK(!r.check_axioms());
        }
    }

    TEST_CASE("linking-derived rings over Borromean holes are trivial")
    {
        const HoleSpec h{{{3}, {3}, {3}}, {}};
        const CohomologyRing r = ring_from_holes(6, 2, h, Z);
        for (const auto& [k, v] : r.table()) CHECK(v.empty());
        CHECK_THROWS_AS(ring_from_holes(6, 2, HoleSpec{{{2, 3}}, {}}, Z), Error);
    }

    TEST_CASE("vanishing checker examples")
    {
        CohomologyRing s2s5(Z, 7);
        const auto one = s2s5.add_class("1", 0);
        const auto x = s2s5.add_class("x", 2), y = s2s5.add_class("y", 5), top = s2s5.add_class("xy", 7);
        s2s5.set_product(x, y, {{top, 1}});
        s2s5.set_product(y, x, {{top, 1}});
        (void)one;
        const Thm1Verdict v = check_thm1_vanishing(s2s5, 7, 6);
        CHECK(v.pass);
        CHECK(v.vacuous);

        const CohomologyRing torus = exterior_algebra_ring(7, 1, Z);
        const Thm1Verdict w = check_thm1_vanishing(torus, 7, 6);
        CHECK(!w.pass);
        CHECK(w.witness.size() == 6);
        CHECK(w.complete);
        // a cap below the witness length cannot see it and says so
        const Thm1Verdict capped = check_thm1_vanishing(torus, 7, 6, 4);
        CHECK(capped.pass);
        CHECK(!capped.complete);

        // m - n at the top degree: the top class itself is a witness
        const Thm1Verdict direct = check_thm1_vanishing(s2s5, 20, 5);
        CHECK(!direct.pass);
        CHECK_THROWS_AS(check_thm1_vanishing(torus, 6, 6), Error);
    }

    TEST_CASE("exterior witness sign agrees with the permutation sign")
    {
        const CohomologyRing r = exterior_algebra_ring(4, 1, Z);
        const std::vector<int> order{2, 0, 3, 1};
        Combination c{{r.unit(), 1}};
        for (int g : order) c = r.normalize(r.multiply(c, Combination{{*r.find("x" + std::to_string(g + 1)), 1}}));
        int inv = 0;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::size_t j = i + 1; j < order.size(); ++j)
                if (order[i] > order[j]) ++inv;
        REQUIRE(c.size() == 1);
        CHECK(c.begin()->second == (inv % 2 ? -1 : 1));
    }

    TEST_CASE("degree-based Massey vanishing")
    {
        CHECK(massey_vanish_by_degree(5, 2, {{2, 2}, {4, 2}}).status == MasseyDegreeStatus::pass);
        CHECK(massey_vanish_by_degree(6, 2, {{2, 3}, {5, 3}}).status == MasseyDegreeStatus::not_decided);
        CHECK(massey_vanish_by_degree(7, 3, {{3, 1}, {6, 1}}).status == MasseyDegreeStatus::pass);
        CHECK(massey_vanish_by_degree(7, 3, {{1, 1}, {6, 1}}).status == MasseyDegreeStatus::precondition_failed);
    }
}
