#include <random>

#include "../support/oracles.hpp"
#include "doctest.h"
#include "sgm/chain/chain_complex.hpp"
#include "sgm/chain/simplicial.hpp"
#include "sgm/chain/smith.hpp"
#include "sgm/error.hpp"

using namespace sgm;

namespace {

const Coefficients Z = Coefficients::integers();

std::vector<std::int64_t> small(const std::vector<Integer>& v)
{
    std::vector<std::int64_t> out;
    for (const auto& x : v) out.push_back(static_cast<std::int64_t>(x));
    return out;
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi)
{
    IntegerMatrix m(r, c);
    std::uniform_int_distribution<int> e(lo, hi);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
    return m;
}

Combination single(const CohomologyRing& r, const std::string& label) { return {{*r.find(label), 1}}; }

}  // namespace

TEST_SUITE("chain-oracle")
{
    TEST_CASE("smith_normal_form examples")
    {
        const SmithResult d = smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}});
        CHECK(small(d.diagonal) == std::vector<std::int64_t>{1, 6});
        CHECK(small(d.invariants) == std::vector<std::int64_t>{6});
        CHECK(d.rank == 2);
        const SmithResult z = smith_normal_form(IntegerMatrix(3, 3));
        CHECK(z.invariants.empty());
        CHECK(z.rank == 0);
        const SmithResult id = smith_normal_form(IntegerMatrix::identity(4));
        CHECK(id.invariants.empty());
        CHECK(id.rank == 4);
        CHECK(smith_normal_form(IntegerMatrix(0, 5)).rank == 0);
    }

    TEST_CASE("smith_normal_form agrees with determinantal divisors")
    {
        std::mt19937_64 rng(3);
        for (int t = 0; t < 150; ++t) {
            const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
            const std::size_t c = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
            const IntegerMatrix m = random_matrix(rng, r, c, -6, 6);
            const auto [factors, rank] = testing::determinantal_invariants(m);
            const SmithResult s = smith_normal_form(m);
            CHECK(s.rank == rank);
            CHECK(small(s.invariants) == small(factors));
        }
    }

    TEST_CASE("smith_normal_form is invariant under unimodular scrambling")
    {
        std::mt19937_64 rng(9);
        for (int t = 0; t < 200; ++t) {
            const IntegerMatrix m = random_matrix(rng, 5, 6, -3, 3);
            const SmithResult a = smith_normal_form(m);
            const SmithResult b = smith_normal_form(testing::scramble(m, rng, 25));
            CHECK(a.rank == b.rank);
            CHECK(a.invariants == b.invariants);
        }
    }

    TEST_CASE("smith_decomposition reproduces the diagonal")
    {
        std::mt19937_64 rng(21);
        for (int t = 0; t < 50; ++t) {
            const IntegerMatrix m = random_matrix(rng, 4, 5, -5, 5);
            const SmithDecomposition d = smith_decomposition(m);
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    Integer v = 0;
                    for (std::size_t a = 0; a < m.rows(); ++a)
                        for (std::size_t b = 0; b < m.cols(); ++b) v += d.left[i][a] * m(a, b) * d.right[b][j];
                    const Integer want = (i == j && i < d.rank) ? d.diagonal[i] : Integer(0);
                    CHECK(v == want);
                }
        }
    }

    TEST_CASE("homology examples")
    {
        CHECK(homology(simplex_boundary(3).chain_complex(), Z) == testing::free_module({{0, 1}, {3, 1}}));
        const ChainComplex s2s3 = complex_tensor(complex_for_sphere(2), complex_for_sphere(3));
        CHECK(homology(s2s3, Z) == testing::free_module({{0, 1}, {2, 1}, {3, 1}, {5, 1}}));
        const auto rp2 = testing::rp2();
        CHECK(testing::euler_characteristic(rp2) == 1);
        const GradedModule h = homology(rp2.chain_complex(), Z);
        CHECK(h.at(0) == FgModule(Z, 1));
        CHECK(h.at(1) == FgModule(Z, 0, {2}));
        CHECK(h.at(2).is_zero());
        CHECK(homology(rp2.chain_complex(), Coefficients::mod_p(2)).rank(2) == 1);
        CHECK(homology(rp2.chain_complex(), Coefficients::rationals()).total_rank() == 1);
    }

    TEST_CASE("boundary composition is checked at construction")
    {
        CHECK_THROWS_AS(ChainComplex({1, 1, 1}, {IntegerMatrix{{1}}, IntegerMatrix{{1}}}), Error);
        CHECK_THROWS_AS(ChainComplex({1, 2}, {IntegerMatrix{{1}}}), Error);
    }

    TEST_CASE("complex_for_sphere")
    {
        CHECK(homology(complex_for_sphere(0), Z) == GradedModule::point(Z));
        CHECK(homology(complex_for_sphere(1), Z) == testing::free_module({{0, 1}, {1, 1}}));
        CHECK(homology(complex_for_sphere(5), Z) == testing::free_module({{0, 1}, {5, 1}}));
        CHECK(homology(complex_for_sphere(4, SphereModel::hemispheres), Z) == testing::free_module({{0, 1}, {4, 1}}));
        CHECK_THROWS_AS(complex_for_sphere(-1), Error);
    }

    TEST_CASE("complex_tensor examples and Kunneth")
    {
        const ChainComplex s2 = complex_for_sphere(2);
        CHECK(homology(complex_tensor(s2, s2), Z) == testing::free_module({{0, 1}, {2, 2}, {4, 1}}));
        CHECK(homology(complex_tensor(ChainComplex::point(), complex_for_sphere(3)), Z) ==
              homology(complex_for_sphere(3), Z));
        const ChainComplex s1 = complex_for_sphere(1);
        CHECK(homology(complex_tensor(s1, s1), Z) == testing::free_module({{0, 1}, {1, 2}, {2, 1}}));

        std::mt19937_64 rng(2);
        const ChainComplex rp2 = testing::rp2().chain_complex();
        for (int t = 0; t < 40; ++t) {
            auto pick = [&]() -> ChainComplex {
                switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
                case 0: return complex_for_sphere(std::uniform_int_distribution<int>(0, 4)(rng));
                case 1: return complex_wedge({complex_for_sphere(2), complex_for_sphere(3)});
                case 2: return rp2;
                default: return complex_for_sphere(std::uniform_int_distribution<int>(1, 3)(rng), SphereModel::hemispheres);
                }
            };
            const ChainComplex a = pick(), b = pick();
            for (const Coefficients& k : {Z, Coefficients::mod_p(2), Coefficients::mod_p(3)})
                CHECK(homology(complex_tensor(a, b), k) == graded_kunneth(homology(a, k), homology(b, k)));
        }
    }

    TEST_CASE("complex_wedge is the reduced direct sum")
    {
        const ChainComplex s2 = complex_for_sphere(2), s3 = complex_for_sphere(3);
        CHECK(homology(complex_wedge({s2, s3}), Z) == testing::free_module({{0, 1}, {2, 1}, {3, 1}}));
        CHECK(homology(complex_wedge({s3, s3, s3}), Z) == testing::free_module({{0, 1}, {3, 3}}));
        CHECK(homology(complex_wedge({s2, s2}), Z) == testing::free_module({{0, 1}, {2, 2}}));
        const ChainComplex rp2 = testing::rp2().chain_complex();
        const GradedModule w = homology(complex_wedge({rp2, s2, rp2}), Z);
        CHECK(w.reduced() == graded_sum(graded_sum(homology(rp2, Z).reduced(), homology(s2, Z).reduced()),
                                        homology(rp2, Z).reduced()));
        CHECK_THROWS_AS(complex_wedge({}), Error);
    }

    TEST_CASE("boundary_of_thickened_hole examples")
    {
        CHECK(homology(boundary_of_thickened_hole(6, {3}), Z) ==
              homology(complex_tensor(complex_for_sphere(3), complex_for_sphere(2)), Z));
        CHECK(homology(boundary_of_thickened_hole(6, {}), Z) == testing::free_module({{0, 1}, {5, 1}}));
        CHECK(homology(boundary_of_thickened_hole(6, {2, 3}), Z) ==
              testing::free_module({{0, 1}, {2, 2}, {3, 2}, {5, 1}}));
        CHECK_THROWS_AS(boundary_of_thickened_hole(6, {6}), Error);
    }

    TEST_CASE("connected sum glues along one top cell")
    {
        const ChainComplex t = complex_tensor(complex_for_sphere(2), complex_for_sphere(2));
        CHECK(homology(complex_connected_sum({t, t, t}), Z) == testing::free_module({{0, 1}, {2, 6}, {4, 1}}));
    }

    TEST_CASE("simplicial cup product on the seven-vertex torus")
    {
        const auto k = testing::torus7();
        CHECK(testing::euler_characteristic(k) == 0);
        const CohomologyRing r = simplicial_cup_product(k, Z);
        CHECK(r.additive_structure() == testing::free_module({{0, 1}, {1, 2}, {2, 1}}));
        const Combination xy = r.normalize(r.multiply(single(r, "e1_1"), single(r, "e1_2")));
        const Combination yx = r.normalize(r.multiply(single(r, "e1_2"), single(r, "e1_1")));
        REQUIRE(xy.size() == 1);
        CHECK(xy.begin()->first == *r.find("e2_1"));
        CHECK(std::abs(xy.begin()->second) == 1);
        CHECK(yx.begin()->second == -xy.begin()->second);
        CHECK(r.normalize(r.multiply(single(r, "e1_1"), single(r, "e1_1"))).empty());
        CHECK(!testing::ring_axiom_scan(r));
    }

    TEST_CASE("simplicial cup product on spheres and the staircase S2 x S2")
    {
        const CohomologyRing s2 = simplicial_cup_product(simplex_boundary(2), Z);
        CHECK(s2.normalize(s2.multiply(single(s2, "e2_1"), single(s2, "e2_1"))).empty());

        const auto sq = staircase_product(simplex_boundary(2), simplex_boundary(2));
        const CohomologyRing r = simplicial_cup_product(sq, Z);
        CHECK(r.additive_structure() == testing::free_module({{0, 1}, {2, 2}, {4, 1}}));
        const Combination xy = r.normalize(r.multiply(single(r, "e2_1"), single(r, "e2_2")));
        REQUIRE(xy.size() == 1);
        CHECK(std::abs(xy.begin()->second) == 1);
        CHECK(r.normalize(r.multiply(single(r, "e2_1"), single(r, "e2_1"))).empty());
        CHECK(r.normalize(r.multiply(single(r, "e2_2"), single(r, "e2_2"))).empty());
        CHECK(!testing::ring_axiom_scan(r));
    }

    TEST_CASE("cup product over Z/2 sees the projective plane")
    {
        const CohomologyRing r = simplicial_cup_product(testing::rp2(), Coefficients::mod_p(2));
        const Combination a2 = r.normalize(r.multiply(single(r, "e1_1"), single(r, "e1_1")));
        CHECK(a2 == Combination{{*r.find("e2_1"), 1}});
        CHECK(!testing::ring_axiom_scan(r));
        CHECK_THROWS_AS(simplicial_cup_product(testing::rp2(), Z), Error);
        CHECK_THROWS_AS(simplicial_cup_product(simplex_boundary(7), Z), Error);
    }
}
