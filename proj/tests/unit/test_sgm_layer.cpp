#include <functional>

#include "../support/oracles.hpp"
#include "doctest.h"
#include "sgm/error.hpp"
#include "sgm/image/sgm.hpp"

using namespace sgm;

namespace {
const Coefficients Z = Coefficients::integers();
}

TEST_SUITE("sgm-layer")
{
    TEST_CASE("handle images give sums of sphere products")
    {
        const SgmImage w = SgmImage::handles(4, {2, 1});
        const GradedModule h = source_homology(w, 7, Z);
        CHECK(h == sphere_product_sum_homology(7, {2, 1}, Z));
        CHECK(h == testing::free_module({{0, 1}, {1, 1}, {2, 1}, {5, 1}, {6, 1}, {7, 1}}));
        CHECK(h == source_homology_mv(w, 7, Z));
        CHECK(source_homology(SgmImage::handles(3, {}), 5, Z) == testing::free_module({{0, 1}, {5, 1}}));
        CHECK_THROWS_AS(source_homology(w, 4, Z), Error);
        CHECK_THROWS_AS(validate_image(SgmImage::handles(4, {4})), Error);
        CHECK_THROWS_AS(validate_image(SgmImage::handles(4, {0})), Error);
    }

    TEST_CASE("exchanging l and m - l leaves the graded ranks alone")
    {
        for (int n = 2; n <= 6; ++n)
            for (int m = n + 1; m <= 9; ++m)
                for (int l = 1; l <= n - 1; ++l) {
                    if (m - l < 1 || m - l > n - 1) continue;
                    CHECK(source_homology(SgmImage::handles(n, {l}), m, Z) ==
                          source_homology(SgmImage::handles(n, {m - l}), m, Z));
                }
    }

    TEST_CASE("disc with holes, formula and Mayer-Vietoris")
    {
        const SgmImage b = SgmImage::disc_with_holes(6, HoleSpec{{{3}, {3}, {3}}, {}});
        const GradedModule h = source_homology(b, 7, Z);
        CHECK(h.at(1).is_zero());
        CHECK(h.at(3).is_zero());
        CHECK(h == source_homology_mv(b, 7, Z));
        CHECK(h == testing::free_module({{0, 1}, {2, 6}, {5, 6}, {7, 1}}));
        CHECK(poincare_duality_holds(h, 7));

        HoleSpec linked{{{2}, {3}}, {}};
        linked.set_linking({0, 0}, {1, 0}, 1);
        const SgmImage l = SgmImage::disc_with_holes(6, linked);
        for (int m = 7; m <= 9; ++m) {
            const GradedModule g = source_homology(l, m, Z);
            CHECK(g == source_homology_mv(l, m, Z));
            CHECK(poincare_duality_holds(g, m));
            CHECK(g.rank(0) == 1);
            CHECK(g.rank(m) == 1);
        }
        for (const Coefficients& k : {Coefficients::rationals(), Coefficients::mod_p(2)})
            CHECK(source_homology(b, 8, k) == source_homology_mv(b, 8, k));
    }

    TEST_CASE("image homology matches the chain oracle on every small hole spec")
    {
        for (int n = 3; n <= 6; ++n)
            for (const auto& holes : std::vector<std::vector<std::vector<int>>>{{{1}}, {{1, 1}, {}}, {{n - 2}, {1}}, {{}, {}, {}}}) {
                bool ok = true;
                for (const auto& h : holes)
                    for (int s : h) ok = ok && s >= 1 && s <= n - 2;
                if (!ok) continue;
                const SgmImage img = SgmImage::disc_with_holes(n, HoleSpec{holes, {}});
                CHECK(image_homology(img, Z) == disc_with_holes_oracle(n, img.holes, Z));
                CHECK(source_homology(img, n + 2, Z) == source_homology_mv(img, n + 2, Z));
            }
    }

    TEST_CASE("pipeline report")
    {
        const SourceReport r = main_thm1_pipeline();
        CHECK(r.m == 7);
        CHECK(r.n == 6);
        CHECK(r.all_passed());
        CHECK(r.massey.nonvanishing);
        CHECK(r.thm1.pass);
        CHECK(r.thm1.vacuous);
        bool saw_h2 = false, saw_remark = false;
        for (const auto& c : r.checks) {
            if (c.name.rfind("H2(M) rank vs stated", 0) == 0) {
                saw_h2 = true;
                CHECK(c.status == (r.homology.rank(2) == kStatedH2Rank ? "pass" : "discrepancy"));
            }
            if (c.status == "info") saw_remark = true;
        }
        CHECK(saw_h2);
        CHECK(saw_remark);
    }

    TEST_CASE("remark rule")
    {
        CHECK(check_remark1_exclusion(7, 4, true, true).excluded);
        CHECK(!check_remark1_exclusion(7, 6, true, true).excluded);
        CHECK(!check_remark1_exclusion(7, 3, false, true).excluded);
        CHECK(!check_remark1_exclusion(7, 3, true, false).excluded);
        CHECK_THROWS_AS(check_remark1_exclusion(8, 4, true, true), Error);
    }
}
