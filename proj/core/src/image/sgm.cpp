#include "sgm/image/sgm.hpp"

#include "sgm/chain/chain_complex.hpp"
#include "sgm/error.hpp"

namespace sgm {

SgmImage SgmImage::handles(int n, std::vector<int> l)
{
    SgmImage img;
    img.kind = Kind::handles;
    img.n = n;
    img.l = std::move(l);
    validate_image(img);
    return img;
}

SgmImage SgmImage::disc_with_holes(int n, HoleSpec holes)
{
    SgmImage img;
    img.kind = Kind::holes;
    img.n = n;
    img.holes = std::move(holes);
    validate_image(img);
    return img;
}

void validate_image(const SgmImage& img)
{
    if (img.n < 1) fail(ErrorKind::invalid_argument, "target dimension must be positive");
    if (img.kind == SgmImage::Kind::handles) {
        for (int l : img.l)
            if (l < 1 || l > img.n - 1)
                fail(ErrorKind::invalid_argument, "handle index l = " + std::to_string(l) + " outside 1.." +
                                                      std::to_string(img.n - 1));
    } else {
        validate_hole_spec(img.n, img.holes);
    }
}

GradedModule image_homology(const SgmImage& img, const Coefficients& coeffs)
{
    validate_image(img);
    if (img.kind == SgmImage::Kind::holes) return disc_with_holes_homology(img.n, img.n, img.holes, coeffs).homology;
    GradedModule h = GradedModule::point(coeffs);
    for (int l : img.l) h.add(l, FgModule::free(coeffs, 1));
    return h;
}

namespace {

void check_dimensions(const SgmImage& img, int m)
{
    validate_image(img);
    if (m <= img.n) fail(ErrorKind::invalid_argument, "source dimension m must exceed n");
    if (m > kDefaultDegreeCap) fail(ErrorKind::degree_cap, "source dimension exceeds the degree cap");
}

}  // namespace

GradedModule source_homology(const SgmImage& img, int m, const Coefficients& coeffs)
{
    check_dimensions(img, m);
    const GradedModule hw = image_homology(img, Coefficients::integers());
    const GradedModule hw_a = change_coefficients(hw, coeffs);
    const GradedModule cw_a = cohomology_from_homology(hw_a);
    GradedModule out(coeffs);
    for (int j = 0; j <= m; ++j) {
        out.add(j, hw_a.at(j));
        // H_{j-p}(W, dW) = H^{n-(j-p)}(W) = H^{m-j}(W)
        if (j - (m - img.n) >= 0) out.add(j, cw_a.at(m - j));
    }
    return out;
}

namespace {

// Cellular models with zero differential: W, its boundary, and the inclusion.
struct PairModel {
    ChainComplex w;
    ChainComplex boundary;
    ChainMap inclusion;
};

struct CellLayout {
    std::vector<std::size_t> ranks;
    std::size_t add(int d)
    {
        if (ranks.size() <= static_cast<std::size_t>(d)) ranks.resize(static_cast<std::size_t>(d) + 1, 0);
        return ranks[static_cast<std::size_t>(d)]++;
    }
    ChainComplex complex(int top) const
    {
        std::vector<std::size_t> r = ranks;
        r.resize(static_cast<std::size_t>(top) + 1, 0);
        std::vector<IntegerMatrix> bd;
        for (std::size_t d = 1; d < r.size(); ++d) bd.emplace_back(r[d - 1], r[d]);
        return ChainComplex(r, bd);
    }
};

struct Cell {
    int degree;
    std::size_t index;
};

PairModel pair_model(const SgmImage& img)
{
    const int n = img.n;
    CellLayout w, b;
    std::vector<std::tuple<Cell, Cell, std::int64_t>> entries;  // (boundary cell, W cell, coefficient)
    const Cell base{0, w.add(0)};
    if (img.kind == SgmImage::Kind::handles) {
        // W = wedge of S^{l_j}; dW = # S^{l_j} x S^{n-l_j-1}: cores map to the wedge spheres.
        const Cell b0{0, b.add(0)};
        entries.emplace_back(b0, base, 1);
        for (int l : img.l) {
            const Cell wj{l, w.add(l)};
            const Cell core{l, b.add(l)};
            b.add(n - 1 - l);
            entries.emplace_back(core, wj, 1);
        }
        b.add(n - 1);
    } else {
        const auto& spec = img.holes;
        // W: one class a_K in degree n-1-s per sphere K, one t_h in degree n-1 per hole.
        std::map<SummandRef, Cell> dual;
        std::vector<Cell> hole_top;
        for (std::size_t h = 0; h < spec.holes.size(); ++h) {
            for (std::size_t i = 0; i < spec.holes[h].size(); ++i) {
                const int s = spec.holes[h][i];
                dual[{h, i}] = Cell{n - 1 - s, w.add(n - 1 - s)};
            }
            hole_top.push_back(Cell{n - 1, w.add(n - 1)});
        }
        // dW: the outer (n-1)-sphere and one connected sum of S^s x S^{n-1-s} per hole.
        const Cell outer0{0, b.add(0)};
        const Cell outer_top{n - 1, b.add(n - 1)};
        entries.emplace_back(outer0, base, 1);
        for (const auto& t : hole_top) entries.emplace_back(outer_top, t, 1);
        for (std::size_t h = 0; h < spec.holes.size(); ++h) {
            entries.emplace_back(Cell{0, b.add(0)}, base, 1);
            for (std::size_t i = 0; i < spec.holes[h].size(); ++i) {
                const int s = spec.holes[h][i];
                const Cell core{s, b.add(s)};
                const Cell fiber{n - 1 - s, b.add(n - 1 - s)};
                entries.emplace_back(fiber, dual.at({h, i}), 1);
                // the pushed-off core sphere links the other spheres
                for (const auto& [other, cell] : dual) {
                    if (other == SummandRef{h, i}) continue;
                    const std::int64_t lk = spec.linking_of({h, i}, other);
                    if (lk != 0) entries.emplace_back(core, cell, lk);
                }
            }
            entries.emplace_back(Cell{n - 1, b.add(n - 1)}, hole_top[h], 1);
        }
    }
    PairModel pm{w.complex(n - 1), b.complex(n - 1), {}};
    for (int d = 0; d <= n - 1; ++d) pm.inclusion.by_degree.emplace_back(pm.w.rank(d), pm.boundary.rank(d));
    for (const auto& [bc, wc, c] : entries) {
        if (bc.degree != wc.degree) fail(ErrorKind::internal, "inclusion model mixes degrees");
        auto& m = pm.inclusion.by_degree[static_cast<std::size_t>(bc.degree)];
        m(wc.index, bc.index) += c;
    }
    validate_chain_map(pm.inclusion, pm.boundary, pm.w);
    return pm;
}

}  // namespace

GradedModule source_homology_mv(const SgmImage& img, int m, const Coefficients& coeffs)
{
    check_dimensions(img, m);
    const int p = m - img.n;
    const PairModel pm = pair_model(img);
    const ChainComplex sphere = complex_for_sphere(p);
    const ChainComplex a = complex_tensor(pm.w, sphere);
    const ChainComplex i = complex_tensor(pm.boundary, sphere);
    const ChainMap f = tensor_map(pm.inclusion, pm.boundary, pm.w, identity_map(sphere), sphere, sphere);
    // augmentation S^p -> point
    ChainMap eps;
    for (int d = 0; d <= sphere.top_degree(); ++d) {
        IntegerMatrix mtx(d == 0 ? 1 : 0, sphere.rank(d));
        if (d == 0)
            for (std::size_t c = 0; c < sphere.rank(0); ++c) mtx(0, c) = 1;
        eps.by_degree.push_back(mtx);
    }
    const ChainComplex pt = ChainComplex::point();
    const ChainMap g = tensor_map(identity_map(pm.boundary), pm.boundary, pm.boundary, eps, sphere, pt);
    const ChainComplex bpt = complex_tensor(pm.boundary, pt);
    const ChainComplex cyl = double_mapping_cylinder(a, bpt, i, f, g);
    return homology(cyl, coeffs);
}

GradedModule sphere_product_sum_homology(int m, const std::vector<int>& l, const Coefficients& coeffs)
{
    GradedModule h = GradedModule::point(coeffs);
    h.add(m, FgModule::free(coeffs, 1));
    for (int lj : l) {
        h.add(lj, FgModule::free(coeffs, 1));
        h.add(m - lj, FgModule::free(coeffs, 1));
    }
    return h;
}

bool poincare_duality_holds(const GradedModule& h, int m)
{
    for (int j = 0; j <= m; ++j)
        if (h.rank(j) != h.rank(m - j)) return false;
    return true;
}

bool SourceReport::all_passed() const
{
    for (const auto& c : checks)
        if (c.status == "fail") return false;
    return true;
}

SourceReport main_thm1_pipeline()
{
    SourceReport r;
    r.m = 7;
    r.n = 6;
    r.image = SgmImage::disc_with_holes(6, HoleSpec{{{3}, {3}, {3}}, {}});
    const Coefficients z = Coefficients::integers();
    r.homology = source_homology(r.image, r.m, z);
    r.homology_mv = source_homology_mv(r.image, r.m, z);
    auto add = [&](std::string name, bool ok, std::string detail) {
        r.checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
    };
    add("H1(M) = 0", r.homology.at(1).is_zero(), "H1 = " + r.homology.at(1).str());
    add("H3(M) = 0", r.homology.at(3).is_zero(), "H3 = " + r.homology.at(3).str());
    add("H2(M) free", r.homology.at(2).is_free(), "H2 = " + r.homology.at(2).str());
    add("formula = Mayer-Vietoris", r.homology == r.homology_mv,
        "formula " + r.homology.str() + " vs chain level " + r.homology_mv.str());
    add("Poincare duality", poincare_duality_holds(r.homology, r.m), "free ranks of H_j and H_{7-j} agree");
    const std::int64_t h2 = r.homology.rank(2);
    r.checks.push_back({"H2(M) rank vs stated " + std::to_string(kStatedH2Rank), h2 == kStatedH2Rank ? "pass" : "discrepancy",
                        "computed rank " + std::to_string(h2) + " = rank H2(W) " +
                            std::to_string(image_homology(r.image, z).rank(2)) + " + rank H^5(W) " +
                            std::to_string(cohomology_from_homology(image_homology(r.image, z)).rank(5)) +
                            "; stated rank " + std::to_string(kStatedH2Rank)});

    const FiniteDGA fx = borromean_fixture();
    const auto dv = validate_dga(fx);
    add("Borromean model valid", dv.valid, dv.valid ? "d^2 = 0, Leibniz, associativity, commutativity" : dv.violation);
    r.massey = triple_massey(fx, {{*fx.find("x1"), 1}}, {{*fx.find("x2"), 1}}, {{*fx.find("x3"), 1}});
    add("Massey <x1,x2,x3> defined", r.massey.defined, r.massey.reason);
    add("Massey <x1,x2,x3> nonvanishing", r.massey.nonvanishing, "representative " + fx.str(r.massey.representative));
    add("Massey indeterminacy trivial", r.massey.indeterminacy_trivial,
        std::to_string(r.massey.indeterminacy_basis.size()) + " independent indeterminacy classes");

    // Cohomology classes of M with degrees; only degrees matter for the degree <= m-n search.
    CohomologyRing ring(z, r.m);
    const GradedModule coh = cohomology_from_homology(r.homology);
    for (const auto& [d, mod] : coh.by_degree())
        for (std::int64_t i = 1; i <= mod.free_rank(); ++i)
            ring.add_class(d == 0 ? "1" : "c" + std::to_string(d) + "_" + std::to_string(i), d);
    r.thm1 = check_thm1_vanishing(ring, r.m, r.n);
    add("low-degree product vanishing at (7,6)", r.thm1.pass,
        r.thm1.vacuous ? "vacuous: no class of degree <= 1" : std::to_string(r.thm1.products_checked) + " products");

    const Remark1Verdict rem = check_remark1_exclusion(7, 5, r.massey.nonvanishing, true);
    r.checks.push_back({"exclusion: no map into R^n, n <= 5", "info", rem.reason});
    return r;
}

Remark1Verdict check_remark1_exclusion(int m, int n, bool massey, bool simply_connected)
{
    if (m != 7) fail(ErrorKind::unsupported, "the exclusion rule is stated for m = 7 only");
    if (n < 1) fail(ErrorKind::invalid_argument, "target dimension must be positive");
    if (n <= 5 && massey && simply_connected)
        return {true, "excluded: a simply connected closed 7-manifold with a nonvanishing triple Massey product has no "
                      "special generic map into R^" + std::to_string(n)};
    return {false, "no obstruction from this rule"};
}

}  // namespace sgm
