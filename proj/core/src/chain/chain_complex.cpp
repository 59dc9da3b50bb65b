#include "sgm/chain/chain_complex.hpp"

#include <algorithm>
#include <numeric>

#include "sgm/chain/smith.hpp"
#include "sgm/error.hpp"
#include "sgm/integer.hpp"

namespace sgm {

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> boundaries, std::size_t base_cell)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)), base_(base_cell)
{
    if (ranks_.empty()) fail(ErrorKind::structural, "chain complex without degrees");
    if (boundaries_.size() + 1 != ranks_.size())
        fail(ErrorKind::structural, "expected " + std::to_string(ranks_.size() - 1) + " boundary matrices, got " +
                                        std::to_string(boundaries_.size()));
    for (std::size_t d = 1; d < ranks_.size(); ++d) {
        const auto& m = boundaries_[d - 1];
        if (m.rows() != ranks_[d - 1] || m.cols() != ranks_[d])
            fail(ErrorKind::structural, "boundary " + std::to_string(d) + " has shape " + std::to_string(m.rows()) +
                                            "x" + std::to_string(m.cols()) + ", expected " +
                                            std::to_string(ranks_[d - 1]) + "x" + std::to_string(ranks_[d]));
    }
    for (std::size_t d = 2; d < ranks_.size(); ++d)
        if (!(boundaries_[d - 2] * boundaries_[d - 1]).is_zero())
            fail(ErrorKind::structural, "boundary of boundary is nonzero in degree " + std::to_string(d));
    if (ranks_[0] > 0 && base_ >= ranks_[0]) fail(ErrorKind::structural, "base cell out of range");
}

ChainComplex ChainComplex::point() { return ChainComplex({1}, {}); }

std::size_t ChainComplex::rank(int d) const
{
    if (d < 0 || d > top_degree()) return 0;
    return ranks_[static_cast<std::size_t>(d)];
}

std::size_t ChainComplex::total_cells() const { return std::accumulate(ranks_.begin(), ranks_.end(), std::size_t{0}); }

IntegerMatrix ChainComplex::boundary(int d) const
{
    if (d >= 1 && d <= top_degree()) return boundaries_[static_cast<std::size_t>(d - 1)];
    return IntegerMatrix(rank(d - 1), rank(d));
}

void validate_chain_map(const ChainMap& f, const ChainComplex& source, const ChainComplex& target)
{
    const int top = std::max(source.top_degree(), target.top_degree());
    for (int d = 0; d <= top; ++d) {
        IntegerMatrix fd = d < static_cast<int>(f.by_degree.size()) ? f.by_degree[static_cast<std::size_t>(d)]
                                                                   : IntegerMatrix(target.rank(d), source.rank(d));
        if (fd.rows() != target.rank(d) || fd.cols() != source.rank(d))
            fail(ErrorKind::structural, "chain map has the wrong shape in degree " + std::to_string(d));
        if (d == 0) continue;
        IntegerMatrix fprev = f.by_degree[static_cast<std::size_t>(d - 1)];
        if (!(target.boundary(d) * fd == fprev * source.boundary(d)))
            fail(ErrorKind::structural, "not a chain map in degree " + std::to_string(d));
    }
}

namespace {

struct DegreeData {
    std::size_t rank;
    SmithResult out;  // smith of boundary(d)
    SmithResult in;   // smith of boundary(d+1)
};

FgModule from_smith(std::size_t rank, const SmithResult& out, const SmithResult& in, const Coefficients& a)
{
    switch (a.kind()) {
    case Coefficients::Kind::integers: {
        std::vector<std::int64_t> t;
        for (const auto& v : in.invariants) t.push_back(to_int64(v));
        return FgModule(a, static_cast<std::int64_t>(rank - out.rank - in.rank), std::move(t));
    }
    case Coefficients::Kind::rationals:
        return FgModule(a, static_cast<std::int64_t>(rank - out.rank - in.rank));
    case Coefficients::Kind::mod_p: {
        auto rank_p = [&](const SmithResult& s) {
            return static_cast<std::size_t>(std::count_if(s.diagonal.begin(), s.diagonal.end(),
                                                          [&](const Integer& v) { return v % a.prime() != 0; }));
        };
        return FgModule(a, static_cast<std::int64_t>(rank - rank_p(out) - rank_p(in)));
    }
    }
    return FgModule(a);
}

void require_matrix_shapes(std::size_t rank, const IntegerMatrix& outgoing, const IntegerMatrix& incoming)
{
    if (outgoing.cols() != rank || incoming.rows() != rank)
        fail(ErrorKind::structural, "maps are not composable with a group of rank " + std::to_string(rank));
}

}  // namespace

FgModule homology_at(std::size_t rank, const IntegerMatrix& outgoing, const IntegerMatrix& incoming,
                     const Coefficients& coeffs)
{
    require_matrix_shapes(rank, outgoing, incoming);
    if (!(outgoing * incoming).is_zero()) fail(ErrorKind::structural, "consecutive maps do not compose to zero");
    return from_smith(rank, smith_normal_form(outgoing), smith_normal_form(incoming), coeffs);
}

std::vector<GradedModule> homology_multi(const ChainComplex& c, const std::vector<Coefficients>& coeffs)
{
    std::vector<GradedModule> out;
    out.reserve(coeffs.size());
    for (const auto& a : coeffs) out.emplace_back(a, std::max(kDefaultDegreeCap, c.top_degree()));
    std::vector<SmithResult> snf(static_cast<std::size_t>(c.top_degree() + 2));
    for (int d = 1; d <= c.top_degree(); ++d) snf[static_cast<std::size_t>(d)] = smith_normal_form(c.boundary(d));
    for (int d = 0; d <= c.top_degree(); ++d)
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            out[k].set(d, from_smith(c.rank(d), snf[static_cast<std::size_t>(d)], snf[static_cast<std::size_t>(d + 1)],
                                     coeffs[k]));
    return out;
}

GradedModule homology(const ChainComplex& c, const Coefficients& coeffs) { return homology_multi(c, {coeffs})[0]; }

ChainComplex complex_for_sphere(int d, SphereModel model)
{
    if (d < 0) fail(ErrorKind::invalid_argument, "sphere of negative dimension " + std::to_string(d));
    if (d == 0) return ChainComplex::point();
    if (model == SphereModel::minimal) {
        std::vector<std::size_t> ranks(static_cast<std::size_t>(d + 1), 0);
        ranks.front() = 1;
        ranks.back() = 1;
        std::vector<IntegerMatrix> bd;
        for (int k = 1; k <= d; ++k) bd.emplace_back(ranks[static_cast<std::size_t>(k - 1)], ranks[static_cast<std::size_t>(k)]);
        return ChainComplex(ranks, bd);
    }
    // Cells e+_k (index 0) and e-_k (index 1); d(e+-_k) = e+_{k-1} - e-_{k-1}.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(d + 1), 2);
    std::vector<IntegerMatrix> bd;
    for (int k = 1; k <= d; ++k) bd.push_back(IntegerMatrix{{1, 1}, {-1, -1}});
    return ChainComplex(ranks, bd);
}

std::size_t tensor_offset(const ChainComplex& a, const ChainComplex& b, int d, int i)
{
    std::size_t off = 0;
    for (int k = 0; k < i; ++k) off += a.rank(k) * b.rank(d - k);
    return off;
}

ChainComplex complex_tensor(const ChainComplex& a, const ChainComplex& b, int degree_cap)
{
    const int top = a.top_degree() + b.top_degree();
    if (top > degree_cap)
        fail(ErrorKind::degree_cap, "tensor complex of degree " + std::to_string(top) + " exceeds the degree cap " +
                                        std::to_string(degree_cap));
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 0);
    for (int d = 0; d <= top; ++d)
        for (int i = 0; i <= d; ++i) ranks[static_cast<std::size_t>(d)] += a.rank(i) * b.rank(d - i);
    std::vector<IntegerMatrix> bd;
    for (int d = 1; d <= top; ++d) {
        IntegerMatrix m(ranks[static_cast<std::size_t>(d - 1)], ranks[static_cast<std::size_t>(d)]);
        for (int i = 0; i <= d; ++i) {
            const int j = d - i;
            const std::size_t na = a.rank(i), nb = b.rank(j);
            if (na == 0 || nb == 0) continue;
            const std::size_t col0 = tensor_offset(a, b, d, i);
            const std::int64_t sign = (i % 2 == 0) ? 1 : -1;
            if (i >= 1) {  // da (x) y lands in block (i-1, j)
                IntegerMatrix da = a.boundary(i);
                const std::size_t row0 = tensor_offset(a, b, d - 1, i - 1);
                for (std::size_t x = 0; x < na; ++x)
                    for (std::size_t xp = 0; xp < a.rank(i - 1); ++xp) {
                        std::int64_t c = da(xp, x);
                        if (c == 0) continue;
                        for (std::size_t y = 0; y < nb; ++y) m(row0 + xp * nb + y, col0 + x * nb + y) += c;
                    }
            }
            if (j >= 1) {  // (-1)^i x (x) dy lands in block (i, j-1)
                IntegerMatrix db = b.boundary(j);
                const std::size_t row0 = tensor_offset(a, b, d - 1, i);
                const std::size_t nbp = b.rank(j - 1);
                for (std::size_t x = 0; x < na; ++x)
                    for (std::size_t y = 0; y < nb; ++y)
                        for (std::size_t yp = 0; yp < nbp; ++yp) {
                            std::int64_t c = db(yp, y);
                            if (c != 0) m(row0 + x * nbp + yp, col0 + x * nb + y) += sign * c;
                        }
            }
        }
        bd.push_back(std::move(m));
    }
    return ChainComplex(ranks, bd, a.base_cell() * b.rank(0) + b.base_cell());
}

ChainMap identity_map(const ChainComplex& c)
{
    ChainMap f;
    for (int d = 0; d <= c.top_degree(); ++d) f.by_degree.push_back(IntegerMatrix::identity(c.rank(d)));
    return f;
}

ChainMap tensor_map(const ChainMap& f, const ChainComplex& fa, const ChainComplex& fb, const ChainMap& g,
                    const ChainComplex& ga, const ChainComplex& gb)
{
    auto block = [](const ChainMap& m, const ChainComplex& src, const ChainComplex& tgt, int d) {
        if (d < static_cast<int>(m.by_degree.size())) return m.by_degree[static_cast<std::size_t>(d)];
        return IntegerMatrix(tgt.rank(d), src.rank(d));
    };
    const int top = fa.top_degree() + ga.top_degree();
    ChainMap out;
    for (int d = 0; d <= top; ++d) {
        std::size_t rows = 0, cols = 0;
        for (int i = 0; i <= d; ++i) {
            rows += fb.rank(i) * gb.rank(d - i);
            cols += fa.rank(i) * ga.rank(d - i);
        }
        IntegerMatrix m(rows, cols);
        for (int i = 0; i <= d; ++i) {
            const int j = d - i;
            IntegerMatrix fi = block(f, fa, fb, i), gj = block(g, ga, gb, j);
            const std::size_t c0 = tensor_offset(fa, ga, d, i), r0 = tensor_offset(fb, gb, d, i);
            for (std::size_t x = 0; x < fa.rank(i); ++x)
                for (std::size_t y = 0; y < ga.rank(j); ++y)
                    for (std::size_t xp = 0; xp < fb.rank(i); ++xp) {
                        if (fi(xp, x) == 0) continue;
                        for (std::size_t yp = 0; yp < gb.rank(j); ++yp)
                            if (gj(yp, y) != 0)
                                m(r0 + xp * gb.rank(j) + yp, c0 + x * ga.rank(j) + y) += fi(xp, x) * gj(yp, y);
                    }
        }
        out.by_degree.push_back(std::move(m));
    }
    return out;
}

namespace {

// Block-diagonal assembly; `merge_base` identifies base 0-cells.
ChainComplex assemble(const std::vector<ChainComplex>& parts, bool merge_base)
{
    if (parts.empty()) fail(ErrorKind::invalid_argument, "empty list of complexes");
    int top = 0;
    for (const auto& p : parts) top = std::max(top, p.top_degree());
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 0);
    // index of each part's cell in the result; base cells of parts > 0 map onto part 0's base.
    std::vector<std::vector<std::vector<std::size_t>>> where(parts.size());
    for (std::size_t k = 0; k < parts.size(); ++k) {
        where[k].resize(static_cast<std::size_t>(top + 1));
        for (int d = 0; d <= top; ++d)
            for (std::size_t c = 0; c < parts[k].rank(d); ++c) {
                if (merge_base && d == 0 && k > 0 && c == parts[k].base_cell()) {
                    where[k][0].push_back(where[0][0][parts[0].base_cell()]);
                    continue;
                }
                where[k][static_cast<std::size_t>(d)].push_back(ranks[static_cast<std::size_t>(d)]++);
            }
    }
    std::vector<IntegerMatrix> bd;
    for (int d = 1; d <= top; ++d) {
        IntegerMatrix m(ranks[static_cast<std::size_t>(d - 1)], ranks[static_cast<std::size_t>(d)]);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            IntegerMatrix b = parts[k].boundary(d);
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    if (b(r, c) != 0)
                        m(where[k][static_cast<std::size_t>(d - 1)][r], where[k][static_cast<std::size_t>(d)][c]) += b(r, c);
        }
        bd.push_back(std::move(m));
    }
    return ChainComplex(ranks, bd, where[0][0].empty() ? 0 : where[0][0][parts[0].base_cell()]);
}

}  // namespace

ChainComplex complex_wedge(const std::vector<ChainComplex>& parts)
{
    for (const auto& p : parts)
        if (p.rank(0) == 0) fail(ErrorKind::invalid_argument, "wedge summand without a base 0-cell");
    return assemble(parts, true);
}

ChainComplex complex_disjoint_union(const std::vector<ChainComplex>& parts) { return assemble(parts, false); }

ChainComplex complex_connected_sum(const std::vector<ChainComplex>& parts)
{
    if (parts.size() < 2) fail(ErrorKind::invalid_argument, "connected sum needs at least two summands");
    const int n = parts.front().top_degree();
    for (const auto& p : parts)
        if (p.top_degree() != n || p.rank(n) == 0)
            fail(ErrorKind::invalid_argument, "connected-sum summands must share a top dimension with a top cell");
    if (n < 1) fail(ErrorKind::invalid_argument, "connected sum of 0-dimensional models");
    ChainComplex w = complex_wedge(parts);
    // Last top cell of each summand, in wedge order.
    std::vector<std::size_t> removed;
    std::size_t off = 0;
    for (const auto& p : parts) {
        off += p.rank(n);
        removed.push_back(off - 1);
    }
    IntegerMatrix top = w.boundary(n);
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < top.cols(); ++c)
        if (std::find(removed.begin(), removed.end(), c) == removed.end()) keep.push_back(c);
    IntegerMatrix m(top.rows(), keep.size() + 1);
    for (std::size_t r = 0; r < top.rows(); ++r) {
        for (std::size_t k = 0; k < keep.size(); ++k) m(r, k) = top(r, keep[k]);
        for (auto c : removed) m(r, keep.size()) += top(r, c);
    }
    std::vector<std::size_t> ranks = w.ranks();
    ranks[static_cast<std::size_t>(n)] = keep.size() + 1;
    std::vector<IntegerMatrix> bd;
    for (int d = 1; d < n; ++d) bd.push_back(w.boundary(d));
    bd.push_back(std::move(m));
    return ChainComplex(ranks, bd, w.base_cell());
}

ChainComplex boundary_of_thickened_hole(int n, const std::vector<int>& sphere_dims)
{
    if (n < 1) fail(ErrorKind::invalid_argument, "ambient dimension must be positive");
    for (int s : sphere_dims)
        if (s < 0 || s > n - 1)
            fail(ErrorKind::invalid_argument, "hole sphere dimension " + std::to_string(s) + " outside [0, " +
                                                  std::to_string(n - 1) + "]");
    if (sphere_dims.empty()) return complex_for_sphere(n - 1);
    std::vector<ChainComplex> pieces;
    for (int s : sphere_dims) pieces.push_back(complex_tensor(complex_for_sphere(s), complex_for_sphere(n - 1 - s)));
    if (pieces.size() == 1) return pieces.front();
    return complex_connected_sum(pieces);
}

ChainComplex double_mapping_cylinder(const ChainComplex& a, const ChainComplex& b, const ChainComplex& i,
                                     const ChainMap& f, const ChainMap& g)
{
    validate_chain_map(f, i, a);
    validate_chain_map(g, i, b);
    const int top = std::max({a.top_degree(), b.top_degree(), i.top_degree() + 1});
    auto map_at = [](const ChainMap& m, const ChainComplex& src, const ChainComplex& tgt, int d) {
        if (d >= 0 && d < static_cast<int>(m.by_degree.size())) return m.by_degree[static_cast<std::size_t>(d)];
        return IntegerMatrix(tgt.rank(d), src.rank(d));
    };
    std::vector<std::size_t> ranks;
    for (int j = 0; j <= top; ++j) ranks.push_back(a.rank(j) + b.rank(j) + i.rank(j - 1));
    std::vector<IntegerMatrix> bd;
    for (int j = 1; j <= top; ++j) {
        IntegerMatrix m(ranks[static_cast<std::size_t>(j - 1)], ranks[static_cast<std::size_t>(j)]);
        const std::size_t ra = a.rank(j - 1), rb = b.rank(j - 1);
        const std::size_t ca = a.rank(j), cb = b.rank(j);
        auto put = [&m](const IntegerMatrix& blk, std::size_t r0, std::size_t c0, std::int64_t sign) {
            for (std::size_t r = 0; r < blk.rows(); ++r)
                for (std::size_t c = 0; c < blk.cols(); ++c)
                    if (blk(r, c) != 0) m(r0 + r, c0 + c) += sign * blk(r, c);
        };
        put(a.boundary(j), 0, 0, 1);
        put(b.boundary(j), ra, ca, 1);
        put(map_at(f, i, a, j - 1), 0, ca + cb, 1);
        put(map_at(g, i, b, j - 1), ra, ca + cb, -1);
        put(i.boundary(j - 1), ra + rb, ca + cb, -1);
        bd.push_back(std::move(m));
    }
    return ChainComplex(ranks, bd, a.base_cell());
}

GradedModule complement_by_splitting(const GradedModule& boundary_homology, const GradedModule& neighbourhood_homology)
{
    const Coefficients& a = boundary_homology.coefficients();
    if (!(a == neighbourhood_homology.coefficients()))
        fail(ErrorKind::coefficient_mismatch, "complement_by_splitting: coefficient mismatch");
    if (!boundary_homology.is_free() || !neighbourhood_homology.is_free())
        fail(ErrorKind::precondition, "splitting requires free homology");
    GradedModule db = boundary_homology.reduced(), nb = neighbourhood_homology.reduced();
    GradedModule x(a);
    const int top = std::max(db.top_degree(), nb.top_degree());
    for (int d = 0; d <= top; ++d) {
        std::int64_t r = db.rank(d) - nb.rank(d);
        if (r < 0) fail(ErrorKind::structural, "neighbourhood homology does not split off in degree " + std::to_string(d));
        x.set(d, FgModule(a, r));
    }
    return x.unreduced();
}

}  // namespace sgm
