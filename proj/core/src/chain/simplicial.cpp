#include "sgm/chain/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "sgm/chain/smith.hpp"
#include "sgm/error.hpp"
#include "sgm/integer.hpp"

namespace sgm {

OrderedSimplicialComplex OrderedSimplicialComplex::from_simplices(const std::vector<Simplex>& simplices)
{
    std::set<Simplex> all;
    for (Simplex s : simplices) {
        if (s.empty()) fail(ErrorKind::invalid_argument, "empty simplex");
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(ErrorKind::invalid_argument, "simplex with a repeated vertex");
        if (s.size() > 24) fail(ErrorKind::invalid_argument, "simplex dimension too large");
        const unsigned n = static_cast<unsigned>(s.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Simplex f;
            for (unsigned i = 0; i < n; ++i)
                if (mask & (1u << i)) f.push_back(s[i]);
            all.insert(std::move(f));
        }
    }
    OrderedSimplicialComplex k;
    for (const auto& s : all) {
        std::size_t d = s.size() - 1;
        if (k.by_dim_.size() <= d) k.by_dim_.resize(d + 1);
        k.by_dim_[d].push_back(s);
    }
    for (auto& layer : k.by_dim_) {
        std::sort(layer.begin(), layer.end());
        for (std::size_t i = 0; i < layer.size(); ++i) k.index_[layer[i]] = i;
    }
    return k;
}

const std::vector<Simplex>& OrderedSimplicialComplex::simplices(int d) const
{
    static const std::vector<Simplex> none;
    if (d < 0 || d > dimension()) return none;
    return by_dim_[static_cast<std::size_t>(d)];
}

std::size_t OrderedSimplicialComplex::index_of(const Simplex& s) const
{
    auto it = index_.find(s);
    if (it == index_.end()) fail(ErrorKind::invalid_argument, "simplex not in complex");
    return it->second;
}

std::vector<Simplex> OrderedSimplicialComplex::facets() const
{
    std::vector<Simplex> out;
    for (int d = 0; d <= dimension(); ++d)
        for (const auto& s : simplices(d)) {
            bool maximal = true;
            for (const auto& t : simplices(d + 1))
                if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
                    maximal = false;
                    break;
                }
            if (maximal) out.push_back(s);
        }
    return out;
}

ChainComplex OrderedSimplicialComplex::chain_complex() const
{
    if (by_dim_.empty()) fail(ErrorKind::invalid_argument, "empty simplicial complex");
    std::vector<std::size_t> ranks;
    for (const auto& layer : by_dim_) ranks.push_back(layer.size());
    std::vector<IntegerMatrix> bd;
    for (int d = 1; d <= dimension(); ++d) {
        IntegerMatrix m(ranks[static_cast<std::size_t>(d - 1)], ranks[static_cast<std::size_t>(d)]);
        const auto& layer = simplices(d);
        for (std::size_t c = 0; c < layer.size(); ++c)
            for (std::size_t i = 0; i < layer[c].size(); ++i) {
                Simplex face = layer[c];
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                m(index_of(face), c) += (i % 2 == 0) ? 1 : -1;
            }
        bd.push_back(std::move(m));
    }
    return ChainComplex(ranks, bd);
}

namespace {

// Basis of H^q as cocycles plus a map from cocycles to coordinates.
struct CohomologyBasis {
    std::vector<std::vector<std::int64_t>> reps;
    // coordinates(c) for a cocycle c
    std::function<std::vector<std::int64_t>(const std::vector<std::int64_t>&)> coordinates;
};

CohomologyBasis integral_basis(const IntegerMatrix& delta_out, const IntegerMatrix& delta_in, bool allow_torsion)
{
    const std::size_t n = delta_out.cols();
    auto kernel = kernel_basis(delta_out, Coefficients::integers());
    const std::size_t z = kernel.size();
    IntegerMatrix kmat(n, z);
    for (std::size_t j = 0; j < z; ++j)
        for (std::size_t i = 0; i < n; ++i) kmat(i, j) = kernel[j][i];
    // kmat is saturated: its Smith form is [I; 0], so left transform gives coordinates.
    auto kdec = smith_decomposition(kmat);
    auto kernel_coords = [kdec, z, n](const std::vector<std::int64_t>& c) {
        std::vector<Integer> lc(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (c[j] != 0) lc[i] += kdec.left[i][j] * c[j];
        for (std::size_t i = z; i < n; ++i)
            if (lc[i] != 0) fail(ErrorKind::internal, "cochain is not a cocycle");
        std::vector<Integer> x(z, 0);
        for (std::size_t i = 0; i < z; ++i)
            for (std::size_t j = 0; j < z; ++j) x[i] += kdec.right[i][j] * lc[j];
        return x;
    };
    IntegerMatrix x(z, delta_in.cols());
    for (std::size_t c = 0; c < delta_in.cols(); ++c) {
        std::vector<std::int64_t> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = delta_in(i, c);
        auto xc = kernel_coords(col);
        for (std::size_t i = 0; i < z; ++i) x(i, c) = to_int64(xc[i]);
    }
    auto qdec = smith_decomposition(x);
    for (const auto& d : qdec.diagonal)
        if (d != 1 && !allow_torsion)
            fail(ErrorKind::unsupported, "integral cohomology has torsion; compute over a field instead");
    CohomologyBasis out;
    for (std::size_t j = qdec.rank; j < z; ++j) {
        std::vector<std::int64_t> rep(n, 0);
        for (std::size_t i = 0; i < z; ++i) {
            std::int64_t g = to_int64(qdec.left_inverse[i][j]);
            if (g == 0) continue;
            for (std::size_t r = 0; r < n; ++r) rep[r] = checked_add(rep[r], checked_mul(g, kernel[i][r]));
        }
        out.reps.push_back(std::move(rep));
    }
    const std::size_t r = qdec.rank;
    out.coordinates = [kernel_coords, qdec, r, z](const std::vector<std::int64_t>& c) {
        auto xc = kernel_coords(c);
        std::vector<std::int64_t> coords;
        for (std::size_t i = r; i < z; ++i) {
            Integer acc = 0;
            for (std::size_t j = 0; j < z; ++j) acc += qdec.left[i][j] * xc[j];
            coords.push_back(to_int64(acc));
        }
        return coords;
    };
    return out;
}

CohomologyBasis field_basis(const IntegerMatrix& delta_out, const IntegerMatrix& delta_in, const Coefficients& a)
{
    const std::size_t n = delta_out.cols();
    auto kernel = kernel_basis(delta_out, a);
    // Greedy: coboundary columns first, then kernel vectors that raise the rank.
    std::vector<std::vector<std::int64_t>> cols;
    auto rank_of = [&](const std::vector<std::vector<std::int64_t>>& cs) {
        IntegerMatrix m(n, cs.size());
        for (std::size_t j = 0; j < cs.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) m(i, j) = cs[j][i];
        return rank_over(m, a);
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < delta_in.cols(); ++c) {
        std::vector<std::int64_t> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = a.reduce(delta_in(i, c));
        cols.push_back(col);
        if (std::size_t r = rank_of(cols); r > rank) rank = r;
        else cols.pop_back();
    }
    const std::size_t boundary_rank = cols.size();
    CohomologyBasis out;
    for (const auto& k : kernel) {
        cols.push_back(k);
        if (std::size_t r = rank_of(cols); r > rank) {
            rank = r;
            out.reps.push_back(k);
        } else {
            cols.pop_back();
        }
    }
    IntegerMatrix m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    out.coordinates = [m, a, boundary_rank](const std::vector<std::int64_t>& c) {
        auto s = solve_linear(m, c, a);
        if (!s) fail(ErrorKind::internal, "cochain is not a cocycle");
        return std::vector<std::int64_t>(s->x.begin() + static_cast<std::ptrdiff_t>(boundary_rank), s->x.end());
    };
    return out;
}

}  // namespace

CohomologyRing simplicial_cup_product(const OrderedSimplicialComplex& k, const Coefficients& coeffs)
{
    const int dim = k.dimension();
    if (dim > kCupProductMaxDimension)
        fail(ErrorKind::unsupported, "cup-product oracle limited to dimension " + std::to_string(kCupProductMaxDimension));
    ChainComplex c = k.chain_complex();
    std::vector<CohomologyBasis> bases;
    for (int q = 0; q <= dim; ++q) {
        IntegerMatrix out = c.boundary(q + 1).transposed();  // delta_q
        IntegerMatrix in = c.boundary(q).transposed();       // delta_{q-1}
        if (coeffs.is_field() && coeffs.kind() == Coefficients::Kind::mod_p)
            bases.push_back(field_basis(out, in, coeffs));
        else
            bases.push_back(integral_basis(out, in, coeffs.kind() == Coefficients::Kind::rationals));
    }
    if (bases[0].reps.size() != 1) fail(ErrorKind::unsupported, "cup-product oracle requires a connected complex");
    bases[0].reps[0].assign(k.simplices(0).size(), 1);

    CohomologyRing ring(coeffs, dim);
    std::vector<std::vector<std::size_t>> ids(static_cast<std::size_t>(dim + 1));
    for (int q = 0; q <= dim; ++q)
        for (std::size_t i = 0; i < bases[static_cast<std::size_t>(q)].reps.size(); ++i)
            ids[static_cast<std::size_t>(q)].push_back(
                ring.add_class(q == 0 ? "1" : "e" + std::to_string(q) + "_" + std::to_string(i + 1), q));

    for (int p = 1; p <= dim; ++p)
        for (int q = 1; p + q <= dim; ++q) {
            const auto& top = k.simplices(p + q);
            for (std::size_t i = 0; i < ids[static_cast<std::size_t>(p)].size(); ++i)
                for (std::size_t j = 0; j < ids[static_cast<std::size_t>(q)].size(); ++j) {
                    const auto& a = bases[static_cast<std::size_t>(p)].reps[i];
                    const auto& b = bases[static_cast<std::size_t>(q)].reps[j];
                    std::vector<std::int64_t> cup(top.size(), 0);
                    for (std::size_t s = 0; s < top.size(); ++s) {
                        Simplex front(top[s].begin(), top[s].begin() + p + 1);
                        Simplex back(top[s].begin() + p, top[s].end());
                        std::int64_t x = a[k.index_of(front)];
                        if (x == 0) continue;
                        cup[s] = coeffs.reduce(checked_mul(x, b[k.index_of(back)]));
                    }
                    auto coords = bases[static_cast<std::size_t>(p + q)].coordinates(cup);
                    Combination value;
                    for (std::size_t t = 0; t < coords.size(); ++t)
                        if (coords[t] != 0) value[ids[static_cast<std::size_t>(p + q)][t]] = coords[t];
                    ring.set_product(ids[static_cast<std::size_t>(p)][i], ids[static_cast<std::size_t>(q)][j], value);
                }
        }
    return ring;
}

OrderedSimplicialComplex staircase_product(const OrderedSimplicialComplex& k, const OrderedSimplicialComplex& l)
{
    int stride = 0;
    for (const auto& v : l.simplices(0)) stride = std::max(stride, v[0] + 1);
    std::vector<Simplex> out;
    for (const auto& s : k.facets())
        for (const auto& t : l.facets()) {
            // Monotone lattice paths from (0,0) to (|s|-1, |t|-1).
            const std::size_t p = s.size() - 1, q = t.size() - 1;
            const std::size_t steps = p + q;
            for (unsigned mask = 0; mask < (1u << steps); ++mask) {
                if (static_cast<std::size_t>(__builtin_popcount(mask)) != p) continue;
                Simplex simplex;
                std::size_t i = 0, j = 0;
                simplex.push_back(s[i] * stride + t[j]);
                for (std::size_t step = 0; step < steps; ++step) {
                    if (mask & (1u << step)) ++i;
                    else ++j;
                    simplex.push_back(s[i] * stride + t[j]);
                }
                out.push_back(std::move(simplex));
            }
        }
    return OrderedSimplicialComplex::from_simplices(out);
}

OrderedSimplicialComplex simplex_boundary(int d)
{
    if (d < 0) fail(ErrorKind::invalid_argument, "negative sphere dimension");
    std::vector<Simplex> faces;
    for (int omit = 0; omit <= d + 1; ++omit) {
        Simplex f;
        for (int v = 0; v <= d + 1; ++v)
            if (v != omit) f.push_back(v);
        faces.push_back(std::move(f));
    }
    return OrderedSimplicialComplex::from_simplices(faces);
}

}  // namespace sgm
