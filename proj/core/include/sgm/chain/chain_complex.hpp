#pragma once

#include <cstdint>
#include <vector>

#include "sgm/algebra/graded_module.hpp"
#include "sgm/chain/integer_matrix.hpp"

namespace sgm {

/// Finite chain complex of free abelian groups. `boundary(d)` maps degree-d
/// chains to degree-(d-1) chains; boundary(0) is the 0 x rank(0) matrix.
/// Construction validates composable sizes and that consecutive boundaries
/// compose to zero. A marked base 0-cell is carried for wedges.
class ChainComplex {
  public:
    ChainComplex() = default;
    /// boundaries[d] for d = 1..top is given as boundaries[d - 1].
    ChainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> boundaries, std::size_t base_cell = 0);

    static ChainComplex point();

    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    std::size_t rank(int d) const;
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    std::size_t total_cells() const;
    /// Zero matrix of the right shape outside [1, top].
    IntegerMatrix boundary(int d) const;
    std::size_t base_cell() const { return base_; }

  private:
    std::vector<std::size_t> ranks_;
    std::vector<IntegerMatrix> boundaries_;  // boundaries_[d-1] = boundary(d)
    std::size_t base_ = 0;
};

/// Per-degree matrices of a chain map f: source -> target.
struct ChainMap {
    std::vector<IntegerMatrix> by_degree;  // rows = target.rank(d), cols = source.rank(d)
};

/// Verifies sizes and the chain-map identity; throws a structural error.
void validate_chain_map(const ChainMap& f, const ChainComplex& source, const ChainComplex& target);

/// ker(boundary d) / im(boundary d+1) via Smith normal form.
GradedModule homology(const ChainComplex& c, const Coefficients& coeffs);
/// One Smith reduction per degree shared across several coefficient rings.
std::vector<GradedModule> homology_multi(const ChainComplex& c, const std::vector<Coefficients>& coeffs);

/// Homology at a single group from the incoming and outgoing maps
/// (incoming: rank x prev, outgoing: next x rank).
FgModule homology_at(std::size_t rank, const IntegerMatrix& outgoing, const IntegerMatrix& incoming,
                     const Coefficients& coeffs);

enum class SphereModel {
    minimal,      // one 0-cell and one d-cell
    hemispheres,  // two cells in every degree 0..d
};

/// CW chain complex of S^d; d = 0 is the one-point complex.
ChainComplex complex_for_sphere(int d, SphereModel model = SphereModel::minimal);

/// Product cell structure: (a (x) b)_d = sum over i of a_i (x) b_{d-i}, with
/// boundary d(x (x) y) = dx (x) y + (-1)^{|x|} x (x) dy. Cell (x, y) of
/// degree d sits at offset(d, |x|) + x * b.rank(d - |x|) + y.
ChainComplex complex_tensor(const ChainComplex& a, const ChainComplex& b, int degree_cap = kDefaultDegreeCap);
std::size_t tensor_offset(const ChainComplex& a, const ChainComplex& b, int d, int i);

/// Tensor of chain maps, matching the cell order of complex_tensor.
ChainMap tensor_map(const ChainMap& f, const ChainComplex& fa, const ChainComplex& fb, const ChainMap& g,
                    const ChainComplex& ga, const ChainComplex& gb);
ChainMap identity_map(const ChainComplex& c);

/// Identifies the base 0-cells of all inputs.
ChainComplex complex_wedge(const std::vector<ChainComplex>& parts);

/// Disjoint union; the base cell is that of the first part.
ChainComplex complex_disjoint_union(const std::vector<ChainComplex>& parts);

/// Connected sum of closed oriented n-dimensional models: wedge the
/// summands, delete the last n-cell of each and attach one new n-cell whose
/// boundary is the sum of the deleted boundaries.
ChainComplex complex_connected_sum(const std::vector<ChainComplex>& parts);

/// Model of the boundary of a regular neighbourhood, in an n-manifold, of a
/// bouquet of spheres of the given dimensions: the connected sum of
/// S^s x S^{n-s-1}; S^{n-1} for the point hole.
ChainComplex boundary_of_thickened_hole(int n, const std::vector<int>& sphere_dims);

/// Homotopy pushout of A <-f- I -g-> B: degree j is A_j + B_j + I_{j-1}
/// with d(a, b, x) = (da + f x, db - g x, -dx).
ChainComplex double_mapping_cylinder(const ChainComplex& a, const ChainComplex& b, const ChainComplex& i,
                                     const ChainMap& f, const ChainMap& g);

/// Reduced homology of the complement X in a contractible ambient space
/// D = N u X with N n X = boundary N, read off the split exact sequence
/// H~(boundary N) = H~(N) + H~(X). Both inputs must be free.
GradedModule complement_by_splitting(const GradedModule& boundary_homology, const GradedModule& neighbourhood_homology);

}  // namespace sgm
