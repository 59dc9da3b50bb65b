#pragma once

#include <map>
#include <vector>

#include "sgm/algebra/coefficients.hpp"
#include "sgm/chain/chain_complex.hpp"
#include "sgm/ring/cohomology_ring.hpp"

namespace sgm {

using Simplex = std::vector<int>;  // strictly increasing vertex list

/// Simplicial complex on totally ordered integer vertices, closed under faces.
class OrderedSimplicialComplex {
  public:
    /// Closes the given simplices under taking faces. Vertex lists may be
    /// given in any order; repeated vertices are rejected.
    static OrderedSimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

    int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
    const std::vector<Simplex>& simplices(int d) const;
    std::size_t index_of(const Simplex& s) const;
    std::vector<Simplex> facets() const;

    /// Simplicial chain complex; simplices of each dimension in lexicographic order.
    ChainComplex chain_complex() const;

  private:
    std::vector<std::vector<Simplex>> by_dim_;
    std::map<Simplex, std::size_t> index_;
};

inline constexpr int kCupProductMaxDimension = 6;

/// Cohomology ring from the front-face/back-face cochain product. Works over
/// a field, or over Z when the integral cohomology is torsion-free.
CohomologyRing simplicial_cup_product(const OrderedSimplicialComplex& k, const Coefficients& coeffs);

/// Simplicial product K x L with the staircase triangulation (vertex (a, b)
/// numbered a * stride + b with stride > max vertex of L).
OrderedSimplicialComplex staircase_product(const OrderedSimplicialComplex& k, const OrderedSimplicialComplex& l);

/// Boundary of the standard d+1 simplex, a triangulated S^d.
OrderedSimplicialComplex simplex_boundary(int d);

}  // namespace sgm
