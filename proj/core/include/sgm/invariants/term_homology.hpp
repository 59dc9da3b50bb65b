#pragma once

#include "sgm/algebra/graded_module.hpp"
#include "sgm/chain/chain_complex.hpp"
#include "sgm/term/term.hpp"

namespace sgm {

/// Closed-form homology: atoms by their stored homology (universal
/// coefficients for other rings), bouquets by reduced direct sum, products by
/// Kunneth, connected sums of n-manifolds by reduced sum in degrees 1..n-1
/// with a single bottom and top class.
GradedModule homology_of_term(const PolyhedronTerm& t, const Coefficients& coeffs);

/// Cellular chain model assembled with the chain-level wedge, tensor and
/// connected-sum constructions. Independent of `homology_of_term`.
ChainComplex term_chain_model(const PolyhedronTerm& t, SphereModel model = SphereModel::minimal);

struct ConnectivityReport {
    int connectivity;           // largest c with reduced H_i = 0 for i <= c
    bool homological_only;      // some atom is not simply connected
    std::string flagged_atom;   // the first such atom
};

ConnectivityReport connectivity_of_term(const PolyhedronTerm& t);

}  // namespace sgm
