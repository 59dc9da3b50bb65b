#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgm/algebra/coefficients.hpp"
#include "sgm/algebra/graded_module.hpp"

namespace sgm {

/// Linear combination of basis classes: basis index -> nonzero coefficient.
using Combination = std::map<std::size_t, std::int64_t>;

struct RingClass {
    std::string label;
    int degree = 0;
};

/// Graded ring given by a basis and a table of structure constants. Products
/// with the unit are implicit; absent table entries are zero.
class CohomologyRing {
  public:
    CohomologyRing(Coefficients coeffs, int ambient_dim);

    /// Appends a basis class; the first degree-0 class added is the unit.
    std::size_t add_class(std::string label, int degree);
    void set_product(std::size_t a, std::size_t b, const Combination& value);

    const Coefficients& coefficients() const { return coeffs_; }
    int ambient_dim() const { return ambient_dim_; }
    const std::vector<RingClass>& basis() const { return basis_; }
    std::size_t unit() const;
    bool has_unit() const { return unit_.has_value(); }
    int degree(std::size_t i) const { return basis_.at(i).degree; }
    std::optional<std::size_t> find(const std::string& label) const;
    std::vector<std::size_t> classes_in_degree(int d) const;
    int top_degree() const;
    const std::map<std::pair<std::size_t, std::size_t>, Combination>& table() const { return products_; }

    Combination multiply(std::size_t a, std::size_t b) const;
    Combination multiply(const Combination& a, const Combination& b) const;
    Combination normalize(const Combination& c) const;

    /// Ranks of the underlying graded module.
    GradedModule additive_structure() const;

    /// First violated ring axiom (grading, graded commutativity,
    /// associativity over all basis triples), or nothing.
    std::optional<std::string> check_axioms() const;

    std::string combination_str(const Combination& c) const;
    /// Aligned multiplication table of positive-degree classes.
    std::string table_str() const;

  private:
    Coefficients coeffs_;
    int ambient_dim_;
    std::vector<RingClass> basis_;
    std::optional<std::size_t> unit_;
    std::map<std::pair<std::size_t, std::size_t>, Combination> products_;
};

/// Exterior algebra on `generators` classes of degree `degree` (odd), e.g.
/// the cohomology ring of a torus when degree = 1.
CohomologyRing exterior_algebra_ring(int generators, int degree, const Coefficients& coeffs);

}  // namespace sgm
