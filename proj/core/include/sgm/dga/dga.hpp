#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sgm/algebra/graded_module.hpp"
#include "sgm/chain/chain_complex.hpp"
#include "sgm/ring/cohomology_ring.hpp"

namespace sgm {

/// Finite-dimensional graded algebra with a degree +1 differential, given by
/// structure constants on a named basis. Products with the unit are implicit.
class FiniteDGA {
  public:
    explicit FiniteDGA(Coefficients coeffs) : coeffs_(coeffs) {}

    std::size_t add_generator(const std::string& name, int degree);
    void set_unit(std::size_t i);
    void set_differential(std::size_t x, const Combination& dx);
    void set_product(std::size_t a, std::size_t b, const Combination& value);
    void allow_noncommutative(bool on) { noncommutative_ = on; }

    const Coefficients& coefficients() const { return coeffs_; }
    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    int degree(std::size_t i) const { return degrees_.at(i); }
    std::optional<std::size_t> find(const std::string& name) const;
    std::optional<std::size_t> unit() const { return unit_; }
    bool noncommutative_allowed() const { return noncommutative_; }
    int top_degree() const;
    /// Basis indices of degree q, in insertion order.
    std::vector<std::size_t> in_degree(int q) const;

    Combination d(std::size_t x) const;
    Combination d(const Combination& c) const;
    Combination multiply(std::size_t a, std::size_t b) const;
    Combination multiply(const Combination& a, const Combination& b) const;
    Combination scale(const Combination& c, std::int64_t s) const;
    Combination add(const Combination& a, const Combination& b) const;
    Combination normalize(const Combination& c) const;
    /// Degree of a nonzero homogeneous combination; throws if inhomogeneous.
    int degree_of(const Combination& c) const;

    /// Matrix of d: A^q -> A^{q+1} in the in_degree bases.
    IntegerMatrix differential_matrix(int q) const;
    /// Coordinates of a combination concentrated in degree q, and back.
    std::vector<std::int64_t> coordinates(const Combination& c, int q) const;
    Combination from_coordinates(const std::vector<std::int64_t>& x, int q) const;

    std::string str(const Combination& c) const;
    const std::map<std::pair<std::size_t, std::size_t>, Combination>& products() const { return products_; }
    const std::map<std::size_t, Combination>& differentials() const { return diff_; }

  private:
    Coefficients coeffs_;
    std::vector<std::string> names_;
    std::vector<int> degrees_;
    std::map<std::string, std::size_t> index_;
    std::optional<std::size_t> unit_;
    bool noncommutative_ = false;
    std::map<std::size_t, Combination> diff_;
    std::map<std::pair<std::size_t, std::size_t>, Combination> products_;
};

struct DgaVerdict {
    bool valid = true;
    std::string violation;  // first violated identity with the offending basis elements
};

/// d d = 0, Leibniz on all basis pairs, unit, degree of products,
/// associativity on basis triples and (unless disabled) graded commutativity.
DgaVerdict validate_dga(const FiniteDGA& a);

/// Cohomology by Smith normal form of the differential; throws on an invalid DGA.
GradedModule dga_cohomology(const FiniteDGA& a);

/// The cochain complex as a chain complex: chain degree j holds A^{top-j}.
ChainComplex dga_as_chain_complex(const FiniteDGA& a);

enum class MasseyConvention {
    standard,  // dX = uv, dY = vw, Z = X w + (-1)^{|u|+1} u Y
    kraines,   // with a' = (-1)^{1+|a|} a: dX = u' v, dY = v' w, Z = X' w + u' Y
};

struct MasseyOptions {
    MasseyConvention convention = MasseyConvention::standard;
    /// When set, random cocycles of the right degree are added to X and Y.
    std::optional<std::uint64_t> perturb_seed;
};

struct MasseyResult {
    bool defined = false;
    std::string reason;
    int degree = 0;
    Combination representative;
    Combination x_primitive;
    Combination y_primitive;
    std::vector<Combination> indeterminacy_basis;  // independent modulo coboundaries
    bool indeterminacy_trivial = true;
    bool nonvanishing = false;
    /// Rational solves return scaled primitives; the representative is
    /// scale times the true one (nonvanishing is unaffected).
    std::int64_t scale = 1;
};

/// u, v, w must be cocycles; defined iff uv and vw are coboundaries.
MasseyResult triple_massey(const FiniteDGA& a, const Combination& u, const Combination& v, const Combination& w,
                           const MasseyOptions& options = {});

/// Change of basis per degree: the columns of forward[q] are the new basis
/// vectors in old coordinates; inverse[q] is its inverse. Degree 0 is fixed.
struct BasisChange {
    std::map<int, IntegerMatrix> forward;
    std::map<int, IntegerMatrix> inverse;
};

/// Random unimodular change built from `operations` elementary moves per degree.
BasisChange random_basis_change(const FiniteDGA& a, std::mt19937_64& rng, int operations = 6);
FiniteDGA change_basis(const FiniteDGA& a, const BasisChange& change);
Combination to_new_basis(const FiniteDGA& a, const BasisChange& change, const Combination& c);

/// Finite model over Z for the complement of a 3-dimensional Borromean link
/// in a 6-disc: degree 2 cocycles x1, x2, x3; degree 3 y12, y13, y23 with
/// d y_ij = x_i x_j = w_ij; degree 5 v1 = x1 y23, v2 = x2 y13, v3 = x3 y12
/// with d v_i = t = x1 x2 x3 in degree 6. An algebraic model adequate for
/// triple Massey products, not the full cochain algebra of the complement.
FiniteDGA borromean_fixture(const Coefficients& coeffs = Coefficients::integers());

}  // namespace sgm
