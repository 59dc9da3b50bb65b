#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "sgm/algebra/coefficients.hpp"

namespace sgm {

inline constexpr int kDefaultDegreeCap = 32;

/// Finitely generated module over a PID: free rank plus invariant factors
/// d_1 | d_2 | ... with every d_i >= 2. Over a field the factor list is
/// always empty; torsion passed in is discarded.
class FgModule {
  public:
    explicit FgModule(Coefficients coeffs, std::int64_t free_rank = 0,
                      std::vector<std::int64_t> torsion = {});

    static FgModule zero(Coefficients coeffs) { return FgModule(coeffs); }
    static FgModule free(Coefficients coeffs, std::int64_t rank) { return FgModule(coeffs, rank); }

    const Coefficients& coefficients() const { return coeffs_; }
    std::int64_t free_rank() const { return free_rank_; }
    const std::vector<std::int64_t>& invariant_factors() const { return factors_; }
    bool is_zero() const { return free_rank_ == 0 && factors_.empty(); }
    bool is_free() const { return factors_.empty(); }

    std::string str() const;

    friend bool operator==(const FgModule& a, const FgModule& b)
    {
        return a.coeffs_ == b.coeffs_ && a.free_rank_ == b.free_rank_ && a.factors_ == b.factors_;
    }

  private:
    Coefficients coeffs_;
    std::int64_t free_rank_;
    std::vector<std::int64_t> factors_;
};

/// Rewrites an arbitrary list of positive integers as the divisibility chain
/// of diag(values), dropping units.
std::vector<std::int64_t> normalize_invariant_factors(std::vector<std::int64_t> values);

FgModule module_sum(const FgModule& a, const FgModule& b);
FgModule module_tensor(const FgModule& a, const FgModule& b);
FgModule module_tor(const FgModule& a, const FgModule& b);

/// Graded module with finitely many nonzero degrees, all in [0, degree_cap].
class GradedModule {
  public:
    explicit GradedModule(Coefficients coeffs, int degree_cap = kDefaultDegreeCap);
    GradedModule(Coefficients coeffs, const std::map<int, FgModule>& by_degree,
                 int degree_cap = kDefaultDegreeCap);

    /// Free module with the given ranks by degree.
    static GradedModule free(Coefficients coeffs, const std::map<int, std::int64_t>& ranks,
                             int degree_cap = kDefaultDegreeCap);
    static GradedModule point(Coefficients coeffs) { return free(coeffs, {{0, 1}}); }

    const Coefficients& coefficients() const { return coeffs_; }
    int degree_cap() const { return cap_; }
    /// Trivial module for degrees not listed.
    FgModule at(int degree) const;
    std::int64_t rank(int degree) const { return at(degree).free_rank(); }
    const std::map<int, FgModule>& by_degree() const { return by_degree_; }
    /// Top nonzero degree, or -1 for the zero module.
    int top_degree() const;
    bool is_free() const;
    std::int64_t total_rank() const;

    /// Replaces degree d; zero modules are removed.
    void set(int degree, const FgModule& m);
    void add(int degree, const FgModule& m);

    /// Reduced version: degree-0 free rank drops by one (requires rank >= 1).
    GradedModule reduced() const;
    /// Inverse of `reduced`.
    GradedModule unreduced() const;

    std::string str() const;

    friend bool operator==(const GradedModule& a, const GradedModule& b)
    {
        return a.coeffs_ == b.coeffs_ && a.by_degree_ == b.by_degree_;
    }

  private:
    Coefficients coeffs_;
    int cap_;
    std::map<int, FgModule> by_degree_;
};

std::ostream& operator<<(std::ostream& os, const FgModule& m);
std::ostream& operator<<(std::ostream& os, const GradedModule& m);

/// degree d: sum over i+j=d of a_i (x) b_j plus sum over i+j=d-1 of Tor(a_i, b_j).
GradedModule graded_kunneth(const GradedModule& a, const GradedModule& b,
                            int degree_cap = kDefaultDegreeCap);

/// Direct sum in every degree.
GradedModule graded_sum(const GradedModule& a, const GradedModule& b);

/// Homology over `target` from integral homology by universal coefficients:
/// H_q(X;A) = H_q (x) A + Tor(H_{q-1}, A).
GradedModule change_coefficients(const GradedModule& integral, const Coefficients& target);

/// Cohomology from homology by universal coefficients (same ring):
/// H^q = Hom(H_q, A) + Ext(H_{q-1}, A).
GradedModule cohomology_from_homology(const GradedModule& homology);

}  // namespace sgm
