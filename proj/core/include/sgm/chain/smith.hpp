#pragma once

#include <optional>
#include <vector>

#include "sgm/algebra/coefficients.hpp"
#include "sgm/chain/integer_matrix.hpp"
#include "sgm/integer.hpp"

namespace sgm {

struct SmithResult {
    /// Nonzero diagonal of the Smith form, d_1 | d_2 | ... (units included).
    std::vector<Integer> diagonal;
    /// The diagonal with units dropped.
    std::vector<Integer> invariants;
    std::size_t rank = 0;
};

/// Smith normal form over Z. Pivots on the entry of least absolute value;
/// the result is a function of the input only.
SmithResult smith_normal_form(const IntegerMatrix& m);

/// Smith form with unimodular transforms: left * m * right = diag(diagonal).
struct SmithDecomposition {
    std::vector<Integer> diagonal;  // length rank
    std::size_t rank = 0;
    std::vector<std::vector<Integer>> left;          // rows x rows
    std::vector<std::vector<Integer>> left_inverse;  // rows x rows
    std::vector<std::vector<Integer>> right;         // cols x cols
};

SmithDecomposition smith_decomposition(const IntegerMatrix& m);

/// Rank of `m` over the given ring (over Z this is the rational rank).
std::size_t rank_over(const IntegerMatrix& m, const Coefficients& coeffs);

/// Solutions of m * x = b over `coeffs`. Over Q the solution is returned
/// scaled: m * x = scale * b with scale > 0. Over Z/p entries lie in [0, p).
struct LinearSolution {
    std::vector<std::int64_t> x;
    std::int64_t scale = 1;
};
std::optional<LinearSolution> solve_linear(const IntegerMatrix& m, const std::vector<std::int64_t>& b,
                                           const Coefficients& coeffs);

/// Basis of the kernel of m over `coeffs` as columns (over Z: a basis of the
/// saturated kernel lattice).
std::vector<std::vector<std::int64_t>> kernel_basis(const IntegerMatrix& m, const Coefficients& coeffs);

}  // namespace sgm
