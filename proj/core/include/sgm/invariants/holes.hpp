#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sgm/algebra/graded_module.hpp"

namespace sgm {

/// Ranks G_j by degree; absent degrees are zero.
using RankVector = std::map<int, std::int64_t>;

struct SummandRef {
    std::size_t hole = 0;
    std::size_t index = 0;
    auto operator<=>(const SummandRef&) const = default;
};

/// Holes of a disc, each a bouquet of spheres given by their dimensions (an
/// empty list is a point hole), plus linking numbers between summands.
struct HoleSpec {
    std::vector<std::vector<int>> holes;
    std::map<std::pair<SummandRef, SummandRef>, std::int64_t> linking;  // keys ordered first < second

    void set_linking(SummandRef a, SummandRef b, std::int64_t value);
    std::int64_t linking_of(SummandRef a, SummandRef b) const;
    std::size_t summand_count() const;
    friend bool operator==(const HoleSpec&, const HoleSpec&) = default;
};

/// Checks sphere dimensions (1 <= s <= n-2), summand references and that
/// linking is only given on pairs of complementary dimension s + s' = n - 1.
void validate_hole_spec(int n, const HoleSpec& spec);

struct DiscHomology {
    GradedModule homology;
    std::vector<std::string> warnings;
};

/// H_0 = 1, H_j = number of (n-j-1)-sphere summands for 1 <= j <= n-2,
/// H_{n-1} = number of holes; all free. Warns for spheres above n-k-1.
DiscHomology disc_with_holes_homology(int n, int k, const HoleSpec& spec, const Coefficients& coeffs);

/// Chain-level value: the split sequence for D = N u X applied to homology
/// computed from chain models of the hole neighbourhoods and their boundaries.
GradedModule disc_with_holes_oracle(int n, const HoleSpec& spec, const Coefficients& coeffs);

/// One sphere of dimension n-j-1 per unit of G_j (j <= n-2, in increasing
/// j), grouped into exactly G_{n-1} holes; the first hole takes the surplus.
HoleSpec realize_ranks(int n, int k, const RankVector& ranks);

std::string hole_spec_str(const HoleSpec& spec);
std::string rank_vector_str(const RankVector& r);

}  // namespace sgm
