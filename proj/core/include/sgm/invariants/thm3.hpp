#pragma once

#include <vector>

#include "sgm/invariants/holes.hpp"
#include "sgm/ring/cohomology_ring.hpp"

namespace sgm {

enum class IndexMode {
    literal,     // middle-degree index sum_{j<a} (l0 - j) + (b - a), as written
    triangular,  // sum_{j<a} (r - j) + (b - a) with r = rank G_{(n-1)/2}
};

const char* to_string(IndexMode m);
IndexMode parse_index_mode(const std::string& s);

struct Thm3Params {
    int n = 0;
    int k = 0;
    Coefficients coeffs = Coefficients::integers();
    RankVector ranks;               // G_1 .. G_{n-1}
    std::vector<std::int64_t> a;    // a_1 .. a_l
    std::vector<std::int64_t> a0;   // a_{0,1} .. a_{0,l0}, n odd only
    IndexMode mode = IndexMode::literal;
};

/// l = sum_{j=1}^{floor((n-1)/2)} rank G_j rank G_{n-1-j}.
std::size_t thm3_sequence_length(int n, const RankVector& ranks);
/// Number of leading a_i forced to vanish: sum_{j=1}^{k-1} rank G_j rank G_{n-1-j}.
std::size_t thm3_zero_prefix(int n, int k, const RankVector& ranks);
/// l0 = (r - 1) r / 2 with r = rank G_{(n-1)/2}; 0 for even n.
std::size_t thm3_middle_length(int n, const RankVector& ranks);
/// 1-based middle index of the pair a < b in the chosen mode (unchecked).
std::size_t thm3_middle_index(std::size_t a, std::size_t b, std::size_t l0, std::size_t r, IndexMode mode);

/// Ring with basis 1 and e{d}_{i} (1 <= i <= rank G_d). For a1 < b1 with
/// a1 + b1 = n - 1:
///   e_{a1,a2} e_{b1,b2} = a_idx (e_{n-1,P(a1)+a2} + e_{n-1,P(b1)+b2}),
///   idx = sum_{j<a1} G_j G_{n-1-j} + G_{b1} (a2 - 1) + b2, P(d) = sum_{j<d} G_j;
/// for odd n the middle classes multiply through a_{0,*} and square to zero;
/// reversed products follow graded commutativity, all others vanish.
CohomologyRing thm3_ring(const Thm3Params& p);

/// Reads the coefficient sequences off the linking numbers of a hole spec
/// whose holes are single spheres and calls thm3_ring. The i-th sphere of
/// dimension n-d-1 (in hole order) carries the class e_{d,i}.
CohomologyRing ring_from_holes(int n, int k, const HoleSpec& spec, const Coefficients& coeffs,
                               IndexMode mode = IndexMode::literal);

/// The sequences ring_from_holes passes on.
Thm3Params thm3_params_from_holes(int n, int k, const HoleSpec& spec, const Coefficients& coeffs, IndexMode mode);

}  // namespace sgm
