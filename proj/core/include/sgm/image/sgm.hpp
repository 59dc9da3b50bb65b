#pragma once

#include <string>
#include <vector>

#include "sgm/dga/dga.hpp"
#include "sgm/invariants/holes.hpp"
#include "sgm/invariants/vanishing.hpp"
#include "sgm/term/classify.hpp"

namespace sgm {

/// The image W of a special generic map into R^n: a boundary connected sum
/// of S^{l_j} x D^{n-l_j} pieces, or an n-disc with holes.
struct SgmImage {
    enum class Kind { handles, holes };
    Kind kind = Kind::handles;
    int n = 0;
    std::vector<int> l;
    HoleSpec holes;
    EmbeddingMode mode = EmbeddingMode::embedded;

    static SgmImage handles(int n, std::vector<int> l);
    static SgmImage disc_with_holes(int n, HoleSpec holes);
};

void validate_image(const SgmImage& img);

/// H_*(W).
GradedModule image_homology(const SgmImage& img, const Coefficients& coeffs);

/// H_j(M) = H_j(W) + H_{j-p}(W, dW) with p = m - n, the relative group by
/// Lefschetz duality H^{n-j+p}(W) and cohomology by universal coefficients.
/// M is the boundary of W x D^{p+1}.
GradedModule source_homology(const SgmImage& img, int m, const Coefficients& coeffs);

/// Same groups from the chain level: M = W x S^p u dW x D^{p+1} glued along
/// dW x S^p, computed as a double mapping cylinder of cellular models.
GradedModule source_homology_mv(const SgmImage& img, int m, const Coefficients& coeffs);

/// Homology of #_j (S^{l_j} x S^{m-l_j}); S^m for an empty list.
GradedModule sphere_product_sum_homology(int m, const std::vector<int>& l, const Coefficients& coeffs);

/// Free ranks of H_j and H_{m-j} agree for all j.
bool poincare_duality_holds(const GradedModule& h, int m);

struct NamedCheck {
    std::string name;
    std::string status;  // pass, fail, discrepancy, info
    std::string detail;
};

struct SourceReport {
    int m = 0;
    int n = 0;
    SgmImage image;
    GradedModule homology{Coefficients::integers()};
    GradedModule homology_mv{Coefficients::integers()};
    MasseyResult massey;
    Thm1Verdict thm1;
    std::vector<NamedCheck> checks;
    bool all_passed() const;
};

/// The stated rank of H_2(M) for the Borromean construction.
inline constexpr std::int64_t kStatedH2Rank = 3;

/// Borromean image (n = 6, three 3-sphere holes, embedded), m = 7.
SourceReport main_thm1_pipeline();

struct Remark1Verdict {
    bool excluded = false;
    std::string reason;
};

/// Simply connected closed 7-manifolds with a nonvanishing triple Massey
/// product admit no special generic map into R^n for n <= 5.
Remark1Verdict check_remark1_exclusion(int m, int n, bool has_nonvanishing_triple_massey, bool simply_connected);

}  // namespace sgm
