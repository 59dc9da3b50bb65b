#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgm/term/term.hpp"

namespace sgm {

enum class EmbeddingMode { immersed, embedded };

const char* to_string(EmbeddingMode m);  // "SIE" / "SEE"

struct SieSeeClassification {
    EmbeddingMode mode;
    bool essentially = false;       // holes present
    bool very_essentially = false;  // every hole a bouquet of spheres or a point
    PolyhedronTerm host;
    std::vector<PolyhedronTerm> holes;
    std::vector<std::string> notes;
    std::string label() const;
};

/// `holes`: removed regular neighbourhoods, as terms. When `generators` is
/// given, the host and every hole must be built from those atoms only.
SieSeeClassification classify_sie_see(const PolyhedronTerm& term, EmbeddingMode mode,
                                      const std::vector<PolyhedronTerm>& holes = {},
                                      const std::optional<std::vector<AtomType>>& generators = std::nullopt);

enum class VerdictStatus { accept, reject, no_constraint };

const char* to_string(VerdictStatus s);

struct ClassifierVerdict {
    VerdictStatus status;
    std::string witness;  // offending subterm or atom on rejection
    std::string reason;
};

/// Normal form for n <= 3k: an iterated bouquet of pieces, each a product of
/// a homotopy-sphere atom with a homotopy-sphere atom or a bouquet of them,
/// or a connected sum of root atoms (a single atom included). Root atoms
/// must be (k-1)-connected. For n > 3k there is no constraint.
ClassifierVerdict classify_thm2_normal_form(const PolyhedronTerm& term, int n, int k);

/// Atom whitelist for (n, k) in {(5,2), (6,2)}. Homotopy spheres always pass.
///   (5,2): a dim-4 connected sum of copies of S^2 x S^2.
///   (6,2) SEE: that, or a dim-5 closed simply connected spin manifold.
///   (6,2) SIE: a dim-4 closed simply connected manifold of signature 0, or
///              a dim-5 closed simply connected spin manifold.
ClassifierVerdict validate_root_thm4_thm5(const std::vector<AtomType>& atoms, int n, int k, EmbeddingMode mode);

/// Lookup rule for "connected sum of copies of S^2 x S^2": dim 4, closed,
/// simply connected, spin, signature 0.
bool is_s2xs2_sum_type(const AtomType& a);

}  // namespace sgm
