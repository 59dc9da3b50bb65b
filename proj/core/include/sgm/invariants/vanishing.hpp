#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgm/invariants/holes.hpp"
#include "sgm/ring/cohomology_ring.hpp"

namespace sgm {

struct Thm1Verdict {
    bool pass = true;
    bool vacuous = false;        // no positive-degree class of degree <= m-n
    bool complete = true;        // the factor cap reached every minimal product
    int factor_cap = 0;
    std::size_t products_checked = 0;
    std::vector<std::string> witness;  // labels of a nonzero product
    std::string witness_value;
};

/// Searches products of basis classes of degree 1..m-n whose degrees sum to
/// at least n. Only minimal such products are expanded (a longer product
/// contains a minimal one as a factor up to sign), and zero partial products
/// are pruned. Without `max_factors` the cap is ceil(n / smallest degree),
/// which makes the search complete.
Thm1Verdict check_thm1_vanishing(const CohomologyRing& ring, int m, int n,
                                 std::optional<int> max_factors = std::nullopt);

enum class MasseyDegreeStatus { pass, not_decided, precondition_failed };

const char* to_string(MasseyDegreeStatus s);

struct MasseyDegreeVerdict {
    MasseyDegreeStatus status;
    std::string certificate;
};

/// Triple products of classes of degree >= k land in degree >= 3k - 1; with
/// ranks trivial in degrees >= n they vanish once 3k - 1 > n - 1.
MasseyDegreeVerdict massey_vanish_by_degree(int n, int k, const RankVector& ranks);

}  // namespace sgm
