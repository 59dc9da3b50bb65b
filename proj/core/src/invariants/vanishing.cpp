#include "sgm/invariants/vanishing.hpp"

#include <algorithm>

#include "sgm/error.hpp"

namespace sgm {

namespace {

struct Search {
    const CohomologyRing& ring;
    const std::vector<std::size_t>& classes;
    int n;
    int cap;
    Thm1Verdict& out;
    std::vector<std::size_t> chosen;

    // Returns true once a witness is found.
    bool step(std::size_t from, const Combination& partial, int degree)
    {
        if (degree >= n) {
            ++out.products_checked;
            if (partial.empty()) return false;
            for (auto i : chosen) out.witness.push_back(ring.basis()[i].label);
            out.witness_value = ring.combination_str(partial);
            out.pass = false;
            return true;
        }
        if (static_cast<int>(chosen.size()) >= cap) {
            out.complete = false;
            return false;
        }
        for (std::size_t c = from; c < classes.size(); ++c) {
            const std::size_t id = classes[c];
            Combination next = chosen.empty() ? Combination{{id, 1}} : ring.multiply(partial, Combination{{id, 1}});
            next = ring.normalize(next);
            if (next.empty()) {
                ++out.products_checked;
                continue;
            }
            chosen.push_back(id);
            if (step(c, next, degree + ring.degree(id))) return true;
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

Thm1Verdict check_thm1_vanishing(const CohomologyRing& ring, int m, int n, std::optional<int> max_factors)
{
    if (!(m > n && n >= 1)) fail(ErrorKind::precondition, "the vanishing check needs m > n >= 1");
    if (max_factors && *max_factors < 1) fail(ErrorKind::invalid_argument, "the factor cap must be positive");
    Thm1Verdict out;
    std::vector<std::size_t> classes;
    int dmin = 0;
    for (std::size_t i = 0; i < ring.basis().size(); ++i) {
        const int d = ring.degree(i);
        if (d >= 1 && d <= m - n) {
            classes.push_back(i);
            dmin = dmin == 0 ? d : std::min(dmin, d);
        }
    }
    if (classes.empty()) {
        out.vacuous = true;
        out.factor_cap = max_factors.value_or(0);
        return out;
    }
    out.factor_cap = max_factors.value_or((n + dmin - 1) / dmin);
    Search s{ring, classes, n, out.factor_cap, out, {}};
    s.step(0, Combination{}, 0);
    if (!out.pass) out.complete = true;
    return out;
}

const char* to_string(MasseyDegreeStatus s)
{
    switch (s) {
    case MasseyDegreeStatus::pass: return "pass";
    case MasseyDegreeStatus::not_decided: return "not_decided";
    case MasseyDegreeStatus::precondition_failed: return "precondition_failed";
    }
    return "?";
}

MasseyDegreeVerdict massey_vanish_by_degree(int n, int k, const RankVector& ranks)
{
    for (const auto& [d, r] : ranks) {
        if (r == 0) continue;
        if (d >= 1 && d < k)
            return {MasseyDegreeStatus::precondition_failed,
                    "rank G_" + std::to_string(d) + " = " + std::to_string(r) + " is nonzero below degree k = " +
                        std::to_string(k)};
        if (d >= n)
            return {MasseyDegreeStatus::precondition_failed,
                    "rank G_" + std::to_string(d) + " = " + std::to_string(r) + " is nonzero at degree >= n = " +
                        std::to_string(n)};
    }
    const int low = 3 * k - 1;
    if (low > n - 1)
        return {MasseyDegreeStatus::pass, "3k-1 = " + std::to_string(low) + " > n-1 = " + std::to_string(n - 1) +
                                              ": every triple product lands above the top nontrivial degree"};
    return {MasseyDegreeStatus::not_decided, "3k-1 = " + std::to_string(low) + " <= n-1 = " + std::to_string(n - 1) +
                                                 ": degrees alone do not force vanishing"};
}

}  // namespace sgm
