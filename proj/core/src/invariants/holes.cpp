#include "sgm/invariants/holes.hpp"

#include <numeric>

#include "sgm/chain/chain_complex.hpp"
#include "sgm/error.hpp"

namespace sgm {

void HoleSpec::set_linking(SummandRef a, SummandRef b, std::int64_t value)
{
    if (a == b) fail(ErrorKind::invalid_argument, "linking of a summand with itself");
    if (b < a) std::swap(a, b);
    if (value == 0)
        linking.erase({a, b});
    else
        linking[{a, b}] = value;
}

std::int64_t HoleSpec::linking_of(SummandRef a, SummandRef b) const
{
    if (b < a) std::swap(a, b);
    auto it = linking.find({a, b});
    return it == linking.end() ? 0 : it->second;
}

std::size_t HoleSpec::summand_count() const
{
    std::size_t n = 0;
    for (const auto& h : holes) n += h.size();
    return n;
}

void validate_hole_spec(int n, const HoleSpec& spec)
{
    if (n < 2) fail(ErrorKind::invalid_argument, "disc dimension must be at least 2");
    if (n > kDefaultDegreeCap) fail(ErrorKind::degree_cap, "disc dimension exceeds the degree cap");
    for (const auto& h : spec.holes)
        for (int s : h)
            if (s < 1 || s > n - 2)
                fail(ErrorKind::invalid_argument, "hole sphere dimension " + std::to_string(s) +
                                                      " outside 1.." + std::to_string(n - 2));
    auto dim_of = [&](const SummandRef& r) {
        if (r.hole >= spec.holes.size() || r.index >= spec.holes[r.hole].size())
            fail(ErrorKind::invalid_argument, "linking refers to a missing summand [" + std::to_string(r.hole) +
                                                  "," + std::to_string(r.index) + "]");
        return spec.holes[r.hole][r.index];
    };
    for (const auto& [pair, value] : spec.linking) {
        const int sa = dim_of(pair.first), sb = dim_of(pair.second);
        if (sa + sb != n - 1)
            fail(ErrorKind::invalid_argument, "linking given on spheres of dimensions " + std::to_string(sa) + " and " +
                                                  std::to_string(sb) + ", which are not complementary in dimension " +
                                                  std::to_string(n));
    }
}

DiscHomology disc_with_holes_homology(int n, int k, const HoleSpec& spec, const Coefficients& coeffs)
{
    validate_hole_spec(n, spec);
    DiscHomology out{GradedModule::point(coeffs), {}};
    for (const auto& h : spec.holes)
        for (int s : h) {
            if (s > n - k - 1)
                out.warnings.push_back("sphere of dimension " + std::to_string(s) + " exceeds n-k-1 = " +
                                       std::to_string(n - k - 1) + "; the complement is not " +
                                       std::to_string(k - 1) + "-connected");
            out.homology.add(n - s - 1, FgModule::free(coeffs, 1));
        }
    if (!spec.holes.empty())
        out.homology.add(n - 1, FgModule::free(coeffs, static_cast<std::int64_t>(spec.holes.size())));
    return out;
}

GradedModule disc_with_holes_oracle(int n, const HoleSpec& spec, const Coefficients& coeffs)
{
    validate_hole_spec(n, spec);
    if (spec.holes.empty()) return GradedModule::point(coeffs);
    std::vector<ChainComplex> boundaries, cores;
    for (const auto& h : spec.holes) {
        boundaries.push_back(boundary_of_thickened_hole(n, h));
        std::vector<ChainComplex> spheres;
        for (int s : h) spheres.push_back(complex_for_sphere(s));
        cores.push_back(spheres.empty() ? ChainComplex::point() : complex_wedge(spheres));
    }
    const GradedModule hb = homology(complex_disjoint_union(boundaries), coeffs);
    const GradedModule hn = homology(complex_disjoint_union(cores), coeffs);
    return complement_by_splitting(hb, hn);
}

HoleSpec realize_ranks(int n, int k, const RankVector& ranks)
{
    if (n < 2) fail(ErrorKind::invalid_argument, "disc dimension must be at least 2");
    for (const auto& [j, r] : ranks) {
        if (r < 0) fail(ErrorKind::invalid_argument, "negative rank for G_" + std::to_string(j));
        if (r == 0) continue;
        if (j < 1 || j >= n)
            fail(ErrorKind::precondition, "G_" + std::to_string(j) + " must be trivial (degrees 1..n-1 only)");
        if (j <= k - 1)
            fail(ErrorKind::precondition, "G_" + std::to_string(j) + " must be trivial for j <= k-1 = " +
                                               std::to_string(k - 1));
    }
    auto rank = [&](int j) {
        auto it = ranks.find(j);
        return it == ranks.end() ? std::int64_t{0} : it->second;
    };
    std::int64_t total = 0;
    for (int j = 1; j <= n - 2; ++j) total += rank(j);
    const std::int64_t holes = rank(n - 1);
    if (total < holes)
        fail(ErrorKind::precondition, "sum of rank G_j for j <= n-2 is " + std::to_string(total) + " < rank G_" +
                                          std::to_string(n - 1) + " = " + std::to_string(holes) + " (deficit " +
                                          std::to_string(holes - total) + ")");
    if (holes == 0 && total > 0)
        fail(ErrorKind::precondition, "rank G_" + std::to_string(n - 1) +
                                          " = 0 leaves no hole to carry the spheres; at least one is needed");
    std::vector<int> spheres;
    for (int j = 1; j <= n - 2; ++j)
        for (std::int64_t u = 0; u < rank(j); ++u) spheres.push_back(n - j - 1);
    HoleSpec spec;
    std::size_t next = 0;
    for (std::int64_t h = 0; h < holes; ++h) {
        const std::int64_t take = h == 0 ? total - holes + 1 : 1;
        spec.holes.emplace_back(spheres.begin() + static_cast<std::ptrdiff_t>(next),
                                spheres.begin() + static_cast<std::ptrdiff_t>(next + static_cast<std::size_t>(take)));
        next += static_cast<std::size_t>(take);
    }
    return spec;
}

std::string hole_spec_str(const HoleSpec& spec)
{
    std::string s = "[";
    for (std::size_t h = 0; h < spec.holes.size(); ++h) {
        if (h) s += ",";
        s += "[";
        for (std::size_t i = 0; i < spec.holes[h].size(); ++i) {
            if (i) s += ",";
            s += std::to_string(spec.holes[h][i]);
        }
        s += "]";
    }
    return s + "]";
}

std::string rank_vector_str(const RankVector& r)
{
    std::string s;
    for (const auto& [d, v] : r) {
        if (v == 0) continue;
        if (!s.empty()) s += ",";
        s += std::to_string(d) + ":" + std::to_string(v);
    }
    return s;
}

}  // namespace sgm
