#include "sgm/invariants/thm3.hpp"

#include "sgm/error.hpp"

namespace sgm {

const char* to_string(IndexMode m) { return m == IndexMode::literal ? "literal" : "triangular"; }

IndexMode parse_index_mode(const std::string& s)
{
    if (s == "literal") return IndexMode::literal;
    if (s == "triangular") return IndexMode::triangular;
    fail(ErrorKind::invalid_argument, "index mode must be literal or triangular, got '" + s + "'");
}

namespace {

std::int64_t rank_at(const RankVector& r, int j)
{
    auto it = r.find(j);
    return it == r.end() ? 0 : it->second;
}

std::size_t crossed(int n, const RankVector& r, int upto)
{
    std::size_t s = 0;
    for (int j = 1; j <= upto; ++j) s += static_cast<std::size_t>(rank_at(r, j) * rank_at(r, n - 1 - j));
    return s;
}

std::size_t prefix(const RankVector& r, int d)
{
    std::size_t s = 0;
    for (int j = 1; j < d; ++j) s += static_cast<std::size_t>(rank_at(r, j));
    return s;
}

}  // namespace

std::size_t thm3_sequence_length(int n, const RankVector& ranks) { return crossed(n, ranks, (n - 1) / 2); }

std::size_t thm3_zero_prefix(int n, int k, const RankVector& ranks) { return crossed(n, ranks, k - 1); }

std::size_t thm3_middle_length(int n, const RankVector& ranks)
{
    if (n % 2 == 0) return 0;
    const auto r = static_cast<std::size_t>(rank_at(ranks, (n - 1) / 2));
    return r < 2 ? 0 : (r - 1) * r / 2;
}

std::size_t thm3_middle_index(std::size_t a, std::size_t b, std::size_t l0, std::size_t r, IndexMode mode)
{
    const std::size_t base = mode == IndexMode::literal ? l0 : r;
    std::size_t idx = b - a;
    for (std::size_t j = 1; j < a; ++j) idx += base - j;
    return idx;
}

CohomologyRing thm3_ring(const Thm3Params& p)
{
    const int n = p.n;
    if (n < 2) fail(ErrorKind::invalid_argument, "n must be at least 2");
    if (n > kDefaultDegreeCap) fail(ErrorKind::degree_cap, "n exceeds the degree cap");
    if (p.k < 1) fail(ErrorKind::invalid_argument, "k must be positive");
    for (const auto& [j, r] : p.ranks) {
        if (r < 0) fail(ErrorKind::invalid_argument, "negative rank for G_" + std::to_string(j));
        if (r != 0 && (j < 1 || j > n - 1))
            fail(ErrorKind::precondition, "G_" + std::to_string(j) + " must be trivial outside degrees 1..n-1");
    }
    std::int64_t total = 0;
    for (int j = 1; j <= n - 2; ++j) total += rank_at(p.ranks, j);
    if (total != rank_at(p.ranks, n - 1))
        fail(ErrorKind::precondition, "ring rule needs sum_{j<=n-2} rank G_j = rank G_{n-1}; got " +
                                          std::to_string(total) + " and " + std::to_string(rank_at(p.ranks, n - 1)));
    const std::size_t l = thm3_sequence_length(n, p.ranks);
    if (p.a.size() != l)
        fail(ErrorKind::invalid_argument,
             "coefficient sequence a has length " + std::to_string(p.a.size()) + "; expected " + std::to_string(l));
    const std::size_t zero = thm3_zero_prefix(n, p.k, p.ranks);
    for (std::size_t i = 0; i < zero && i < l; ++i)
        if (p.a[i] != 0)
            fail(ErrorKind::precondition, "a_" + std::to_string(i + 1) + " must be 0 (a_i = 0 for i <= " +
                                              std::to_string(zero) + ")");
    const std::size_t l0 = thm3_middle_length(n, p.ranks);
    if (n % 2 == 1) {
        if (p.a0.size() != l0)
            fail(ErrorKind::invalid_argument, "middle sequence a0 has length " + std::to_string(p.a0.size()) +
                                                  "; expected " + std::to_string(l0));
    } else if (!p.a0.empty()) {
        fail(ErrorKind::invalid_argument, "middle sequence a0 is only used for odd n");
    }

    CohomologyRing ring(p.coeffs, n);
    ring.add_class("1", 0);
    std::map<int, std::vector<std::size_t>> e;
    for (int d = 1; d <= n - 1; ++d)
        for (std::int64_t i = 1; i <= rank_at(p.ranks, d); ++i)
            e[d].push_back(ring.add_class("e" + std::to_string(d) + "_" + std::to_string(i), d));
    auto top = [&](std::size_t index1) { return e[n - 1].at(index1 - 1); };
    auto put = [&](std::size_t x, std::size_t y, int dx, int dy, std::int64_t c, std::size_t t1, std::size_t t2) {
        Combination v{{top(t1), c}};
        v[top(t2)] += c;
        ring.set_product(x, y, v);
        const std::int64_t sign = (dx * dy) % 2 == 0 ? 1 : -1;
        Combination w{{top(t1), sign * c}};
        w[top(t2)] += sign * c;
        ring.set_product(y, x, w);
    };

    for (int a1 = 1; a1 < n - 1 - a1; ++a1) {
        const int b1 = n - 1 - a1;
        const std::int64_t ra = rank_at(p.ranks, a1), rb = rank_at(p.ranks, b1);
        for (std::int64_t a2 = 1; a2 <= ra; ++a2)
            for (std::int64_t b2 = 1; b2 <= rb; ++b2) {
                const std::size_t idx = crossed(n, p.ranks, a1 - 1) + static_cast<std::size_t>(rb * (a2 - 1) + b2);
                if (idx < 1 || idx > l) fail(ErrorKind::internal, "product index out of range");
                const std::int64_t c = p.a[idx - 1];
                put(e[a1][static_cast<std::size_t>(a2 - 1)], e[b1][static_cast<std::size_t>(b2 - 1)], a1, b1, c,
                    prefix(p.ranks, a1) + static_cast<std::size_t>(a2), prefix(p.ranks, b1) + static_cast<std::size_t>(b2));
            }
    }
    if (n % 2 == 1) {
        const int mid = (n - 1) / 2;
        const auto r = static_cast<std::size_t>(rank_at(p.ranks, mid));
        for (std::size_t a = 1; a <= r; ++a)
            for (std::size_t b = a + 1; b <= r; ++b) {
                const std::size_t idx = thm3_middle_index(a, b, l0, r, p.mode);
                if (idx < 1 || idx > l0)
                    fail(ErrorKind::invalid_argument,
                         "middle-degree index " + std::to_string(idx) + " for (a,b) = (" + std::to_string(a) + "," +
                             std::to_string(b) + ") is outside 1.." + std::to_string(l0) +
                             " in literal mode; use --index-mode triangular");
                put(e[mid][a - 1], e[mid][b - 1], mid, mid, p.a0[idx - 1], prefix(p.ranks, mid) + a,
                    prefix(p.ranks, mid) + b);
            }
    }
    return ring;
}

Thm3Params thm3_params_from_holes(int n, int k, const HoleSpec& spec, const Coefficients& coeffs, IndexMode mode)
{
    validate_hole_spec(n, spec);
    Thm3Params p;
    p.n = n;
    p.k = k;
    p.coeffs = coeffs;
    p.mode = mode;
    // class (d, i) <- i-th sphere of dimension n-d-1
    std::map<int, std::vector<SummandRef>> by_degree;
    for (std::size_t h = 0; h < spec.holes.size(); ++h) {
        if (spec.holes[h].size() != 1)
            fail(ErrorKind::precondition, "ring extraction needs every hole to be a single sphere; hole " +
                                              std::to_string(h) + " has " + std::to_string(spec.holes[h].size()) +
                                              " summands");
        by_degree[n - spec.holes[h][0] - 1].push_back({h, 0});
    }
    for (const auto& [d, refs] : by_degree) p.ranks[d] = static_cast<std::int64_t>(refs.size());
    if (!spec.holes.empty()) p.ranks[n - 1] = static_cast<std::int64_t>(spec.holes.size());
    p.a.assign(thm3_sequence_length(n, p.ranks), 0);
    for (int a1 = 1; a1 < n - 1 - a1; ++a1) {
        const int b1 = n - 1 - a1;
        const auto& ra = by_degree[a1];
        const auto& rb = by_degree[b1];
        for (std::size_t a2 = 1; a2 <= ra.size(); ++a2)
            for (std::size_t b2 = 1; b2 <= rb.size(); ++b2) {
                const std::size_t idx = crossed(n, p.ranks, a1 - 1) + rb.size() * (a2 - 1) + b2;
                p.a[idx - 1] = spec.linking_of(ra[a2 - 1], rb[b2 - 1]);
            }
    }
    if (n % 2 == 1) {
        const auto& mid = by_degree[(n - 1) / 2];
        const std::size_t l0 = thm3_middle_length(n, p.ranks);
        p.a0.assign(l0, 0);
        for (std::size_t a = 1; a <= mid.size(); ++a)
            for (std::size_t b = a + 1; b <= mid.size(); ++b) {
                const std::size_t idx = thm3_middle_index(a, b, l0, mid.size(), mode);
                const std::int64_t v = spec.linking_of(mid[a - 1], mid[b - 1]);
                if (idx < 1 || idx > l0) {
                    if (v != 0)
                        fail(ErrorKind::invalid_argument, "middle-degree index " + std::to_string(idx) +
                                                              " is out of range in literal mode; use --index-mode triangular");
                    continue;
                }
                p.a0[idx - 1] = v;
            }
    }
    return p;
}

CohomologyRing ring_from_holes(int n, int k, const HoleSpec& spec, const Coefficients& coeffs, IndexMode mode)
{
    return thm3_ring(thm3_params_from_holes(n, k, spec, coeffs, mode));
}

}  // namespace sgm
