#include "sgm/ring/cohomology_ring.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "sgm/error.hpp"
#include "sgm/integer.hpp"

namespace sgm {

CohomologyRing::CohomologyRing(Coefficients coeffs, int ambient_dim) : coeffs_(coeffs), ambient_dim_(ambient_dim) {}

std::size_t CohomologyRing::add_class(std::string label, int degree)
{
    if (degree < 0) fail(ErrorKind::invalid_argument, "negative class degree");
    if (find(label)) fail(ErrorKind::invalid_argument, "duplicate class label '" + label + "'");
    basis_.push_back({std::move(label), degree});
    if (degree == 0 && !unit_) unit_ = basis_.size() - 1;
    return basis_.size() - 1;
}

std::size_t CohomologyRing::unit() const
{
    if (!unit_) fail(ErrorKind::structural, "ring has no unit");
    return *unit_;
}

std::optional<std::size_t> CohomologyRing::find(const std::string& label) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].label == label) return i;
    return std::nullopt;
}

std::vector<std::size_t> CohomologyRing::classes_in_degree(int d) const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].degree == d) out.push_back(i);
    return out;
}

int CohomologyRing::top_degree() const
{
    int t = -1;
    for (const auto& c : basis_) t = std::max(t, c.degree);
    return t;
}

Combination CohomologyRing::normalize(const Combination& c) const
{
    Combination out;
    for (auto [k, v] : c) {
        std::int64_t r = coeffs_.reduce(v);
        if (r != 0) out[k] = r;
    }
    return out;
}

void CohomologyRing::set_product(std::size_t a, std::size_t b, const Combination& value)
{
    if (a >= basis_.size() || b >= basis_.size()) fail(ErrorKind::invalid_argument, "product of unknown classes");
    for (const auto& [k, v] : value)
        if (k >= basis_.size()) fail(ErrorKind::invalid_argument, "product lands on an unknown class");
    Combination n = normalize(value);
    if (n.empty()) products_.erase({a, b});
    else products_[{a, b}] = std::move(n);
}

Combination CohomologyRing::multiply(std::size_t a, std::size_t b) const
{
    if (unit_ && a == *unit_) return {{b, 1}};
    if (unit_ && b == *unit_) return {{a, 1}};
    auto it = products_.find({a, b});
    return it == products_.end() ? Combination{} : it->second;
}

Combination CohomologyRing::multiply(const Combination& a, const Combination& b) const
{
    Combination out;
    for (auto [i, x] : a)
        for (auto [j, y] : b)
            for (auto [k, z] : multiply(i, j)) out[k] = checked_add(out[k], checked_mul(checked_mul(x, y), z));
    return normalize(out);
}

GradedModule CohomologyRing::additive_structure() const
{
    std::map<int, std::int64_t> ranks;
    for (const auto& c : basis_) ++ranks[c.degree];
    return GradedModule::free(coeffs_, ranks, std::max(kDefaultDegreeCap, top_degree()));
}

std::optional<std::string> CohomologyRing::check_axioms() const
{
    const std::size_t n = basis_.size();
    auto name = [this](std::size_t i) { return basis_[i].label; };
    for (const auto& [key, value] : products_)
        for (const auto& [k, v] : value)
            if (basis_[k].degree != basis_[key.first].degree + basis_[key.second].degree)
                return "grading: " + name(key.first) + "*" + name(key.second) + " has a term in degree " +
                       std::to_string(basis_[k].degree);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Combination ij = multiply(i, j), ji = multiply(j, i);
            if ((basis_[i].degree * basis_[j].degree) % 2 != 0)
                for (auto& [k, v] : ji) v = -v;
            if (normalize(ij) != normalize(ji))
                return "graded commutativity: " + name(i) + "*" + name(j) + " = " + combination_str(ij) + " but " +
                       name(j) + "*" + name(i) + " = " + combination_str(multiply(j, i));
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Combination ij = multiply(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Combination left = multiply(ij, Combination{{k, 1}});
                Combination right = multiply(Combination{{i, 1}}, multiply(j, k));
                if (left != right)
                    return "associativity: (" + name(i) + "*" + name(j) + ")*" + name(k) + " = " + combination_str(left) +
                           " but " + name(i) + "*(" + name(j) + "*" + name(k) + ") = " + combination_str(right);
            }
        }
    return std::nullopt;
}

std::string CohomologyRing::combination_str(const Combination& c) const
{
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [k, v] : c) {
        if (v < 0) os << (first ? "-" : " - ");
        else if (!first) os << " + ";
        std::int64_t a = v < 0 ? -v : v;
        if (a != 1) os << a << "*";
        os << basis_[k].label;
        first = false;
    }
    return os.str();
}

std::string CohomologyRing::table_str() const
{
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i].degree > 0) pos.push_back(i);
    std::vector<std::vector<std::string>> cells(pos.size() + 1, std::vector<std::string>(pos.size() + 1));
    cells[0][0] = "*";
    for (std::size_t a = 0; a < pos.size(); ++a) {
        cells[0][a + 1] = basis_[pos[a]].label;
        cells[a + 1][0] = basis_[pos[a]].label;
        for (std::size_t b = 0; b < pos.size(); ++b) cells[a + 1][b + 1] = combination_str(multiply(pos[a], pos[b]));
    }
    std::vector<std::size_t> width(pos.size() + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << row[c];
        os << "\n";
    }
    return os.str();
}

CohomologyRing exterior_algebra_ring(int generators, int degree, const Coefficients& coeffs)
{
    if (generators < 0 || generators > 16) fail(ErrorKind::invalid_argument, "exterior algebra size out of range");
    if (degree < 1 || degree % 2 == 0) fail(ErrorKind::invalid_argument, "exterior generators need odd degree");
    CohomologyRing ring(coeffs, generators * degree);
    const unsigned count = 1u << generators;
    // Subsets ordered by size, then lexicographically by mask.
    std::vector<unsigned> masks(count);
    for (unsigned m = 0; m < count; ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    std::map<unsigned, std::size_t> index;
    for (unsigned m : masks) {
        std::string label = "1";
        if (m != 0) {
            label.clear();
            for (int g = 0; g < generators; ++g)
                if (m & (1u << g)) label += (label.empty() ? "x" : "x") + std::to_string(g + 1);
        }
        index[m] = ring.add_class(label, __builtin_popcount(m) * degree);
    }
    for (unsigned a = 1; a < count; ++a)
        for (unsigned b = 1; b < count; ++b) {
            if (a & b) continue;
            // sign of merging sorted generator lists: count pairs (i in a, j in b) with i > j
            int inversions = 0;
            for (int i = 0; i < generators; ++i)
                if (a & (1u << i))
                    for (int j = 0; j < i; ++j)
                        if (b & (1u << j)) ++inversions;
            ring.set_product(index[a], index[b], {{index[a | b], inversions % 2 ? -1 : 1}});
        }
    return ring;
}

}  // namespace sgm
