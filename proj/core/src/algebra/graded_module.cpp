#include "sgm/algebra/graded_module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sgm/error.hpp"
#include "sgm/integer.hpp"

namespace sgm {

namespace {

void require_same(const Coefficients& a, const Coefficients& b)
{
    if (!(a == b)) fail(ErrorKind::coefficient_mismatch, "coefficient mismatch: " + a.name() + " vs " + b.name());
}

// Number of factors divisible by p.
std::int64_t count_divisible(const std::vector<std::int64_t>& factors, std::int64_t p)
{
    return std::count_if(factors.begin(), factors.end(), [p](std::int64_t d) { return d % p == 0; });
}

}  // namespace

std::vector<std::int64_t> normalize_invariant_factors(std::vector<std::int64_t> values)
{
    for (auto v : values)
        if (v <= 0) fail(ErrorKind::invalid_argument, "invariant factors must be positive, got " + std::to_string(v));
    // Pairwise (gcd, lcm) exchange turns diag(values) into its Smith form.
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            std::int64_t g = std::gcd(values[i], values[j]);
            std::int64_t l = lcm64(values[i], values[j]);
            values[i] = g;
            values[j] = l;
        }
    }
    values.erase(std::remove(values.begin(), values.end(), 1), values.end());
    return values;
}

FgModule::FgModule(Coefficients coeffs, std::int64_t free_rank, std::vector<std::int64_t> torsion)
    : coeffs_(coeffs), free_rank_(free_rank)
{
    if (free_rank < 0) fail(ErrorKind::invalid_argument, "negative free rank");
    if (!coeffs.is_field()) factors_ = normalize_invariant_factors(std::move(torsion));
}

std::string FgModule::str() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FgModule& m)
{
    if (m.is_zero()) return os << "0";
    bool first = true;
    if (m.free_rank() > 0) {
        const Coefficients& c = m.coefficients();
        if (c.kind() == Coefficients::Kind::mod_p)
            os << "F" << c.prime();
        else
            os << c.name();
        if (m.free_rank() > 1) os << "^" << m.free_rank();
        first = false;
    }
    for (auto d : m.invariant_factors()) {
        if (!first) os << "+";
        os << "Z/" << d;
        first = false;
    }
    return os;
}

FgModule module_sum(const FgModule& a, const FgModule& b)
{
    require_same(a.coefficients(), b.coefficients());
    std::vector<std::int64_t> t = a.invariant_factors();
    t.insert(t.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return FgModule(a.coefficients(), checked_add(a.free_rank(), b.free_rank()), std::move(t));
}

FgModule module_tensor(const FgModule& a, const FgModule& b)
{
    require_same(a.coefficients(), b.coefficients());
    std::vector<std::int64_t> t;
    for (std::int64_t i = 0; i < a.free_rank(); ++i)
        t.insert(t.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    for (std::int64_t i = 0; i < b.free_rank(); ++i)
        t.insert(t.end(), a.invariant_factors().begin(), a.invariant_factors().end());
    for (auto x : a.invariant_factors())
        for (auto y : b.invariant_factors()) t.push_back(std::gcd(x, y));
    return FgModule(a.coefficients(), checked_mul(a.free_rank(), b.free_rank()), std::move(t));
}

FgModule module_tor(const FgModule& a, const FgModule& b)
{
    require_same(a.coefficients(), b.coefficients());
    std::vector<std::int64_t> t;
    for (auto x : a.invariant_factors())
        for (auto y : b.invariant_factors()) t.push_back(std::gcd(x, y));
    return FgModule(a.coefficients(), 0, std::move(t));
}

GradedModule::GradedModule(Coefficients coeffs, int degree_cap) : coeffs_(coeffs), cap_(degree_cap) {}

GradedModule::GradedModule(Coefficients coeffs, const std::map<int, FgModule>& by_degree, int degree_cap)
    : coeffs_(coeffs), cap_(degree_cap)
{
    for (const auto& [d, m] : by_degree) set(d, m);
}

GradedModule GradedModule::free(Coefficients coeffs, const std::map<int, std::int64_t>& ranks, int degree_cap)
{
    GradedModule g(coeffs, degree_cap);
    for (auto [d, r] : ranks) g.set(d, FgModule(coeffs, r));
    return g;
}

FgModule GradedModule::at(int degree) const
{
    auto it = by_degree_.find(degree);
    return it == by_degree_.end() ? FgModule(coeffs_) : it->second;
}

int GradedModule::top_degree() const { return by_degree_.empty() ? -1 : by_degree_.rbegin()->first; }

bool GradedModule::is_free() const
{
    return std::all_of(by_degree_.begin(), by_degree_.end(), [](const auto& kv) { return kv.second.is_free(); });
}

std::int64_t GradedModule::total_rank() const
{
    std::int64_t r = 0;
    for (const auto& [d, m] : by_degree_) r += m.free_rank();
    return r;
}

void GradedModule::set(int degree, const FgModule& m)
{
    if (degree < 0) fail(ErrorKind::invalid_argument, "negative degree " + std::to_string(degree));
    if (degree > cap_)
        fail(ErrorKind::degree_cap, "degree " + std::to_string(degree) + " exceeds the degree cap " + std::to_string(cap_));
    require_same(coeffs_, m.coefficients());
    if (m.is_zero()) by_degree_.erase(degree);
    else by_degree_.insert_or_assign(degree, m);
}

void GradedModule::add(int degree, const FgModule& m) { set(degree, module_sum(at(degree), m)); }

GradedModule GradedModule::reduced() const
{
    GradedModule r = *this;
    FgModule h0 = at(0);
    if (h0.free_rank() < 1) fail(ErrorKind::invalid_argument, "reduced homology of an empty space");
    r.set(0, FgModule(coeffs_, h0.free_rank() - 1, h0.invariant_factors()));
    return r;
}

GradedModule GradedModule::unreduced() const
{
    GradedModule r = *this;
    r.add(0, FgModule(coeffs_, 1));
    return r;
}

std::string GradedModule::str() const
{
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedModule& m)
{
    os << "{";
    bool first = true;
    for (const auto& [d, g] : m.by_degree()) {
        if (!first) os << ", ";
        os << d << ": " << g;
        first = false;
    }
    return os << "}";
}

GradedModule graded_kunneth(const GradedModule& a, const GradedModule& b, int degree_cap)
{
    require_same(a.coefficients(), b.coefficients());
    GradedModule out(a.coefficients(), degree_cap);
    for (const auto& [i, ai] : a.by_degree()) {
        for (const auto& [j, bj] : b.by_degree()) {
            out.add(i + j, module_tensor(ai, bj));
            FgModule t = module_tor(ai, bj);
            if (!t.is_zero()) out.add(i + j + 1, t);
        }
    }
    return out;
}

GradedModule graded_sum(const GradedModule& a, const GradedModule& b)
{
    require_same(a.coefficients(), b.coefficients());
    GradedModule out(a.coefficients(), std::max(a.degree_cap(), b.degree_cap()));
    for (const auto& [d, m] : a.by_degree()) out.add(d, m);
    for (const auto& [d, m] : b.by_degree()) out.add(d, m);
    return out;
}

GradedModule change_coefficients(const GradedModule& integral, const Coefficients& target)
{
    if (integral.coefficients().kind() != Coefficients::Kind::integers)
        fail(ErrorKind::coefficient_mismatch, "change_coefficients expects integral input");
    GradedModule out(target, integral.degree_cap());
    for (const auto& [q, m] : integral.by_degree()) {
        switch (target.kind()) {
        case Coefficients::Kind::integers: out.add(q, m); break;
        case Coefficients::Kind::rationals: out.add(q, FgModule(target, m.free_rank())); break;
        case Coefficients::Kind::mod_p: {
            std::int64_t t = count_divisible(m.invariant_factors(), target.prime());
            out.add(q, FgModule(target, m.free_rank() + t));
            if (t > 0) out.add(q + 1, FgModule(target, t));
            break;
        }
        }
    }
    return out;
}

GradedModule cohomology_from_homology(const GradedModule& homology)
{
    const Coefficients& a = homology.coefficients();
    GradedModule out(a, homology.degree_cap());
    for (const auto& [q, m] : homology.by_degree()) {
        out.add(q, FgModule(a, m.free_rank()));
        if (!m.invariant_factors().empty()) out.add(q + 1, FgModule(a, 0, m.invariant_factors()));
    }
    return out;
}

}  // namespace sgm
