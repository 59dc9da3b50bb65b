#include "sgm/term/atom.hpp"

#include "sgm/error.hpp"

namespace sgm {

std::optional<std::string> validate_atom(const AtomType& a)
{
    if (a.name.empty()) return "atom without a name";
    if (a.dim < 0) return "atom " + a.name + " has negative dimension";
    if (a.dim > kDefaultDegreeCap) return "atom " + a.name + " exceeds the degree cap";
    if (!(a.homology.coefficients() == Coefficients::integers()))
        return "atom " + a.name + " must carry integral homology";
    if (a.homology.rank(0) != 1 || !a.homology.at(0).is_free())
        return "atom " + a.name + " must be connected (H_0 = Z)";
    if (a.homology.top_degree() > a.dim) return "atom " + a.name + " has homology above its dimension";
    if (a.homotopy_sphere) {
        GradedModule expect = GradedModule::point(Coefficients::integers());
        if (a.dim > 0) expect.set(a.dim, FgModule::free(Coefficients::integers(), 1));
        if (!(a.homology == expect)) return "homotopy sphere " + a.name + " must have the homology of S^" + std::to_string(a.dim);
    }
    if (a.standard_sphere && !a.homotopy_sphere) return "standard sphere " + a.name + " must be a homotopy sphere";
    if (a.signature && (a.dim % 4 != 0 || !a.orientable))
        return "signature of " + a.name + " requires an orientable manifold of dimension divisible by 4";
    if (a.signature) {
        const std::int64_t mid = a.homology.rank(a.dim / 2), sig = *a.signature;
        if (sig > mid || -sig > mid || (mid - sig) % 2 != 0)
            return "signature of " + a.name + " is incompatible with middle Betti number " + std::to_string(mid);
    }
    if (a.is_manifold && a.closed && a.orientable && a.dim > 0 && a.homology.rank(a.dim) != 1)
        return "closed orientable manifold " + a.name + " must have H_top = Z";
    if (a.connectivity < 0) return "atom " + a.name + " has negative connectivity";
    for (const auto& [d, m] : a.homology.by_degree())
        if (d >= 1 && d <= a.connectivity && !m.is_zero())
            return "atom " + a.name + " has nontrivial H_" + std::to_string(d) + " below its connectivity";
    if (a.simply_connected && a.connectivity < 1 && a.homology.top_degree() > 0 && !a.homology.at(1).is_zero())
        return "simply connected atom " + a.name + " has nontrivial H_1";
    return std::nullopt;
}

AtomType sphere_atom(int d)
{
    if (d < 0) fail(ErrorKind::invalid_argument, "negative sphere dimension");
    if (d > kDefaultDegreeCap)
        fail(ErrorKind::degree_cap, "sphere dimension " + std::to_string(d) + " exceeds the degree cap " +
                                        std::to_string(kDefaultDegreeCap));
    AtomType a;
    a.name = "S" + std::to_string(d);
    a.dim = d;
    a.homotopy_sphere = true;
    a.standard_sphere = true;
    a.simply_connected = d != 1;
    a.connectivity = d == 0 ? kInfiniteConnectivity : d - 1;
    a.homology = GradedModule::point(Coefficients::integers());
    if (d > 0) a.homology.set(d, FgModule::free(Coefficients::integers(), 1));
    if (d % 4 == 0 && d > 0) a.signature = 0;
    return a;
}

namespace {

GradedModule integral(const std::map<int, std::int64_t>& ranks)
{
    return GradedModule::free(Coefficients::integers(), ranks);
}

AtomType manifold(std::string name, int dim, GradedModule h, int connectivity, std::optional<bool> spin,
                  std::optional<std::int64_t> signature, bool simply_connected = true)
{
    AtomType a;
    a.name = std::move(name);
    a.dim = dim;
    a.homology = std::move(h);
    a.connectivity = connectivity;
    a.spin = spin;
    a.signature = signature;
    a.simply_connected = simply_connected;
    return a;
}

}  // namespace

AtomTable AtomTable::builtin()
{
    AtomTable t;
    for (int d = 0; d <= 9; ++d) t.add(sphere_atom(d));
    t.add_alias("pt", "S0");
    t.add(manifold("S2xS2", 4, integral({{0, 1}, {2, 2}, {4, 1}}), 1, true, 0));
    t.add(manifold("S2xS2#S2xS2", 4, integral({{0, 1}, {2, 4}, {4, 1}}), 1, true, 0));
    t.add(manifold("CP2", 4, integral({{0, 1}, {2, 1}, {4, 1}}), 1, false, 1));
    t.add(manifold("CP2#CP2bar", 4, integral({{0, 1}, {2, 2}, {4, 1}}), 1, false, 0));
    t.add(manifold("S2xS3", 5, integral({{0, 1}, {2, 1}, {3, 1}, {5, 1}}), 1, true, std::nullopt));
    t.add(manifold("S2xtS3", 5, integral({{0, 1}, {2, 1}, {3, 1}, {5, 1}}), 1, false, std::nullopt));
    GradedModule wu = integral({{0, 1}, {5, 1}});
    wu.set(2, FgModule(Coefficients::integers(), 0, {2}));
    t.add(manifold("Wu", 5, wu, 1, false, std::nullopt));
    t.add(manifold("S1xS2", 3, integral({{0, 1}, {1, 1}, {2, 1}, {3, 1}}), 0, true, std::nullopt, false));
    return t;
}

void AtomTable::add(const AtomType& a)
{
    if (auto why = validate_atom(a)) fail(ErrorKind::invalid_argument, *why);
    atoms_.insert_or_assign(a.name, a);
}

void AtomTable::add_alias(const std::string& alias, const std::string& target)
{
    if (!atoms_.count(target)) fail(ErrorKind::invalid_argument, "alias target " + target + " is not in the table");
    aliases_[alias] = target;
}

std::optional<AtomType> AtomTable::find(const std::string& name) const
{
    auto it = atoms_.find(name);
    if (it != atoms_.end()) return it->second;
    if (auto al = aliases_.find(name); al != aliases_.end()) return atoms_.at(al->second);
    return std::nullopt;
}

AtomType AtomTable::sphere(int d) const
{
    if (d >= 0 && d <= kDefaultDegreeCap)
        if (auto a = find("S" + std::to_string(d))) return *a;
    return sphere_atom(d);
}

std::vector<std::string> AtomTable::names() const
{
    std::vector<std::string> out;
    for (const auto& [name, a] : atoms_) out.push_back(name);
    return out;
}

ChainComplex atom_chain_model(const AtomType& a, SphereModel model)
{
    if (a.homotopy_sphere) return complex_for_sphere(a.dim, model);
    const int top = a.homology.top_degree();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 1), 0);
    for (int d = 0; d <= top; ++d) {
        const FgModule m = a.homology.at(d);
        ranks[static_cast<std::size_t>(d)] += static_cast<std::size_t>(m.free_rank() + static_cast<std::int64_t>(m.invariant_factors().size()));
        if (!m.invariant_factors().empty()) {
            if (static_cast<std::size_t>(d + 1) >= ranks.size()) ranks.resize(static_cast<std::size_t>(d + 2), 0);
            ranks[static_cast<std::size_t>(d + 1)] += m.invariant_factors().size();
        }
    }
    // Degree-d cells: those bounding the torsion of H_{d-1}, then the free
    // generators of H_d, then its torsion generators. The top free cell is last.
    auto bounding = [&](std::size_t d) {
        return d == 0 ? std::size_t{0} : a.homology.at(static_cast<int>(d - 1)).invariant_factors().size();
    };
    std::vector<IntegerMatrix> bd;
    for (std::size_t d = 1; d < ranks.size(); ++d) {
        IntegerMatrix m(ranks[d - 1], ranks[d]);
        const FgModule below = a.homology.at(static_cast<int>(d - 1));
        const std::size_t offset = bounding(d - 1) + static_cast<std::size_t>(below.free_rank());
        for (std::size_t i = 0; i < below.invariant_factors().size(); ++i)
            m(offset + i, i) = below.invariant_factors()[i];
        bd.push_back(std::move(m));
    }
    return ChainComplex(ranks, bd);
}

}  // namespace sgm
