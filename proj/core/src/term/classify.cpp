#include "sgm/term/classify.hpp"

#include <algorithm>
#include <set>

#include "sgm/error.hpp"

namespace sgm {

const char* to_string(EmbeddingMode m) { return m == EmbeddingMode::immersed ? "SIE" : "SEE"; }

const char* to_string(VerdictStatus s)
{
    switch (s) {
    case VerdictStatus::accept: return "accept";
    case VerdictStatus::reject: return "reject";
    case VerdictStatus::no_constraint: return "no_constraint";
    }
    return "?";
}

std::string SieSeeClassification::label() const
{
    std::string prefix = very_essentially ? "very essentially " : essentially ? "essentially " : "";
    return prefix + to_string(mode) + "-(" + host.str() + ")";
}

namespace {

bool is_sphere_bouquet(const PolyhedronTerm& t)
{
    if (t.kind() == NodeKind::atom) return t.atom_type().homotopy_sphere;
    if (t.kind() != NodeKind::bouquet) return false;
    return std::all_of(t.children().begin(), t.children().end(), [](const PolyhedronTerm& c) {
        return c.kind() == NodeKind::atom && c.atom_type().homotopy_sphere;
    });
}

bool is_homotopy_sphere_atom(const PolyhedronTerm& t)
{
    return t.kind() == NodeKind::atom && t.atom_type().homotopy_sphere;
}

}  // namespace

SieSeeClassification classify_sie_see(const PolyhedronTerm& term, EmbeddingMode mode,
                                      const std::vector<PolyhedronTerm>& holes,
                                      const std::optional<std::vector<AtomType>>& generators)
{
    if (generators) {
        std::set<std::string> names;
        for (const auto& g : *generators) names.insert(g.name);
        auto check = [&](const PolyhedronTerm& t, const std::string& role) {
            for (const auto& a : t.atoms())
                if (!names.count(a.name))
                    fail(ErrorKind::invalid_argument,
                         role + " " + t.str() + " uses atom " + a.name + " outside the generating set");
        };
        check(term, "host polyhedron");
        for (const auto& h : holes) check(h, "hole");
    }
    SieSeeClassification c{mode, !holes.empty(), false, term, holes, {}};
    c.very_essentially = c.essentially && std::all_of(holes.begin(), holes.end(), is_sphere_bouquet);
    if (term.bit() == 1) c.notes.push_back("final value is a manifold type; its embedding is taken smooth");
    return c;
}

ClassifierVerdict classify_thm2_normal_form(const PolyhedronTerm& term, int n, int k)
{
    if (k < 2 || n < k)
        fail(ErrorKind::precondition, "normal-form classifier needs k >= 2 and n >= k");
    std::string bad_atom;
    for (const auto& a : term.atoms())
        if (a.connectivity < k - 1 || !a.simply_connected) {
            bad_atom = a.name;
            break;
        }
    if (n > 3 * k) {
        std::string reason = "n = " + std::to_string(n) + " > 3k = " + std::to_string(3 * k);
        if (!bad_atom.empty()) reason += "; atom " + bad_atom + " is not " + std::to_string(k - 1) + "-connected";
        return {VerdictStatus::no_constraint, "", reason};
    }
    if (!bad_atom.empty())
        return {VerdictStatus::reject, bad_atom, "root atom " + bad_atom + " is not " + std::to_string(k - 1) + "-connected"};

    auto piece = [](const PolyhedronTerm& p) -> std::optional<ClassifierVerdict> {
        switch (p.kind()) {
        case NodeKind::atom:
        case NodeKind::connsum: return std::nullopt;
        case NodeKind::product: {
            const auto& a = p.children()[0];
            const auto& b = p.children()[1];
            if ((is_homotopy_sphere_atom(a) && is_sphere_bouquet(b)) || (is_homotopy_sphere_atom(b) && is_sphere_bouquet(a)))
                return std::nullopt;
            const PolyhedronTerm& culprit = is_homotopy_sphere_atom(a) ? b : a;
            return ClassifierVerdict{VerdictStatus::reject, p.str(),
                                     "product factor " + culprit.str() + " is not a homotopy sphere or a bouquet of them"};
        }
        case NodeKind::bouquet: break;
        }
        return ClassifierVerdict{VerdictStatus::reject, p.str(), "unexpected nested bouquet"};
    };
    if (term.kind() == NodeKind::bouquet) {
        for (const auto& c : term.children())
            if (auto v = piece(c)) return *v;
    } else if (auto v = piece(term)) {
        return *v;
    }
    return {VerdictStatus::accept, "", "iterated bouquet of admissible pieces"};
}

bool is_s2xs2_sum_type(const AtomType& a)
{
    return a.dim == 4 && a.is_manifold && a.closed && a.simply_connected && a.spin.value_or(false) &&
           a.signature.value_or(1) == 0;
}

ClassifierVerdict validate_root_thm4_thm5(const std::vector<AtomType>& atoms, int n, int k, EmbeddingMode mode)
{
    const bool five = n == 5 && k == 2;
    const bool six = n == 6 && k == 2;
    if (!five && !six)
        fail(ErrorKind::unsupported, "atom whitelist is defined only for (n,k) = (5,2) or (6,2)");
    auto closed_sc = [](const AtomType& a) { return a.is_manifold && a.closed && a.simply_connected; };
    for (const auto& a : atoms) {
        if (a.homotopy_sphere) continue;
        bool ok = false;
        std::string rule;
        if (five) {
            ok = is_s2xs2_sum_type(a);
            rule = "a connected sum of copies of S2xS2";
        } else if (mode == EmbeddingMode::embedded) {
            ok = is_s2xs2_sum_type(a) || (a.dim == 5 && closed_sc(a) && a.spin.value_or(false));
            rule = "a connected sum of copies of S2xS2 or a closed simply connected spin 5-manifold";
        } else {
            ok = (a.dim == 4 && closed_sc(a) && a.signature.value_or(1) == 0) ||
                 (a.dim == 5 && closed_sc(a) && a.spin.value_or(false));
            rule = "a closed simply connected 4-manifold of signature 0 or a closed simply connected spin 5-manifold";
        }
        if (!ok) return {VerdictStatus::reject, a.name, "atom " + a.name + " is not " + rule};
    }
    return {VerdictStatus::accept, "", "every atom is a homotopy sphere or on the whitelist"};
}

}  // namespace sgm
