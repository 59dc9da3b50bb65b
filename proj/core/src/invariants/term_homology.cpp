#include "sgm/invariants/term_homology.hpp"

#include "sgm/error.hpp"
#include "sgm/term/atom.hpp"

namespace sgm {

GradedModule homology_of_term(const PolyhedronTerm& t, const Coefficients& coeffs)
{
    switch (t.kind()) {
    case NodeKind::atom: return change_coefficients(t.atom_type().homology, coeffs);
    case NodeKind::bouquet: {
        GradedModule reduced(coeffs);
        for (const auto& c : t.children()) reduced = graded_sum(reduced, homology_of_term(c, coeffs).reduced());
        return reduced.unreduced();
    }
    case NodeKind::product:
        return graded_kunneth(homology_of_term(t.children()[0], coeffs), homology_of_term(t.children()[1], coeffs));
    case NodeKind::connsum: {
        const int n = t.dim();
        GradedModule out = GradedModule::point(coeffs);
        for (const auto& c : t.children()) {
            const GradedModule h = homology_of_term(c, coeffs);
            for (const auto& [d, m] : h.by_degree())
                if (d >= 1 && d <= n - 1) out.add(d, m);
        }
        out.set(n, FgModule::free(coeffs, 1));
        return out;
    }
    }
    fail(ErrorKind::internal, "unknown term node");
}

ChainComplex term_chain_model(const PolyhedronTerm& t, SphereModel model)
{
    std::vector<ChainComplex> parts;
    for (const auto& c : t.children()) parts.push_back(term_chain_model(c, model));
    switch (t.kind()) {
    case NodeKind::atom: return atom_chain_model(t.atom_type(), model);
    case NodeKind::bouquet: return complex_wedge(parts);
    case NodeKind::product: return complex_tensor(parts[0], parts[1]);
    case NodeKind::connsum: return complex_connected_sum(parts);
    }
    fail(ErrorKind::internal, "unknown term node");
}

ConnectivityReport connectivity_of_term(const PolyhedronTerm& t)
{
    ConnectivityReport r{kInfiniteConnectivity, false, {}};
    for (const auto& a : t.atoms())
        if (!a.simply_connected) {
            r.homological_only = true;
            r.flagged_atom = a.name;
            break;
        }
    const GradedModule h = homology_of_term(t, Coefficients::integers()).reduced();
    for (const auto& [d, m] : h.by_degree())
        if (!m.is_zero()) {
            r.connectivity = d - 1;
            break;
        }
    return r;
}

}  // namespace sgm
