#pragma once

#include <memory>
#include <string>
#include <vector>

#include "sgm/term/atom.hpp"

namespace sgm {

enum class NodeKind { atom, bouquet, product, connsum };

const char* to_string(NodeKind k);

/// Immutable expression tree over atoms. Bouquet and connected-sum nodes are
/// n-ary, flattened and sorted by canonical key; product nodes are binary and
/// ordered. Every constructor enforces the bit rules:
///   bouquet -> 0, product -> 0 (not both factors 0), connsum -> 1 (all
///   summands 1, closed, orientable, of one dimension), atom -> is_manifold.
class PolyhedronTerm {
  public:
    static PolyhedronTerm atom(const AtomType& a);
    static PolyhedronTerm bouquet(std::vector<PolyhedronTerm> parts);
    static PolyhedronTerm product(const PolyhedronTerm& a, const PolyhedronTerm& b);
    static PolyhedronTerm connsum(std::vector<PolyhedronTerm> parts);

    NodeKind kind() const;
    int bit() const;
    int dim() const;
    bool orientable() const;
    bool closed_manifold() const;
    const AtomType& atom_type() const;  // kind() == atom only
    const std::vector<PolyhedronTerm>& children() const;

    /// Canonical text: `S<d>` for standard spheres, `@name` for other atoms,
    /// `B(..)`, `P(a,b)`, `CS[..]`. Parsing it gives back an equal term.
    const std::string& str() const;

    /// Atom leaves in left-to-right order.
    std::vector<AtomType> atoms() const;
    std::size_t node_count() const;

    friend bool operator==(const PolyhedronTerm& a, const PolyhedronTerm& b) { return a.str() == b.str(); }
    friend bool operator<(const PolyhedronTerm& a, const PolyhedronTerm& b) { return a.str() < b.str(); }

  private:
    struct Node;
    explicit PolyhedronTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Structural scan of the bit table at every node; first offending subterm.
std::optional<std::string> check_bit_table(const PolyhedronTerm& t);

}  // namespace sgm
