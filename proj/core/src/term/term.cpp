#include "sgm/term/term.hpp"

#include <algorithm>

#include "sgm/error.hpp"

namespace sgm {

struct PolyhedronTerm::Node {
    NodeKind kind;
    int bit;
    int dim;
    bool orientable;
    bool closed_manifold;
    std::optional<AtomType> atom;
    std::vector<PolyhedronTerm> children;
    std::string key;
};

const char* to_string(NodeKind k)
{
    switch (k) {
    case NodeKind::atom: return "atom";
    case NodeKind::bouquet: return "bouquet";
    case NodeKind::product: return "product";
    case NodeKind::connsum: return "connsum";
    }
    return "?";
}

namespace {

std::string join(const std::vector<PolyhedronTerm>& parts)
{
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += parts[i].str();
    }
    return s;
}

std::vector<PolyhedronTerm> flatten(std::vector<PolyhedronTerm> parts, NodeKind kind)
{
    std::vector<PolyhedronTerm> out;
    for (auto& p : parts) {
        if (p.kind() == kind)
            out.insert(out.end(), p.children().begin(), p.children().end());
        else
            out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

PolyhedronTerm PolyhedronTerm::atom(const AtomType& a)
{
    if (auto why = validate_atom(a)) fail(ErrorKind::invalid_argument, *why);
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::atom;
    n->bit = a.is_manifold ? 1 : 0;
    n->dim = a.dim;
    n->orientable = a.orientable;
    n->closed_manifold = a.is_manifold && a.closed && a.connected;
    n->atom = a;
    n->key = a.standard_sphere ? "S" + std::to_string(a.dim) : "@" + a.name;
    return PolyhedronTerm(std::move(n));
}

PolyhedronTerm PolyhedronTerm::bouquet(std::vector<PolyhedronTerm> parts)
{
    if (parts.size() < 2) fail(ErrorKind::grammar, "a bouquet needs at least two pieces", "(2d1)");
    parts = flatten(std::move(parts), NodeKind::bouquet);
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::bouquet;
    n->bit = 0;
    n->dim = 0;
    for (const auto& p : parts) n->dim = std::max(n->dim, p.dim());
    n->orientable = false;
    n->closed_manifold = false;
    n->key = "B(" + join(parts) + ")";
    n->children = std::move(parts);
    return PolyhedronTerm(std::move(n));
}

PolyhedronTerm PolyhedronTerm::product(const PolyhedronTerm& a, const PolyhedronTerm& b)
{
    if (a.bit() == 0 && b.bit() == 0)
        fail(ErrorKind::grammar,
             "product of " + a.str() + " and " + b.str() + " has bit pair (0,0); a product needs a manifold factor",
             "(2d2)");
    if (a.dim() + b.dim() > kDefaultDegreeCap)
        fail(ErrorKind::degree_cap, "product " + a.str() + " x " + b.str() + " exceeds the degree cap");
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::product;
    n->bit = 0;
    n->dim = a.dim() + b.dim();
    n->orientable = a.orientable() && b.orientable();
    n->closed_manifold = false;
    n->children = {a, b};
    n->key = "P(" + a.str() + "," + b.str() + ")";
    return PolyhedronTerm(std::move(n));
}

PolyhedronTerm PolyhedronTerm::connsum(std::vector<PolyhedronTerm> parts)
{
    if (parts.size() < 2) fail(ErrorKind::grammar, "a connected sum needs at least two summands", "(2d3)");
    for (const auto& p : parts) {
        if (p.bit() != 1)
            fail(ErrorKind::grammar, "connected-sum summand " + p.str() + " has bit 0; (2d3) needs the pair (1,1)",
                 "(2d3)");
        if (!p.closed_manifold())
            fail(ErrorKind::grammar, "connected-sum summand " + p.str() + " is not a closed connected manifold", "(2d3)");
        if (!p.orientable())
            fail(ErrorKind::grammar, "connected-sum summand " + p.str() + " is not orientable", "(2d3)");
        if (p.dim() != parts.front().dim())
            fail(ErrorKind::grammar, "connected-sum summands " + parts.front().str() + " and " + p.str() +
                                         " differ in dimension",
                 "(2d3)");
    }
    if (parts.front().dim() < 1)
        fail(ErrorKind::grammar, "connected sum of 0-dimensional manifolds", "(2d3)");
    parts = flatten(std::move(parts), NodeKind::connsum);
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::connsum;
    n->bit = 1;
    n->dim = parts.front().dim();
    n->orientable = true;
    n->closed_manifold = true;
    n->key = "CS[" + join(parts) + "]";
    n->children = std::move(parts);
    return PolyhedronTerm(std::move(n));
}

NodeKind PolyhedronTerm::kind() const { return node_->kind; }
int PolyhedronTerm::bit() const { return node_->bit; }
int PolyhedronTerm::dim() const { return node_->dim; }
bool PolyhedronTerm::orientable() const { return node_->orientable; }
bool PolyhedronTerm::closed_manifold() const { return node_->closed_manifold; }
const std::vector<PolyhedronTerm>& PolyhedronTerm::children() const { return node_->children; }
const std::string& PolyhedronTerm::str() const { return node_->key; }

const AtomType& PolyhedronTerm::atom_type() const
{
    if (!node_->atom) fail(ErrorKind::internal, "atom_type() on a " + std::string(to_string(kind())) + " node");
    return *node_->atom;
}

std::vector<AtomType> PolyhedronTerm::atoms() const
{
    if (kind() == NodeKind::atom) return {atom_type()};
    std::vector<AtomType> out;
    for (const auto& c : children()) {
        auto sub = c.atoms();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

std::size_t PolyhedronTerm::node_count() const
{
    std::size_t n = 1;
    for (const auto& c : children()) n += c.node_count();
    return n;
}

std::optional<std::string> check_bit_table(const PolyhedronTerm& t)
{
    int expect = 0;
    switch (t.kind()) {
    case NodeKind::atom: expect = t.atom_type().is_manifold ? 1 : 0; break;
    case NodeKind::bouquet:
    case NodeKind::product: expect = 0; break;
    case NodeKind::connsum: expect = 1; break;
    }
    if (t.bit() != expect) return t.str();
    for (const auto& c : t.children())
        if (auto bad = check_bit_table(c)) return bad;
    return std::nullopt;
}

}  // namespace sgm
