#include "sgm/term/root.hpp"

#include "sgm/error.hpp"

namespace sgm {

const char* to_string(CombineKind k)
{
    switch (k) {
    case CombineKind::bouquet: return "bouquet";
    case CombineKind::product: return "product";
    case CombineKind::connsum: return "connsum";
    }
    return "?";
}

RootSequence root_new(const std::vector<AtomType>& atoms)
{
    if (atoms.empty()) fail(ErrorKind::invalid_argument, "a root sequence needs at least one atom");
    RootSequence r;
    for (const auto& a : atoms) {
        if (!a.is_manifold)
            fail(ErrorKind::invalid_argument, "atom " + a.name + " has bit 0; initial values must be manifolds");
        if (!a.closed || !a.connected)
            fail(ErrorKind::invalid_argument, "atom " + a.name + " is not a closed connected manifold");
        r.entries_.push_back({PolyhedronTerm::atom(a), 1});
    }
    r.root_ = atoms;
    return r;
}

RootSequence root_combine(const RootSequence& r, std::size_t k1, std::size_t k2, CombineKind kind)
{
    const std::size_t n = r.entries_.size();
    if (k1 >= k2 || k2 >= n)
        fail(ErrorKind::invalid_argument, "combine needs indices k1 < k2 < " + std::to_string(n) + ", got " +
                                              std::to_string(k1) + ", " + std::to_string(k2));
    const RootEntry& a = r.entries_[k1];
    const RootEntry& b = r.entries_[k2];
    RootSequence out = r;
    PolyhedronTerm combined = a.term;
    int bit = 0;
    switch (kind) {
    case CombineKind::bouquet:
        combined = PolyhedronTerm::bouquet({a.term, b.term});
        break;
    case CombineKind::product:
        if (a.bit == 0 && b.bit == 0)
            fail(ErrorKind::grammar, "product of two bit-0 entries; the pair must differ from (0,0)", "(2d2)");
        combined = PolyhedronTerm::product(a.term, b.term);
        break;
    case CombineKind::connsum:
        if (a.bit != 1 || b.bit != 1)
            fail(ErrorKind::grammar, "connected sum needs the bit pair (1,1)", "(2d3)");
        combined = PolyhedronTerm::connsum({a.term, b.term});
        bit = 1;
        break;
    }
    if (kind != CombineKind::connsum) {
        const auto ek = kind == CombineKind::bouquet ? TraceEmbedding::Kind::bouquet_summand
                                                     : TraceEmbedding::Kind::product_factor;
        out.trace_.push_back({ek, a.term, combined, a.bit == 1});
        out.trace_.push_back({ek, b.term, combined, b.bit == 1});
    }
    out.entries_.erase(out.entries_.begin() + static_cast<std::ptrdiff_t>(k2));
    out.entries_.erase(out.entries_.begin() + static_cast<std::ptrdiff_t>(k1));
    out.entries_.push_back({combined, bit});
    out.history_.push_back({k1, k2, kind});
    return out;
}

FinishedPolyhedron root_finish(const RootSequence& r)
{
    if (r.entries().size() != 1)
        fail(ErrorKind::invalid_argument,
             "root sequence not finished: " + std::to_string(r.entries().size()) + " entries remain");
    return {r.entries().front().term, r.trace(), r.root()};
}

}  // namespace sgm
