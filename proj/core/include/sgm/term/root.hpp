#pragma once

#include <vector>

#include "sgm/term/term.hpp"

namespace sgm {

enum class CombineKind { bouquet, product, connsum };

const char* to_string(CombineKind k);

struct RootEntry {
    PolyhedronTerm term;
    int bit;
};

struct CombineRecord {
    std::size_t k1;
    std::size_t k2;
    CombineKind kind;
};

struct TraceEmbedding {
    enum class Kind { bouquet_summand, product_factor };
    Kind kind;
    PolyhedronTerm source;
    PolyhedronTerm target;
    bool special;  // the embedded piece carried bit 1
};

/// Sequence of (term, bit) entries being merged two at a time.
class RootSequence {
  public:
    const std::vector<RootEntry>& entries() const { return entries_; }
    const std::vector<CombineRecord>& history() const { return history_; }
    const std::vector<TraceEmbedding>& trace() const { return trace_; }
    /// The atoms the sequence started from.
    const std::vector<AtomType>& root() const { return root_; }

  private:
    friend RootSequence root_new(const std::vector<AtomType>&);
    friend RootSequence root_combine(const RootSequence&, std::size_t, std::size_t, CombineKind);
    std::vector<RootEntry> entries_;
    std::vector<CombineRecord> history_;
    std::vector<TraceEmbedding> trace_;
    std::vector<AtomType> root_;
};

/// Every atom must be a closed connected manifold (bit 1).
RootSequence root_new(const std::vector<AtomType>& atoms);

/// Removes entries k1 < k2 and appends their combination.
RootSequence root_combine(const RootSequence& r, std::size_t k1, std::size_t k2, CombineKind kind);

struct FinishedPolyhedron {
    PolyhedronTerm term;
    std::vector<TraceEmbedding> trace;
    std::vector<AtomType> root;
};

/// Requires exactly one remaining entry.
FinishedPolyhedron root_finish(const RootSequence& r);

}  // namespace sgm
