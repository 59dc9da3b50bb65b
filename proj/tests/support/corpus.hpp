#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "sgm/invariants/holes.hpp"
#include "sgm/term/atom.hpp"
#include "sgm/term/term.hpp"

namespace sgm::testing {

/// S^0 .. S^5 and S^2 x S^2.
inline std::vector<AtomType> corpus_atoms()
{
    const AtomTable t = AtomTable::builtin();
    std::vector<AtomType> out;
    for (int d = 0; d <= 5; ++d) out.push_back(t.sphere(d));
    out.push_back(*t.find("S2xS2"));
    return out;
}

/// Every canonical term with 1..max_atoms atom occurrences. Levels below the
/// top are kept; the top level is streamed to `visit` without being stored.
class TermCorpus {
  public:
    TermCorpus(std::vector<AtomType> atoms, int max_atoms) : atoms_(std::move(atoms)), max_(max_atoms) {}

    /// Calls visit(term, atom_count) once per canonical term.
    std::size_t for_each(const std::function<void(const PolyhedronTerm&, int)>& visit)
    {
        levels_.assign(max_ + 1, {});
        std::size_t count = 0;
        for (int c = 1; c <= max_; ++c) {
            const bool keep = c < max_;
            auto emit = [&](const PolyhedronTerm& t) {
                visit(t, c);
                ++count;
                if (keep) levels_[c].push_back(t);
            };
            build_level(c, emit);
        }
        return count;
    }

  private:
    void build_level(int c, const std::function<void(const PolyhedronTerm&)>& emit)
    {
        if (c == 1) {
            for (const auto& a : atoms_) emit(PolyhedronTerm::atom(a));
            return;
        }
        for (int i = 1; i < c; ++i)
            for (const auto& a : levels_[i])
                for (const auto& b : levels_[c - i])
                    if (a.bit() == 1 || b.bit() == 1) emit(PolyhedronTerm::product(a, b));
        // bouquets: multisets of at least two non-bouquet pieces, weakly
        // increasing in (size, index)
        std::vector<PolyhedronTerm> parts;
        std::function<void(int, int, std::size_t)> bouquets = [&](int rem, int size, std::size_t idx) {
            if (rem == 0) {
                if (parts.size() >= 2) emit(PolyhedronTerm::bouquet(parts));
                return;
            }
            for (int s = size; s <= rem && s < c; ++s) {
                const auto& lvl = levels_[s];
                for (std::size_t j = s == size ? idx : 0; j < lvl.size(); ++j) {
                    if (lvl[j].kind() == NodeKind::bouquet) continue;
                    parts.push_back(lvl[j]);
                    bouquets(rem - s, s, j);
                    parts.pop_back();
                }
            }
        };
        bouquets(c, 1, 0);
        // connected sums of c atoms of one positive dimension
        std::vector<std::size_t> pick;
        std::function<void(std::size_t)> sums = [&](std::size_t from) {
            if (static_cast<int>(pick.size()) == c) {
                std::vector<PolyhedronTerm> ps;
                for (auto i : pick) ps.push_back(PolyhedronTerm::atom(atoms_[i]));
                emit(PolyhedronTerm::connsum(ps));
                return;
            }
            for (std::size_t i = from; i < atoms_.size(); ++i) {
                if (atoms_[i].dim < 1) continue;
                if (!pick.empty() && atoms_[i].dim != atoms_[pick.front()].dim) continue;
                pick.push_back(i);
                sums(i);
                pick.pop_back();
            }
        };
        sums(0);
    }

    std::vector<AtomType> atoms_;
    int max_;
    std::vector<std::vector<PolyhedronTerm>> levels_;
};

/// Hole specs for 2 <= n <= max_n: up to max_holes holes, each a multiset of
/// up to max_summands sphere dimensions in 1..n-2 (a point hole is empty).
inline std::vector<std::pair<int, HoleSpec>> hole_corpus(int max_n, int max_holes, int max_summands)
{
    std::vector<std::pair<int, HoleSpec>> out;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<std::vector<int>> shapes{{}};
        std::function<void(std::vector<int>&, int)> grow = [&](std::vector<int>& cur, int from) {
            if (!cur.empty()) shapes.push_back(cur);
            if (static_cast<int>(cur.size()) == max_summands) return;
            for (int s = from; s <= n - 2; ++s) {
                cur.push_back(s);
                grow(cur, s);
                cur.pop_back();
            }
        };
        std::vector<int> cur;
        grow(cur, 1);
        std::vector<std::size_t> pick;
        std::function<void(std::size_t)> holes = [&](std::size_t from) {
            HoleSpec h;
            for (auto i : pick) h.holes.push_back(shapes[i]);
            out.emplace_back(n, h);
            if (static_cast<int>(pick.size()) == max_holes) return;
            for (std::size_t i = from; i < shapes.size(); ++i) {
                pick.push_back(i);
                holes(i);
                pick.pop_back();
            }
        };
        holes(0);
    }
    return out;
}

}  // namespace sgm::testing
