// One line per acceptance criterion. Runtime limits and sample sizes are
// fixed below; every comparison is exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "../support/corpus.hpp"
#include "../support/oracles.hpp"
#include "../support/thm3_gen.hpp"
#include "sgm/dga/dga.hpp"
#include "sgm/error.hpp"
#include "sgm/image/sgm.hpp"
#include "sgm/invariants/term_homology.hpp"
#include "sgm/invariants/thm3.hpp"
#include "sgm/invariants/vanishing.hpp"
#include "sgm/io/json_io.hpp"
#include "sgm/term/classify.hpp"
#include "sgm/term/parser.hpp"
#include "sgm/term/root.hpp"

using namespace sgm;

namespace {

constexpr double kCorpusSeconds = 300.0;
constexpr double kPipelineSeconds = 10.0;
constexpr double kHandlesSeconds = 60.0;
constexpr double kRingSeconds = 60.0;
constexpr int kCorpusMaxAtoms = 5;
constexpr int kHoleMaxN = 7, kHoleMaxHoles = 3, kHoleMaxSummands = 3;
constexpr int kHandlesMaxN = 7, kHandlesMaxM = 9, kHandlesMaxPieces = 4;
constexpr int kRandomRings = 200;
constexpr int kMasseyTrials = 100;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

const std::vector<Coefficients>& rings()
{
    static const std::vector<Coefficients> r{Coefficients::integers(), Coefficients::rationals(),
                                             Coefficients::mod_p(2), Coefficients::mod_p(3)};
    return r;
}

Outcome criterion1()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t mismatches = 0;
    std::string first;
    testing::TermCorpus corpus(testing::corpus_atoms(), kCorpusMaxAtoms);
    const std::size_t terms = corpus.for_each([&](const PolyhedronTerm& t, int) {
        const auto oracle = homology_multi(term_chain_model(t), rings());
        for (std::size_t i = 0; i < rings().size(); ++i)
            if (!(homology_of_term(t, rings()[i]) == oracle[i]) && mismatches++ == 0)
                first = t.str() + " over " + rings()[i].name();
    });
    const auto holes = testing::hole_corpus(kHoleMaxN, kHoleMaxHoles, kHoleMaxSummands);
    for (const auto& [n, spec] : holes)
        for (const auto& a : rings())
            if (!(disc_with_holes_homology(n, 2, spec, a).homology == disc_with_holes_oracle(n, spec, a)) &&
                mismatches++ == 0)
                first = "n=" + std::to_string(n) + " " + hole_spec_str(spec) + " over " + a.name();
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << terms << " terms and " << holes.size() << " hole specs over Z, Q, Z/2, Z/3; " << mismatches
      << " mismatches";
    if (!first.empty()) d << " (first: " << first << ")";
    d << "; " << fmt_seconds(s) << " (limit " << kCorpusSeconds << " s)";
    return {mismatches == 0 && s < kCorpusSeconds, d.str()};
}

Outcome criterion2()
{
    const auto t0 = std::chrono::steady_clock::now();
    const SourceReport r = main_thm1_pipeline();
    const double s = seconds_since(t0);
    std::string h2_line = "missing";
    bool h2_reported = false;
    for (const auto& c : r.checks)
        if (c.name.rfind("H2(M) rank vs stated", 0) == 0) {
            h2_reported = c.status == "pass" || c.status == "discrepancy";
            h2_line = c.status + ": " + c.detail;
        }
    const bool ok = r.homology.at(1).is_zero() && r.homology.at(3).is_zero() && r.homology == r.homology_mv &&
                    r.massey.defined && r.massey.nonvanishing && r.massey.indeterminacy_trivial && r.thm1.pass &&
                    h2_reported && s < kPipelineSeconds;
    std::ostringstream d;
    d << "H(M) = " << r.homology.str() << " (Mayer-Vietoris " << (r.homology == r.homology_mv ? "agrees" : "differs")
      << "); Massey " << (r.massey.nonvanishing ? "nonvanishing" : "vanishing") << ", indeterminacy "
      << (r.massey.indeterminacy_trivial ? "trivial" : "nontrivial") << "; vanishing check "
      << (r.thm1.pass ? "passes" : "fails") << "; H2 " << h2_line << "; " << fmt_seconds(s) << " (limit "
      << kPipelineSeconds << " s)";
    return {ok, d.str()};
}

Outcome criterion3()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t cases = 0, bad = 0;
    std::string first;
    const Coefficients z = Coefficients::integers();
    for (int n = 2; n <= kHandlesMaxN; ++n) {
        std::vector<int> l;
        std::function<void(int)> grow = [&](int from) {
            for (int m = n + 1; m <= kHandlesMaxM; ++m) {
                const SgmImage img = SgmImage::handles(n, l);
                const GradedModule h = source_homology(img, m, z);
                ++cases;
                if (!(h == sphere_product_sum_homology(m, l, z)) || !poincare_duality_holds(h, m) ||
                    !(h == source_homology_mv(img, m, z))) {
                    if (bad++ == 0) first = "n=" + std::to_string(n) + " m=" + std::to_string(m);
                }
            }
            if (static_cast<int>(l.size()) == kHandlesMaxPieces) return;
            for (int v = from; v <= n - 1; ++v) {
                l.push_back(v);
                grow(v);
                l.pop_back();
            }
        };
        grow(1);
    }
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << cases << " (n, m, {l_j}) cases with n <= " << kHandlesMaxN << ", m <= " << kHandlesMaxM << ", up to "
      << kHandlesMaxPieces << " pieces, closed form, duality and Mayer-Vietoris route; " << bad << " failures";
    if (!first.empty()) d << " (first: " << first << ")";
    d << "; " << fmt_seconds(s) << " (limit " << kHandlesSeconds << " s)";
    return {bad == 0 && s < kHandlesSeconds, d.str()};
}

template <typename F>
bool throws(F&& f)
{
    try {
        f();
    } catch (const Error&) {
        return true;
    }
    return false;
}

Outcome criterion4()
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20261014);
    std::size_t bad = 0;
    std::string first;
    for (int i = 0; i < kRandomRings; ++i) {
        const Thm3Params p = testing::random_thm3_params(rng);
        const CohomologyRing r = thm3_ring(p);
        if (auto why = testing::ring_axiom_scan(r); why && bad++ == 0) first = *why;
    }
    // nonzero a_1 inside the forced-zero prefix: n = 7, k = 3, G_2 = G_4 = 1
    Thm3Params prefix;
    prefix.n = 7;
    prefix.k = 3;
    prefix.ranks = {{2, 1}, {4, 1}, {6, 2}};
    prefix.a = {1};
    const bool prefix_enforced = throws([&] { thm3_ring(prefix); });
    prefix.a = {0};
    const bool prefix_zero_ok = !throws([&] { thm3_ring(prefix); });
    // middle rank 4 at n = 5: the literal index of (2, 4) is 7 > l0 = 6
    Thm3Params mid;
    mid.n = 5;
    mid.k = 2;
    mid.ranks = {{2, 4}, {4, 4}};
    mid.a.assign(thm3_sequence_length(5, mid.ranks), 1);
    mid.a0 = {1, 2, 3, 4, 5, 6};
    mid.mode = IndexMode::literal;
    const bool literal_raises = throws([&] { thm3_ring(mid); });
    mid.mode = IndexMode::triangular;
    bool triangular_ok = false;
    try {
        triangular_ok = !testing::ring_axiom_scan(thm3_ring(mid));
    } catch (const Error&) {
    }
    const double s = seconds_since(t0);
    std::ostringstream d;
    d << kRandomRings << " random parameter sets, " << bad << " axiom failures";
    if (!first.empty()) d << " (first: " << first << ")";
    d << "; zero prefix " << (prefix_enforced && prefix_zero_ok ? "enforced" : "NOT enforced")
      << "; literal middle index (n=5, rank 4, pair (2,4)) " << (literal_raises ? "raises" : "does not raise")
      << ", triangular " << (triangular_ok ? "succeeds" : "fails") << "; " << fmt_seconds(s) << " (limit "
      << kRingSeconds << " s)";
    return {bad == 0 && prefix_enforced && prefix_zero_ok && literal_raises && triangular_ok && s < kRingSeconds,
            d.str()};
}

Outcome criterion5()
{
    const CohomologyRing torus = ring_from_json(read_json_file(std::string(SGMTK_TEST_DATA_DIR) + "/torus7.json"));
    const Thm1Verdict v = check_thm1_vanishing(torus, 7, 6);
    // the witness, multiplied out independently, must be a nonzero top-degree product
    bool witness_ok = v.witness.size() == 6;
    Combination prod{{torus.unit(), 1}};
    for (const auto& label : v.witness) {
        auto i = torus.find(label);
        witness_ok = witness_ok && i && torus.degree(*i) == 1;
        if (i) prod = torus.normalize(torus.multiply(prod, Combination{{*i, 1}}));
    }
    witness_ok = witness_ok && !prod.empty();
    std::mt19937_64 rng(7);
    std::size_t rings_checked = 0, bad = 0;
    for (int i = 0; i < kRandomRings; ++i) {
        const Thm3Params p = testing::random_thm3_params(rng);
        const CohomologyRing r = thm3_ring(p);
        for (int gap = 1; gap < p.k; ++gap) {
            const Thm1Verdict w = check_thm1_vanishing(r, p.n + gap, p.n);
            ++rings_checked;
            if (!w.pass || !w.vacuous) ++bad;
        }
    }
    std::ostringstream d;
    d << "7-torus at (7,6): " << (v.pass ? "passes" : "fails") << " with witness";
    for (const auto& w : v.witness) d << " " << w;
    d << " (" << v.witness.size() << " factors, product " << (prod.empty() ? "zero" : "nonzero") << "); "
      << rings_checked << " hole-formula rings with m-n < k, " << bad << " not vacuous passes";
    return {!v.pass && witness_ok && bad == 0 && rings_checked > 0, d.str()};
}

Outcome criterion6()
{
    const AtomTable atoms = AtomTable::builtin();
    struct Fixture {
        std::string what;
        VerdictStatus got;
        VerdictStatus want;
    };
    std::vector<Fixture> fx;
    auto term = [&](const char* s) { return parse_term(s, atoms); };
    fx.push_back({"B(S2,CS[S2xS2,S2xS2]) n=6 k=2",
                  classify_thm2_normal_form(term("B(S2,CS[@S2xS2,@S2xS2])"), 6, 2).status, VerdictStatus::accept});
    fx.push_back({"P(S2xS2,S2) n=6 k=2", classify_thm2_normal_form(term("P(@S2xS2,S2)"), 6, 2).status,
                  VerdictStatus::reject});
    fx.push_back({"P(S2xS2,S2) n=7 k=2", classify_thm2_normal_form(term("P(@S2xS2,S2)"), 7, 2).status,
                  VerdictStatus::no_constraint});
    fx.push_back({"#2(S2xS2) at (5,2)",
                  validate_root_thm4_thm5({*atoms.find("S2xS2#S2xS2")}, 5, 2, EmbeddingMode::embedded).status,
                  VerdictStatus::accept});
    fx.push_back({"CP2#CP2bar at (6,2) SIE",
                  validate_root_thm4_thm5({*atoms.find("CP2#CP2bar")}, 6, 2, EmbeddingMode::immersed).status,
                  VerdictStatus::accept});
    fx.push_back({"non-spin dim 5 at (6,2) SEE",
                  validate_root_thm4_thm5({*atoms.find("S2xtS3")}, 6, 2, EmbeddingMode::embedded).status,
                  VerdictStatus::reject});
    std::size_t fixture_bad = 0;
    std::string first;
    for (const auto& f : fx)
        if (f.got != f.want && fixture_bad++ == 0)
            first = f.what + ": " + to_string(f.got) + " instead of " + to_string(f.want);

    // reassociation: random groupings of the same bouquet pieces, built by
    // nested bouquet nodes and by root sequences in shuffled order
    const std::vector<PolyhedronTerm> pieces{term("S2"),          term("S3"),          term("@S2xS2"),
                                             term("P(S2,S3)"),    term("P(S2,B(S2,S3))"), term("CS[@S2xS2,@S2xS2]"),
                                             term("P(@S2xS2,S2)"), term("S5"),          term("P(S3,S3)")};
    const std::vector<std::pair<int, int>> nk{{6, 2}, {5, 2}, {7, 2}, {9, 3}, {8, 3}, {4, 2}};
    std::mt19937_64 rng(62);
    std::size_t groupings = 0, reassoc_bad = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int count = std::uniform_int_distribution<int>(2, 5)(rng);
        std::vector<PolyhedronTerm> chosen;
        for (int i = 0; i < count; ++i)
            chosen.push_back(pieces[std::uniform_int_distribution<std::size_t>(0, pieces.size() - 1)(rng)]);
        const PolyhedronTerm flat = PolyhedronTerm::bouquet(chosen);
        std::vector<PolyhedronTerm> work = chosen;
        std::shuffle(work.begin(), work.end(), rng);
        while (work.size() > 1) {
            const std::size_t i = std::uniform_int_distribution<std::size_t>(0, work.size() - 2)(rng);
            const PolyhedronTerm merged = PolyhedronTerm::bouquet({work[i], work[i + 1]});
            work.erase(work.begin() + static_cast<long>(i), work.begin() + static_cast<long>(i) + 2);
            work.insert(work.begin() + static_cast<long>(i), merged);
        }
        const PolyhedronTerm nested = work.front();
        if (!(nested == flat)) ++reassoc_bad;
        for (const auto& [n, k] : nk) {
            ++groupings;
            const auto a = classify_thm2_normal_form(flat, n, k), b = classify_thm2_normal_form(nested, n, k);
            if (a.status != b.status) ++reassoc_bad;
        }
    }
    // root sequences over atoms, merged in different orders
    const std::vector<AtomType> root_atoms{atoms.sphere(2), atoms.sphere(3), atoms.sphere(3), *atoms.find("S2xS2")};
    std::optional<VerdictStatus> seen;
    for (int order = 0; order < 24; ++order) {
        RootSequence r = root_new(root_atoms);
        std::mt19937_64 g(static_cast<unsigned>(order));
        while (r.entries().size() > 1) {
            std::size_t a = std::uniform_int_distribution<std::size_t>(0, r.entries().size() - 1)(g);
            std::size_t b = std::uniform_int_distribution<std::size_t>(0, r.entries().size() - 2)(g);
            if (b >= a) ++b;
            r = root_combine(r, std::min(a, b), std::max(a, b), CombineKind::bouquet);
        }
        const auto v = classify_thm2_normal_form(root_finish(r).term, 6, 2).status;
        ++groupings;
        if (seen && *seen != v) ++reassoc_bad;
        seen = v;
    }
    std::ostringstream d;
    d << fx.size() << " fixtures, " << fixture_bad << " misclassified";
    if (!first.empty()) d << " (" << first << ")";
    d << "; " << groupings << " regrouped classifications, " << reassoc_bad << " changes";
    return {fixture_bad == 0 && reassoc_bad == 0, d.str()};
}

Outcome criterion7()
{
    const FiniteDGA a = borromean_fixture();
    const Combination x1{{*a.find("x1"), 1}}, x2{{*a.find("x2"), 1}}, x3{{*a.find("x3"), 1}};
    std::size_t runs = 0, bad = 0;
    for (MasseyConvention conv : {MasseyConvention::standard, MasseyConvention::kraines}) {
        for (int seed = 0; seed < kMasseyTrials; ++seed) {
            MasseyOptions opt{conv, static_cast<std::uint64_t>(seed + 1)};
            const MasseyResult r = triple_massey(a, x1, x2, x3, opt);
            ++runs;
            if (!r.defined || !r.nonvanishing) ++bad;
        }
        std::mt19937_64 rng(77);
        for (int t = 0; t < kMasseyTrials; ++t) {
            const BasisChange ch = random_basis_change(a, rng);
            const FiniteDGA b = change_basis(a, ch);
            MasseyOptions opt{conv, static_cast<std::uint64_t>(1000 + t)};
            const MasseyResult r =
                triple_massey(b, to_new_basis(a, ch, x1), to_new_basis(a, ch, x2), to_new_basis(a, ch, x3), opt);
            ++runs;
            if (!validate_dga(b).valid || !r.defined || !r.nonvanishing) ++bad;
        }
    }
    std::ostringstream d;
    d << runs << " runs (" << kMasseyTrials << " perturbed primitives and " << kMasseyTrials
      << " basis changes per sign convention, 2 conventions); " << bad << " vanishing or undefined verdicts";
    return {bad == 0 && runs == 4u * kMasseyTrials, d.str()};
}

}  // namespace

int main()
{
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
        {"1 formula vs chain oracle", criterion1}, {"2 Borromean pipeline", criterion2},
        {"3 sphere-product sources", criterion3},  {"4 hole-ring generator", criterion4},
        {"5 low-degree product vanishing", criterion5}, {"6 normal form and atom rules", criterion6},
        {"7 Massey robustness", criterion7}};
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << std::endl;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << (criteria.size() - failed) << "/" << criteria.size()
              << std::endl;
    return failed ? 1 : 0;
}
