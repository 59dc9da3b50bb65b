#include <algorithm>
#include <random>

#include "../support/corpus.hpp"
#include "doctest.h"
#include "sgm/error.hpp"
#include "sgm/term/classify.hpp"
#include "sgm/term/parser.hpp"
#include "sgm/term/root.hpp"

using namespace sgm;

namespace {

const AtomTable& table()
{
    static const AtomTable t = AtomTable::builtin();
    return t;
}

PolyhedronTerm term(const std::string& s) { return parse_term(s, table()); }

std::string clause_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.clause();
    }
    return "no error";
}

std::vector<std::string> names(const std::vector<AtomType>& atoms)
{
    std::vector<std::string> out;
    for (const auto& a : atoms) out.push_back(a.name);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("term-grammar")
{
    TEST_CASE("atom table invariants")
    {
        for (const auto& name : table().names()) {
            const AtomType a = *table().find(name);
            CHECK_MESSAGE(!validate_atom(a), name);
        }
        CHECK(table().find("pt")->name == "S0");
        CHECK(table().sphere(3).homology == GradedModule::free(Coefficients::integers(), {{0, 1}, {3, 1}}));
        AtomType bad = sphere_atom(4);
        bad.signature = 1;
        CHECK(validate_atom(bad));
        bad = sphere_atom(3);
        bad.signature = 0;
        CHECK(validate_atom(bad));
        bad = sphere_atom(3);
        bad.connectivity = 3;
        CHECK(validate_atom(bad));
    }

    TEST_CASE("root_new")
    {
        const RootSequence one = root_new({table().sphere(3)});
        CHECK(one.entries().size() == 1);
        CHECK(one.entries()[0].bit == 1);
        CHECK(root_new({table().sphere(2), table().sphere(2), table().sphere(3)}).entries().size() == 3);
        CHECK_THROWS_AS(root_new({}), Error);
    }

    TEST_CASE("root_combine examples")
    {
        const RootSequence r = root_new({table().sphere(2), table().sphere(3)});
        const RootSequence b = root_combine(r, 0, 1, CombineKind::bouquet);
        REQUIRE(b.entries().size() == 1);
        CHECK(b.entries()[0].term.str() == "B(S2,S3)");
        CHECK(b.entries()[0].bit == 0);
        CHECK(b.trace().size() == 2);
        CHECK(std::all_of(b.trace().begin(), b.trace().end(), [](const TraceEmbedding& t) { return t.special; }));

        const RootSequence s = root_combine(root_new({table().sphere(2), table().sphere(2)}), 0, 1, CombineKind::connsum);
        CHECK(s.entries()[0].term.str() == "CS[S2,S2]");
        CHECK(s.entries()[0].bit == 1);
        CHECK(s.trace().empty());

        const RootSequence four = root_new({table().sphere(2), table().sphere(3), table().sphere(2), table().sphere(4)});
        const RootSequence w = root_combine(root_combine(four, 0, 1, CombineKind::bouquet), 0, 1, CombineKind::bouquet);
        // entries: B(S2,S3), B(S2,S4)
        CHECK(clause_of([&] { root_combine(w, 0, 1, CombineKind::product); }) == "(2d2)");
        CHECK(clause_of([&] { root_combine(w, 0, 1, CombineKind::connsum); }) == "(2d3)");
        CHECK_THROWS_AS(root_combine(four, 1, 1, CombineKind::bouquet), Error);
        CHECK_THROWS_AS(root_combine(four, 2, 1, CombineKind::bouquet), Error);
        CHECK_THROWS_AS(root_combine(four, 0, 9, CombineKind::bouquet), Error);
    }

    TEST_CASE("remove-and-append order")
    {
        const RootSequence r = root_new({table().sphere(1), table().sphere(2), table().sphere(3), table().sphere(4)});
        const RootSequence c = root_combine(r, 1, 3, CombineKind::bouquet);
        REQUIRE(c.entries().size() == 3);
        CHECK(c.entries()[0].term.str() == "S1");
        CHECK(c.entries()[1].term.str() == "S3");
        CHECK(c.entries()[2].term.str() == "B(S2,S4)");
        CHECK(c.history().size() == 1);
        CHECK(c.history()[0].k1 == 1);
        CHECK(c.history()[0].k2 == 3);
    }

    TEST_CASE("root_finish")
    {
        const auto single = root_finish(root_new({table().sphere(5)}));
        CHECK(single.term.str() == "S5");
        CHECK(single.trace.empty());
        const auto b = root_finish(root_combine(root_new({table().sphere(2), table().sphere(3)}), 0, 1, CombineKind::bouquet));
        CHECK(b.term.str() == "B(S2,S3)");
        CHECK(b.trace.size() == 2);
        CHECK_THROWS_AS(root_finish(root_new({table().sphere(2), table().sphere(2), table().sphere(3)})), Error);
    }

    TEST_CASE("random histories preserve the root and count trace records")
    {
        std::mt19937_64 rng(17);
        const std::vector<AtomType> pool{table().sphere(1), table().sphere(2), table().sphere(2), table().sphere(3),
                                         *table().find("S2xS2"), table().sphere(4)};
        int finished = 0;
        for (int t = 0; t < 400; ++t) {
            std::vector<AtomType> atoms;
            const int n = std::uniform_int_distribution<int>(1, 6)(rng);
            for (int i = 0; i < n; ++i) atoms.push_back(pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)]);
            RootSequence r = root_new(atoms);
            std::size_t trace_steps = 0;
            bool stuck = false;
            while (r.entries().size() > 1 && !stuck) {
                stuck = true;
                for (int attempt = 0; attempt < 12 && stuck; ++attempt) {
                    const std::size_t m = r.entries().size();
                    std::size_t a = std::uniform_int_distribution<std::size_t>(0, m - 1)(rng);
                    std::size_t b = std::uniform_int_distribution<std::size_t>(0, m - 2)(rng);
                    if (b >= a) ++b;
                    const auto kind = static_cast<CombineKind>(std::uniform_int_distribution<int>(0, 2)(rng));
                    try {
                        r = root_combine(r, std::min(a, b), std::max(a, b), kind);
                        if (kind != CombineKind::connsum) ++trace_steps;
                        stuck = false;
                    } catch (const Error& e) {
                        CHECK(e.kind() == ErrorKind::grammar);
                    }
                }
                if (stuck) {
                    r = root_combine(r, 0, 1, CombineKind::bouquet);
                    ++trace_steps;
                    stuck = false;
                }
            }
            const auto f = root_finish(r);
            CHECK(names(f.root) == names(atoms));
            CHECK(names(f.term.atoms()) == names(atoms));
            CHECK(f.trace.size() == 2 * trace_steps);
            CHECK(r.history().size() == atoms.size() - 1);
            CHECK(!check_bit_table(f.term));
            for (const auto& tr : f.trace) CHECK(tr.special == (tr.source.bit() == 1));
            ++finished;
        }
        CHECK(finished == 400);
    }

    TEST_CASE("bit table over the four-atom corpus")
    {
        testing::TermCorpus corpus(testing::corpus_atoms(), 4);
        std::size_t bad = 0;
        corpus.for_each([&](const PolyhedronTerm& t, int) {
            if (check_bit_table(t)) ++bad;
            const int want = t.kind() == NodeKind::atom ? (t.atom_type().is_manifold ? 1 : 0)
                                                        : (t.kind() == NodeKind::connsum ? 1 : 0);
            if (t.bit() != want) ++bad;
        });
        CHECK(bad == 0);
    }

    TEST_CASE("parser examples")
    {
        CHECK(term("B(S2,S3)").kind() == NodeKind::bouquet);
        CHECK(term(" B ( S3 , S2 ) ").str() == "B(S2,S3)");
        const PolyhedronTerm cs = term("CS[@S2xS2,@S2xS2]");
        CHECK(cs.kind() == NodeKind::connsum);
        CHECK(cs.children().size() == 2);
        CHECK(cs.bit() == 1);
        CHECK(clause_of([] { term("P(B(S2,S2),B(S3,S3))"); }) == "(2d2)");
        CHECK(clause_of([] { term("CS[B(S2,S2),S4]"); }) == "(2d3)");
        CHECK(clause_of([] { term("CS[S2,S3]"); }) == "(2d3)");
        CHECK(clause_of([] { term("B(S2)"); }) == "(2d1)");
        CHECK_THROWS_AS(term("S9999"), Error);
        CHECK_THROWS_AS(term("@nosuch"), Error);
        try {
            term("B(S2,,S3)");
            FAIL("no syntax error");
        } catch (const SyntaxError& e) {
            CHECK(e.position() == 5);
        }
        CHECK_THROWS_AS(term("P(S2,S3"), SyntaxError);
        CHECK_THROWS_AS(term("S2 S3"), SyntaxError);
        CHECK(term("@pt").str() == term("S0").str());
    }

    TEST_CASE("parse-print round trip on a fuzzed corpus")
    {
        std::mt19937_64 rng(99);
        const std::vector<std::string> leaves{"S0", "S1", "S2", "S3", "S4", "S5", "@S2xS2", "@CP2", "@Wu", "@S2xS3"};
        std::function<std::string(int)> gen = [&](int depth) -> std::string {
            const int choice = depth <= 0 ? 0 : std::uniform_int_distribution<int>(0, 3)(rng);
            if (choice == 0) return leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)];
            if (choice == 1) {
                const int n = std::uniform_int_distribution<int>(2, 3)(rng);
                std::string s = "B(";
                for (int i = 0; i < n; ++i) s += (i ? "," : "") + gen(depth - 1);
                return s + ")";
            }
            if (choice == 2) return "P(" + gen(depth - 1) + "," + gen(0) + ")";
            const int d = std::uniform_int_distribution<int>(2, 4)(rng);
            return "CS[S" + std::to_string(d) + ",S" + std::to_string(d) + (d == 4 ? ",@S2xS2]" : "]");
        };
        int valid = 0;
        for (int t = 0; t < 2000; ++t) {
            std::string s = gen(3);
            // random whitespace
            std::string spaced;
            for (char c : s) {
                const bool punct = c == '(' || c == ')' || c == '[' || c == ']' || c == ',';
                if (punct && std::bernoulli_distribution(0.3)(rng)) spaced += ' ';
                spaced += c;
                if (punct && std::bernoulli_distribution(0.3)(rng)) spaced += ' ';
            }
            PolyhedronTerm a = PolyhedronTerm::atom(table().sphere(0));
            try {
                a = term(spaced);
            } catch (const Error& e) {
                CHECK(e.kind() != ErrorKind::syntax);
                continue;
            }
            ++valid;
            const PolyhedronTerm b = term(a.str());
            CHECK(b == a);
            CHECK(term(b.str()).str() == b.str());
        }
        CHECK(valid > 500);
    }

    TEST_CASE("classify_sie_see")
    {
        const PolyhedronTerm pt = term("@pt");
        const auto plain = classify_sie_see(pt, EmbeddingMode::embedded);
        CHECK(plain.label().find("SEE") != std::string::npos);
        CHECK(!plain.essentially);
        const auto borromean =
            classify_sie_see(pt, EmbeddingMode::embedded, {term("S3"), term("S3"), term("S3")});
        CHECK(borromean.essentially);
        CHECK(borromean.very_essentially);
        const auto s2s2 = classify_sie_see(pt, EmbeddingMode::immersed, {term("@S2xS2")});
        CHECK(s2s2.essentially);
        CHECK(!s2s2.very_essentially);
        CHECK(s2s2.label().find("SIE") != std::string::npos);
        CHECK_THROWS_AS(classify_sie_see(term("S2"), EmbeddingMode::embedded, {term("S3")},
                                         std::vector<AtomType>{table().sphere(2)}),
                        Error);
    }

    TEST_CASE("normal form classifier")
    {
        CHECK(classify_thm2_normal_form(term("B(S2,CS[@S2xS2,@S2xS2])"), 6, 2).status == VerdictStatus::accept);
        const auto rej = classify_thm2_normal_form(term("P(@S2xS2,S2)"), 6, 2);
        CHECK(rej.status == VerdictStatus::reject);
        CHECK(rej.witness.find("S2xS2") != std::string::npos);
        CHECK(classify_thm2_normal_form(term("P(@S2xS2,S2)"), 7, 2).status == VerdictStatus::no_constraint);
        CHECK(classify_thm2_normal_form(term("B(P(S2,B(S3,S3)),S4)"), 6, 2).status == VerdictStatus::accept);
        // S1 is not simply connected, so not 1-connected
        CHECK(classify_thm2_normal_form(term("B(S1,S2)"), 6, 2).status == VerdictStatus::reject);
        CHECK_THROWS_AS(classify_thm2_normal_form(term("S2"), 6, 1), Error);
        CHECK_THROWS_AS(classify_thm2_normal_form(term("S2"), 1, 2), Error);
    }

    TEST_CASE("atom whitelist")
    {
        auto v = [&](const char* name, int n, EmbeddingMode m) {
            return validate_root_thm4_thm5({*table().find(name)}, n, 2, m).status;
        };
        CHECK(v("S2xS2#S2xS2", 5, EmbeddingMode::embedded) == VerdictStatus::accept);
        CHECK(v("CP2#CP2bar", 6, EmbeddingMode::immersed) == VerdictStatus::accept);
        CHECK(v("CP2#CP2bar", 6, EmbeddingMode::embedded) == VerdictStatus::reject);
        CHECK(v("CP2#CP2bar", 5, EmbeddingMode::embedded) == VerdictStatus::reject);
        CHECK(v("S2xtS3", 6, EmbeddingMode::embedded) == VerdictStatus::reject);
        CHECK(v("S2xS3", 6, EmbeddingMode::embedded) == VerdictStatus::accept);
        CHECK(v("S2xS3", 5, EmbeddingMode::embedded) == VerdictStatus::reject);
        CHECK(v("CP2", 6, EmbeddingMode::immersed) == VerdictStatus::reject);
        CHECK(v("S4", 5, EmbeddingMode::embedded) == VerdictStatus::accept);
        CHECK(is_s2xs2_sum_type(*table().find("S2xS2")));
        CHECK(!is_s2xs2_sum_type(*table().find("CP2#CP2bar")));
        CHECK_THROWS_AS(validate_root_thm4_thm5({table().sphere(2)}, 7, 2, EmbeddingMode::embedded), Error);
    }
}
