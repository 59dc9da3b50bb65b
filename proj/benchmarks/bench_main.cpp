#include <benchmark/benchmark.h>

#include <random>

#include "sgm/chain/smith.hpp"
#include "sgm/dga/dga.hpp"
#include "sgm/image/sgm.hpp"
#include "sgm/invariants/term_homology.hpp"
#include "sgm/term/parser.hpp"
#include "support/corpus.hpp"

namespace {

sgm::IntegerMatrix random_matrix(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> entry(-3, 3);
    sgm::IntegerMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
    return m;
}

void BM_SmithNormalForm(benchmark::State& state)
{
    const auto m = random_matrix(static_cast<std::size_t>(state.range(0)), 17);
    for (auto _ : state) benchmark::DoNotOptimize(sgm::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

void BM_TermHomology(benchmark::State& state)
{
    const auto t = sgm::parse_term("B(P(S2,B(S3,S3)),CS[@S2xS2,@S2xS2],P(@Wu,S1))");
    for (auto _ : state) benchmark::DoNotOptimize(sgm::homology_of_term(t, sgm::Coefficients::integers()));
}
BENCHMARK(BM_TermHomology);

void BM_TermChainModel(benchmark::State& state)
{
    const auto t = sgm::parse_term("B(P(S2,B(S3,S3)),CS[@S2xS2,@S2xS2],P(@Wu,S1))");
    for (auto _ : state)
        benchmark::DoNotOptimize(sgm::homology(sgm::term_chain_model(t), sgm::Coefficients::integers()));
}
BENCHMARK(BM_TermChainModel);

void BM_CorpusSlice(benchmark::State& state)
{
    sgm::testing::TermCorpus corpus(sgm::testing::corpus_atoms(), static_cast<int>(state.range(0)));
    std::size_t terms = 0;
    for (auto _ : state) {
        terms = corpus.for_each([](const sgm::PolyhedronTerm& t, int) {
            benchmark::DoNotOptimize(sgm::homology_of_term(t, sgm::Coefficients::integers()));
        });
    }
    state.counters["terms"] = static_cast<double>(terms);
}
BENCHMARK(BM_CorpusSlice)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_BorromeanMassey(benchmark::State& state)
{
    const auto a = sgm::borromean_fixture();
    const auto x = *a.find("x1"), y = *a.find("x2"), z = *a.find("x3");
    for (auto _ : state) benchmark::DoNotOptimize(sgm::triple_massey(a, {{x, 1}}, {{y, 1}}, {{z, 1}}));
}
BENCHMARK(BM_BorromeanMassey);

void BM_SourceHomologyMv(benchmark::State& state)
{
    const auto img = sgm::SgmImage::handles(5, {1, 2, 2, 3});
    for (auto _ : state) benchmark::DoNotOptimize(sgm::source_homology_mv(img, 9, sgm::Coefficients::integers()));
}
BENCHMARK(BM_SourceHomologyMv);

}  // namespace

BENCHMARK_MAIN();
