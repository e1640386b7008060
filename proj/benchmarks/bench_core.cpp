#include <benchmark/benchmark.h>

#include <random>

#include "lexseg/lexseg.hpp"

namespace {

using namespace lexseg;

void BM_MonomialsOfDegree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(monomials_of_degree(n, d));
}
BENCHMARK(BM_MonomialsOfDegree)->Args({4, 6})->Args({6, 8});

void BM_StandardTableau(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(1, 8);
  Support support(15);
  for (auto& s : support) s = pick(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(standard_tableau_from_support(8, support, 5, 3));
}
BENCHMARK(BM_StandardTableau);

void BM_NormalForm(benchmark::State& state) {
  const auto gb = veronese_gb(4, 3);
  const auto mons = monomials_of_degree(4, 3);
  std::vector<TVariable> prod;
  prod.push_back(tvariable_of(mons[0]));
  prod.push_back(tvariable_of(mons[mons.size() / 2]));
  prod.push_back(tvariable_of(mons.back()));
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(prod, gb));
}
BENCHMARK(BM_NormalForm);

void BM_VeroneseGB(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(veronese_gb(4, 3));
}
BENCHMARK(BM_VeroneseGB);

void BM_PowerQuotients(benchmark::State& state) {
  const auto ideal = build_lexsegment(Monomial::from_csv(4, "3,0,0,0"),
                                      Monomial::from_csv(4, "0,0,0,3"));
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto gens = power_generators(ideal.generators, N);
    auto ordered = order_generators(std::move(gens), MonomialOrder::Succ);
    benchmark::DoNotOptimize(has_linear_quotients(ordered));
  }
}
BENCHMARK(BM_PowerQuotients)->Arg(2)->Arg(3);

void BM_ReesVerify(benchmark::State& state) {
  const auto ideal = build_lexsegment(Monomial::from_csv(4, "1,0,1,1"),
                                      Monomial::from_csv(4, "0,1,0,2"));
  for (auto _ : state) {
    const auto basis = rees_gb(ideal, MonomialOrder::SigmaRevLexDec);
    benchmark::DoNotOptimize(
        verify_groebner(basis, MonomialOrder::SigmaRevLexDec));
  }
}
BENCHMARK(BM_ReesVerify);

}  // namespace

BENCHMARK_MAIN();
