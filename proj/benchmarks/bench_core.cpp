#include <benchmark/benchmark.h>

#include "imprec/bridge.hpp"
#include "imprec/elaborate.hpp"
#include "imprec/generators.hpp"
#include "imprec/parser.hpp"

using namespace imprec;

namespace {

const char* kTwoUrnProgram =
    "x <- knight(a1) ; y <- knight(a2) ; z <- bernoulli ;"
    " if z then (if x then r else g) else (if y then r else b)";

void BM_elaborate_two_urns(benchmark::State& state) {
  const TermPtr term = parse(kTwoUrnProgram);
  for (auto _ : state) {
    auto m = elaborate_imp(infer(term));
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_elaborate_two_urns);

void BM_graded_compose(benchmark::State& state) {
  Rng rng(1);
  const auto f = random_graded_morphism(rng, Grade::of({{"a0", 2}, {"a1", 2}}), 2, 3);
  const auto g = random_graded_morphism(rng, Grade::of({{"b0", 3}}), 3, 3);
  for (auto _ : state) {
    auto m = gcompose(g, f);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_graded_compose);

void BM_extreme_points(benchmark::State& state) {
  Rng rng(2);
  std::vector<RatVector> points;
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i)
    points.push_back(random_prob_vector(rng, 4).entries());
  for (auto _ : state) {
    auto ext = extreme_points_of(points);
    benchmark::DoNotOptimize(ext);
  }
}
BENCHMARK(BM_extreme_points)->Arg(16)->Arg(64)->Arg(256);

void BM_kleisli_extend(benchmark::State& state) {
  Rng rng(3);
  std::vector<CredalSet> images;
  for (int i = 0; i < 4; ++i) {
    std::vector<ProbVector> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(random_prob_vector(rng, 4));
    images.emplace_back(4, std::move(gens));
  }
  const KlMorphism f(FinSetObj(4), FinSetObj(4), images);
  std::vector<ProbVector> xg;
  for (int k = 0; k < 4; ++k) xg.push_back(random_prob_vector(rng, 4));
  const CredalSet x(4, xg);
  for (auto _ : state) {
    auto s = kleisli_extend(f, x);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_kleisli_extend);

void BM_oplax_pair(benchmark::State& state) {
  Rng rng(4);
  const auto f = random_graded_morphism(rng, Grade::of({{"a0", 4}}), 1, 4);
  const auto g = random_graded_morphism(rng, Grade::of({{"b0", 4}}), 4, 4);
  for (auto _ : state) {
    auto report = oplax_compare(g, f);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_oplax_pair);

}  // namespace

BENCHMARK_MAIN();
