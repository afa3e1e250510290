#include <benchmark/benchmark.h>

#include "orbitres/deformation.hpp"
#include "orbitres/linalg.hpp"
#include "orbitres/matrix_group.hpp"
#include "orbitres/partition.hpp"
#include "orbitres/rng.hpp"
#include "orbitres/springer.hpp"

using namespace orbitres;

namespace {

ExactMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, Rational(static_cast<long>(rng.next_in_range(-9, 9))));
  return m;
}

void BM_char_poly(benchmark::State& state) {
  const ExactMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_char_poly)->Arg(4)->Arg(6)->Arg(8)->Arg(12);

void BM_rank(benchmark::State& state) {
  const ExactMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank)->Arg(8)->Arg(16)->Arg(32);

void BM_jordan_type(benchmark::State& state) {
  const FlagType f{Composition({2, 2, 2, 2})};
  const NilradicalSample sample = sample_nilradical(f, 5, 10);
  for (auto _ : state) benchmark::DoNotOptimize(jordan_type(sample.matrix));
}
BENCHMARK(BM_jordan_type);

void BM_tangent_dim_oracle(benchmark::State& state) {
  const Partition d({3, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(tangent_dim_oracle(d, 6));
}
BENCHMARK(BM_tangent_dim_oracle);

void BM_orderings(benchmark::State& state) {
  const Partition s({4, 3, 2, 2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(orderings(s));
}
BENCHMARK(BM_orderings);

void BM_commuting_square(benchmark::State& state) {
  const FlagType f{Composition({1, 2, 3})};
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_commuting_square(f, static_cast<int>(state.range(0)), 42, 10));
}
BENCHMARK(BM_commuting_square)->Arg(10)->Arg(50);

void BM_group_closure(benchmark::State& state) {
  const auto gens = dihedral_generators();
  for (auto _ : state) benchmark::DoNotOptimize(MatrixGroup::generate(gens, 64));
}
BENCHMARK(BM_group_closure);

}  // namespace

BENCHMARK_MAIN();
