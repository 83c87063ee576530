#include <benchmark/benchmark.h>

#include <cyclix/algebra.hpp>
#include <cyclix/cyclic_category.hpp>
#include <cyclix/cyclic_homology.hpp>
#include <cyclix/group.hpp>
#include <cyclix/hochschild.hpp>
#include <cyclix/linalg.hpp>
#include <cyclix/simplicial_module.hpp>
#include <cyclix/simplicial_presets.hpp>
#include <cyclix/smith.hpp>
#include <random>

using namespace cyclix;

namespace {

const ScalarDomain Q = ScalarDomain::rationals();

Matrix random_sparse(ScalarDomain dom, std::size_t n, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(-3, 3);
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Entry> raw;
    for (std::size_t i = 0; i < n; ++i) {
      if (coin(rng) < density) raw.push_back({i, Rational(value(rng))});
    }
    cols.push_back(canonicalize(std::move(raw), dom));
  }
  return Matrix::from_columns(dom, n, std::move(cols));
}

void rank_rational(benchmark::State& state) {
  const Matrix m = random_sparse(Q, static_cast<std::size_t>(state.range(0)), 0.05, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank_kernel_image(m).rank);
}
BENCHMARK(rank_rational)->Arg(60)->Arg(120);

void rank_mod_p(benchmark::State& state) {
  const Matrix m = random_sparse(ScalarDomain::prime_field(101), static_cast<std::size_t>(state.range(0)), 0.05, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rank_kernel_image(m).rank);
}
BENCHMARK(rank_mod_p)->Arg(100)->Arg(300);

void smith_form(benchmark::State& state) {
  const Matrix m = random_sparse(ScalarDomain::integers(), static_cast<std::size_t>(state.range(0)), 0.2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(smith_invariants(m));
}
BENCHMARK(smith_form)->Arg(20)->Arg(40);

void hochschild_truncpoly(benchmark::State& state) {
  const FiniteAlgebra a = FiniteAlgebra::truncated_polynomial(3, Q);
  for (auto _ : state) benchmark::DoNotOptimize(hh(a, 0, static_cast<int>(state.range(0))).betti());
}
BENCHMARK(hochschild_truncpoly)->Arg(3)->Arg(5);

void cyclic_group_algebra(benchmark::State& state) {
  const FiniteAlgebra a = FiniteAlgebra::group_algebra(FiniteGroup::cyclic(3), Q);
  for (auto _ : state) benchmark::DoNotOptimize(hc(a, 0, static_cast<int>(state.range(0))).betti());
}
BENCHMARK(cyclic_group_algebra)->Arg(2)->Arg(4);

void classifying_space_integers(benchmark::State& state) {
  const SpecPtr b = classifying_space(FiniteGroup::cyclic(2), static_cast<int>(state.range(0)) + 1);
  for (auto _ : state) {
    const LinearizedModule m(b, ScalarDomain::integers());
    benchmark::DoNotOptimize(homology(chain_complex(m, Normalization::Normalized), 0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(classifying_space_integers)->Arg(4)->Arg(7);

void cyclic_hom_sets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(all_cyclic_morphisms(n, n).size());
}
BENCHMARK(cyclic_hom_sets)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
