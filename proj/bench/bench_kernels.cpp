// Serial vs OpenMP product kernels, and dense reduction vs literal rewriting.

#include <benchmark/benchmark.h>

#include <random>

#include "kzero/catalog.hpp"
#include "kzero/kring.hpp"

using namespace kzero;

namespace {

struct Instance {
  const char* group;
  Int rho_copies;
  int r;
};

// Indexed by the benchmark argument.
const Instance kInstances[] = {{"C2", 3, 3}, {"C2", 4, 4}, {"S3", 2, 3}, {"C3", 3, 3}};

AlgebraPtr algebra_for(std::size_t idx) {
  const auto& in = kInstances[idx];
  const auto t = catalog_table(in.group);
  return flag_bundle(in.rho_copies * regular_rep(t), in.r);
}

// Random coefficients on monomials of total degree at most 2; dense random
// elements overflow Int after reduction in the larger towers.
AlgebraElement random_element(const AlgebraPtr& A, std::mt19937_64& rng) {
  std::uniform_int_distribution<Int> d(-2, 2);
  const auto& tower = A->tower();
  std::vector<Int> v(tower.element_size(A->num_vars()), 0);
  for (const auto& m : A->basis()) {
    int deg = 0;
    for (int a : m) deg += a;
    if (deg > 2) continue;
    const auto idx = kernels::monomial_index(tower, m) * tower.s;
    for (std::size_t c = 0; c < tower.s; ++c) v[idx + c] = d(rng);
  }
  return AlgebraElement(A, v);
}

void set_label(benchmark::State& state, const AlgebraPtr& A) {
  const auto& in = kInstances[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(in.group) + " flag(" + std::to_string(in.rho_copies) + "rho, " + std::to_string(in.r) +
                 ") rank " + std::to_string(A->free_rank()));
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto A = algebra_for(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(1);
  const auto x = random_element(A, rng), y = random_element(A, rng);
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(x, y));
  set_label(state, A);
}

void BM_MultiplyParallel(benchmark::State& state) {
  const auto A = algebra_for(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(1);
  const auto x = random_element(A, rng), y = random_element(A, rng);
  for (auto _ : state) benchmark::DoNotOptimize(multiply_parallel(x, y));
  set_label(state, A);
}

Polynomial random_polynomial(const AlgebraPtr& A, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 4);
  std::uniform_int_distribution<Int> c(-2, 2);
  Polynomial p(A->base(), A->num_vars());
  for (int k = 0; k < 6; ++k) {
    Monomial m(A->num_vars());
    for (auto& a : m) a = e(rng);
    std::vector<Int> v(A->base()->size());
    for (auto& x : v) x = c(rng);
    p.add_term(m, v);
  }
  return p;
}

void BM_ReduceDense(benchmark::State& state) {
  const auto A = algebra_for(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(2);
  const auto p = random_polynomial(A, rng);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(p, A));
  set_label(state, A);
}

void BM_ReduceRewriting(benchmark::State& state) {
  const auto A = algebra_for(static_cast<std::size_t>(state.range(0)));
  std::mt19937_64 rng(2);
  const auto p = random_polynomial(A, rng);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_by_rewriting(p, A));
  set_label(state, A);
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MultiplyParallel)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ReduceDense)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ReduceRewriting)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
