#include <random>

#include <benchmark/benchmark.h>

#include "quasibraid/braid_rep.hpp"
#include "quasibraid/linalg.hpp"
#include "quasibraid/qc_compile.hpp"
#include "quasibraid/tl_algebra.hpp"

using namespace quasibraid;

namespace {

ComplexMatrix random_matrix(std::size_t dim, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<Complex> e(dim * dim);
  for (auto& z : e) z = {nd(rng), nd(rng)};
  return ComplexMatrix(dim, std::move(e));
}

void BM_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(matmul(a, b));
}

void BM_matmul_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(serial::matmul(a, b));
}

void BM_kron(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 3);
  const auto b = random_matrix(16, 4);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}

void BM_kron_serial(benchmark::State& state) {
  const auto a = random_matrix(static_cast<std::size_t>(state.range(0)), 3);
  const auto b = random_matrix(16, 4);
  for (auto _ : state) benchmark::DoNotOptimize(serial::kron(a, b));
}

void BM_tl_relations(benchmark::State& state) {
  const auto gens = build_tl_generators(QParameter(5), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_tl_relations(gens, 1e-12));
}

BraidRepresentation rho3() {
  return rho_representation(ADeformation::canonical(0), build_tl_generators(QParameter(5), 3));
}

void BM_gate_search(benchmark::State& state) {
  const auto rep = rho3();
  const auto target = random_matrix(rep.dim(), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(approximate_gate(target, rep, static_cast<int>(state.range(0))));
  }
}

void BM_gate_search_reference(benchmark::State& state) {
  const auto rep = rho3();
  const auto target = random_matrix(rep.dim(), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        approximate_gate_reference(target, rep, static_cast<int>(state.range(0))));
  }
}

}  // namespace

BENCHMARK(BM_matmul)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_matmul_serial)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_kron)->Arg(16)->Arg(64);
BENCHMARK(BM_kron_serial)->Arg(16)->Arg(64);
BENCHMARK(BM_tl_relations)->Arg(6)->Arg(8);
BENCHMARK(BM_gate_search)->Arg(5)->Arg(7);
BENCHMARK(BM_gate_search_reference)->Arg(5)->Arg(7);

BENCHMARK_MAIN();
