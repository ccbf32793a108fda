// Microbenchmarks for the packed-matrix kernels and the family pipeline.
// Run with --benchmark_min_time=... to trade precision for wall time.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "dsrg/bit_matrix.hpp"
#include "dsrg/family.hpp"
#include "dsrg/matrix_ops.hpp"
#include "dsrg/params.hpp"
#include "dsrg/rng.hpp"
#include "dsrg/search.hpp"
#include "dsrg/verify.hpp"

namespace {

dsrg::BinaryMatrix random_square(std::uint64_t seed, std::size_t v) {
  dsrg::SplitMix64 rng(seed);
  dsrg::BinaryMatrix m(v, v);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j)
      if (i != j && rng.below(2) == 0) m.set(i, j, true);
  return m;
}

// The order-6 seed family used throughout: adjacency plus both bridges.
dsrg::FamilySeed small_seed() {
  dsrg::DsrgParams p = dsrg::DsrgParams::checked(6, 3, 2, 1, 2);
  dsrg::BinaryMatrix a = dsrg::matrix_from_strings(
      {"011100", "101100", "100011", "010011", "101001", "010110"});
  dsrg::BinaryMatrix b = dsrg::matrix_from_strings(
      {"11110000", "11110000", "00001111", "00001111", "11110000", "00001111"});
  dsrg::BinaryMatrix c = dsrg::matrix_from_strings(
      {"100110", "100110", "011001", "011001", "100110", "100110", "011001",
       "011001"});
  return dsrg::FamilySeed::validated(p, a, b, c);
}

void bm_mul(benchmark::State& state) {
  std::size_t v = static_cast<std::size_t>(state.range(0));
  dsrg::BinaryMatrix a = random_square(17, v);
  dsrg::BinaryMatrix b = random_square(18, v);
  for (auto _ : state) benchmark::DoNotOptimize(dsrg::mul(a, b));
  state.SetComplexityN(static_cast<std::int64_t>(v));
}

void bm_kron(benchmark::State& state) {
  std::size_t v = static_cast<std::size_t>(state.range(0));
  dsrg::BinaryMatrix a = random_square(19, v);
  dsrg::BinaryMatrix b = random_square(20, 16);
  for (auto _ : state) benchmark::DoNotOptimize(dsrg::kron(a, b));
}

void bm_product_affine_equals(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  dsrg::BinaryMatrix p = dsrg::exchange_pattern(n, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(dsrg::product_affine_equals(p, p, 0, nullptr, 2));
}

void bm_family_term(benchmark::State& state) {
  dsrg::FamilySeed seed = small_seed();
  std::size_t n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dsrg::family_term(seed, n));
}

void bm_verify_full(benchmark::State& state) {
  dsrg::FamilySeed seed = small_seed();
  std::size_t n = static_cast<std::size_t>(state.range(0));
  dsrg::FamilyTerm term = dsrg::family_term(seed, n);
  for (auto _ : state)
    benchmark::DoNotOptimize(dsrg::verify_algebraic(term.adjacency, term.params));
}

void bm_verify_sampled(benchmark::State& state) {
  dsrg::FamilySeed seed = small_seed();
  dsrg::FamilyTerm term = dsrg::family_term(seed, 6);  // order 8128
  for (auto _ : state)
    benchmark::DoNotOptimize(
        dsrg::verify_sampled(term.adjacency, term.params, 100000, 1));
}

void bm_seed_search(benchmark::State& state) {
  dsrg::DsrgParams p = dsrg::DsrgParams::checked(
      static_cast<std::uint64_t>(state.range(0)),
      static_cast<std::uint64_t>(state.range(0)) / 2,
      static_cast<std::uint64_t>(state.range(1)),
      static_cast<std::uint64_t>(state.range(2)),
      static_cast<std::uint64_t>(state.range(1)));
  for (auto _ : state) {
    dsrg::SeedMatrixResult r = dsrg::find_seed_matrix(p, dsrg::SearchBudget{});
    if (r.status != dsrg::SearchStatus::found) state.SkipWithError("no solution");
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(bm_mul)->Arg(64)->Arg(256)->Arg(1024)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_kron)->Arg(16)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_product_affine_equals)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_family_term)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_verify_full)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_verify_sampled)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_seed_search)->Args({6, 2, 1})->Args({8, 3, 1})->Args({12, 4, 2})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
