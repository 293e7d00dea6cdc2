// Compares the OpenMP kernels in par.hpp against their serial references on
// the two workloads that use them: sweeping candidate assignments for the
// first match, and independent per-point analysis with exact arithmetic.

#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "trop/par.hpp"
#include "trop/poly.hpp"
#include "trop/rational.hpp"

namespace {

using trop::Expo;
using trop::Rat;
using trop::TPoly;
using trop::Two;

// A dense-ish bivariate polynomial and a grid of evaluation points, sized so
// one evaluation costs a few microseconds of mpq arithmetic.
struct Workload {
  TPoly poly;
  std::vector<std::vector<Two>> pts;

  Workload() {
    poly.n = 2;
    for (long i = 0; i <= 12; ++i)
      for (long j = 0; j + i <= 12; ++j)
        poly.tadd_term(Expo{i, j}, Two(Rat(i * 7 - j * 3, 1 + ((i + j) % 5))));
    for (int k = 0; k < 512; ++k)
      pts.push_back({Two(Rat(k, 7)), Two(Rat(255 - k, 11))});
  }
};

const Workload& workload() {
  static Workload w;
  return w;
}

void sweep(benchmark::State& state, bool parallel) {
  const Workload& w = workload();
  std::vector<trop::TropScalar> out(w.pts.size());
  auto body = [&](std::size_t i) { out[i] = w.poly.evaluate(w.pts[i]); };
  for (auto _ : state) {
    if (parallel)
      trop::parallel_for(w.pts.size(), body);
    else
      trop::serial_for(w.pts.size(), body);
    benchmark::DoNotOptimize(out);
  }
}

void BM_point_sweep_serial(benchmark::State& state) { sweep(state, false); }
void BM_point_sweep_parallel(benchmark::State& state) { sweep(state, true); }

// First-match search where the hit sits deep in the range, the regime the
// oracle's assignment sweep lands in on infeasible-looking systems.
void first_match(benchmark::State& state, bool parallel) {
  const Workload& w = workload();
  const std::size_t hit = w.pts.size() - 9;
  auto pred = [&](std::size_t i) {
    benchmark::DoNotOptimize(w.poly.evaluate(w.pts[i]));
    return i == hit;
  };
  for (auto _ : state) {
    const std::size_t got =
        parallel ? trop::find_first_index(w.pts.size(), pred)
                 : trop::find_first_index_serial(w.pts.size(), pred);
    if (got != hit) state.SkipWithError("wrong index");
  }
}

void BM_first_match_serial(benchmark::State& state) { first_match(state, false); }
void BM_first_match_parallel(benchmark::State& state) { first_match(state, true); }

BENCHMARK(BM_point_sweep_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_point_sweep_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_first_match_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_first_match_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
