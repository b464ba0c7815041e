// Serial reference vs OpenMP grid kernels.
//
//   OMP_NUM_THREADS=8 ./bench_kernels

#include <benchmark/benchmark.h>

#include <vector>

#include "gsieve/dynamics.hpp"
#include "gsieve/kernels.hpp"
#include "gsieve/sieve.hpp"
#include "gsieve/wigner.hpp"

namespace {

using namespace gsieve;

struct RateFixture {
  GridAxes axes;
  std::vector<double> out;
  explicit RateFixture(std::size_t n)
      : axes(make_axes({n, n, 0.25, 8.0})), out(axes.alephs.size() * axes.thetas.size()) {}
  kernels::RateGrid grid() const { return {1.0, 0.3, {1.0, 2.0, 0.7}, axes.alephs, axes.thetas}; }
};

void BM_RateGridSerial(benchmark::State& state) {
  RateFixture fx(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    kernels::rate_grid_serial(fx.grid(), fx.out);
    benchmark::DoNotOptimize(fx.out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(fx.out.size()));
}

void BM_RateGridOmp(benchmark::State& state) {
  RateFixture fx(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    kernels::rate_grid_omp(fx.grid(), fx.out);
    benchmark::DoNotOptimize(fx.out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(fx.out.size()));
}

const GaussianState kSqueezed{{0.3, -0.2}, Mat2::symmetric(2.0, 0.7, 0.5)};

void BM_WignerGridSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x1 = axis_nodes(default_axis(kSqueezed, 0, 8.0, n));
  const auto x2 = axis_nodes(default_axis(kSqueezed, 1, 8.0, n));
  std::vector<double> out(n * n);
  for (auto _ : state) {
    kernels::wigner_grid_serial(kSqueezed, x1, x2, out);
    benchmark::DoNotOptimize(kernels::trapezoid_serial(out, x1, x2));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(out.size()));
}

void BM_WignerGridOmp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x1 = axis_nodes(default_axis(kSqueezed, 0, 8.0, n));
  const auto x2 = axis_nodes(default_axis(kSqueezed, 1, 8.0, n));
  std::vector<double> out(n * n);
  for (auto _ : state) {
    kernels::wigner_grid_omp(kSqueezed, x1, x2, out);
    benchmark::DoNotOptimize(kernels::trapezoid_omp(out, x1, x2));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(out.size()));
}

}  // namespace

BENCHMARK(BM_RateGridSerial)->Arg(101)->Arg(401)->Arg(1001);
BENCHMARK(BM_RateGridOmp)->Arg(101)->Arg(401)->Arg(1001);
BENCHMARK(BM_WignerGridSerial)->Arg(201)->Arg(801);
BENCHMARK(BM_WignerGridOmp)->Arg(201)->Arg(801);

BENCHMARK_MAIN();
