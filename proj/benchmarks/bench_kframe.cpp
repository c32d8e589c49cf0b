#include <benchmark/benchmark.h>

#include <random>

#include "kframe/construction.hpp"
#include "kframe/dilation.hpp"
#include "kframe/linalg.hpp"

using namespace kframe;

namespace {

Matrix random_hermitian(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = complex(u(rng), u(rng));
  Matrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
  return h;
}

void bm_hermitian_eig(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix h = random_hermitian(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}

void bm_validate(benchmark::State& state) {
  std::mt19937_64 rng(8);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix x(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) x(i, j) = complex(u(rng), u(rng));
  const VectorFamily f = make_family(standard_space(n), x);
  for (auto _ : state) benchmark::DoNotOptimize(validate(f));
}

void bm_construct_frame(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> lam(n), a(2 * n);
  for (std::size_t i = 0; i < n; ++i) lam[i] = 2.0;
  for (std::size_t i = 0; i < 2 * n; ++i) a[i] = 1.0;
  const auto sp = standard_space(n);
  const Matrix s0 = Matrix::diagonal(lam);
  const NormSpec norms = make_norms(a);
  for (auto _ : state)
    benchmark::DoNotOptimize(construct_frame(sp, s0, norms, FrameFlavor::HilbertFrame));
}

void bm_dilate(benchmark::State& state) {
  std::mt19937_64 rng(9);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix x(n, n + 4);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n + 4; ++j) x(i, j) = complex(u(rng), u(rng));
  const VectorFamily f = make_family(hilbert_space(n), x);
  for (auto _ : state) benchmark::DoNotOptimize(dilate(f));
}

}  // namespace

BENCHMARK(bm_hermitian_eig)->Arg(4)->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_validate)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_construct_frame)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(bm_dilate)->Arg(4)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
