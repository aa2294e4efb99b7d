#include <benchmark/benchmark.h>

#include <random>

#include "shfkit/construct.hpp"
#include "shfkit/search.hpp"
#include "shfkit/symmetry.hpp"
#include "shfkit/verify.hpp"

using namespace shfkit;

namespace {

const Matrix& optimal_4x10() {
  static const Matrix m(4, {{0, 0, 0, 1, 1, 1, 2, 2, 2, 3},
                            {0, 1, 2, 0, 1, 2, 0, 1, 2, 3},
                            {0, 1, 2, 1, 2, 0, 2, 0, 1, 3},
                            {0, 1, 2, 2, 0, 1, 1, 2, 0, 3}});
  return m;
}

Matrix random_matrix(int rows, int cols, int alphabet, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(0, alphabet - 1);
  std::vector<std::vector<int>> r(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols)));
  for (auto& row : r)
    for (auto& x : row) x = d(rng);
  return Matrix(alphabet, r);
}

}  // namespace

static void BM_VerifyOptimal4x10(benchmark::State& state) {
  const ShfType ty{2, 2};
  for (auto _ : state) benchmark::DoNotOptimize(is_shf(optimal_4x10(), ty).is_shf);
}
BENCHMARK(BM_VerifyOptimal4x10);

static void BM_VerifySts(benchmark::State& state) {
  const int v = static_cast<int>(state.range(0));
  const Matrix a = construct_strong_shf(steiner_triple_system(v), 2, 2, v - 2, false);
  const ShfType ty{1, 1, v - 2};
  for (auto _ : state) benchmark::DoNotOptimize(is_shf(a, ty, {.threads = 1}).is_shf);
}
BENCHMARK(BM_VerifySts)->Arg(9)->Arg(13)->Arg(15);

static void BM_CanonicalForm(benchmark::State& state) {
  const Matrix a = random_matrix(static_cast<int>(state.range(0)), 10, 4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(a));
}
BENCHMARK(BM_CanonicalForm)->Arg(4)->Arg(6)->Arg(7);

static void BM_Search4x4(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_shf(4, n, 4, ShfType{2, 2}).result);
}
BENCHMARK(BM_Search4x4)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
