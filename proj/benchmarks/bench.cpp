#include <random>

#include <benchmark/benchmark.h>

#include "symcan/jets.hpp"
#include "symcan/linear_system.hpp"
#include "symcan/matrix.hpp"
#include "symcan/survey.hpp"

using namespace symcan;

namespace {

CurveModel x7_minus_1(std::uint64_t p) {
  return CurveModel::hyperelliptic(Poly::from_ints(Field::prime(p), {-1, 0, 0, 0, 0, 0, 0, 1}));
}

Matrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, f.from_int(static_cast<std::int64_t>(rng() % 1000)));
  }
  return m;
}

void BM_RankPrime(benchmark::State& state) {
  const Matrix m = random_matrix(Field::prime(101), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankPrime)->Arg(4)->Arg(8)->Arg(16);

void BM_RankRational(benchmark::State& state) {
  const Matrix m = random_matrix(Field::rationals(), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational)->Arg(4)->Arg(8);

void BM_WeierstrassJets(benchmark::State& state) {
  const auto c = x7_minus_1(29);
  const AffinePoint w{c.field().one(), c.field().zero()};
  for (auto _ : state) benchmark::DoNotOptimize(jets_at(c, w, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_WeierstrassJets)->Arg(2)->Arg(4)->Arg(8);

void BM_Survey(benchmark::State& state) {
  const auto c = x7_minus_1(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(base_locus_survey(c, 2).base_count);
}
BENCHMARK(BM_Survey)->Arg(29)->Arg(43)->Arg(97)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
