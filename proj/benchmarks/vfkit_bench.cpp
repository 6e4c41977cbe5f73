#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "vfkit/analysis.hpp"
#include "vfkit/ideal.hpp"
#include "vfkit/linalg.hpp"
#include "vfkit/oracle.hpp"
#include "vfkit/parse.hpp"

using namespace vfkit;

namespace {

BigInt digits(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::string s(1, static_cast<char>('1' + rng() % 9));
  while (static_cast<int>(s.size()) < n) s += static_cast<char>('0' + rng() % 10);
  return BigInt::parse(s);
}

std::string fermat(int degree, int vars) {
  std::string s;
  for (int i = 0; i < vars; ++i) s += (i ? " + x" : "x") + std::to_string(i) + "^" + std::to_string(degree);
  return s;
}

}  // namespace

static void BM_BigIntMultiply(benchmark::State& state) {
  const BigInt a = digits(static_cast<int>(state.range(0)), 1), b = digits(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_BigIntMultiply)->RangeMultiplier(4)->Range(16, 1024);

static void BM_BigIntDivide(benchmark::State& state) {
  const BigInt a = digits(static_cast<int>(state.range(0)) * 2, 3), b = digits(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(BigInt::divmod(a, b));
}
BENCHMARK(BM_BigIntDivide)->RangeMultiplier(4)->Range(16, 1024);

static void BM_RationalSum(benchmark::State& state) {
  for (auto _ : state) {
    Rational acc;
    for (int k = 1; k <= state.range(0); ++k) acc += Rational(BigInt(1), BigInt(k));
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_RationalSum)->Arg(20)->Arg(60);

static void BM_PolynomialPower(benchmark::State& state) {
  const VarContext ctx = VarContext::standard(5);
  const Polynomial p = parse_poly("x0 + 2*x1 - x2 + x3/3 + x4", ctx);
  for (auto _ : state) {
    Polynomial acc = Polynomial::constant(ctx, 1);
    for (int k = 0; k < state.range(0); ++k) acc *= p;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_PolynomialPower)->DenseRange(2, 6, 2);

static void BM_Buchberger(benchmark::State& state) {
  const VarContext ctx = VarContext::standard(4);
  const Ideal ideal(ctx, {parse_poly("x0^3 + 2*x1*x2*x3 - x3^3", ctx), parse_poly("x1^3 - x0*x2^2 + x3^2*x0", ctx),
                          parse_poly("x2^3 + x0*x1*x3 - 5*x1^2*x2", ctx)});
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(ideal));
}
BENCHMARK(BM_Buchberger)->Unit(benchmark::kMillisecond);

static void BM_Smoothness(benchmark::State& state) {
  const VarContext ctx = VarContext::standard(5);
  const Polynomial h = parse_poly(fermat(static_cast<int>(state.range(0)), 5), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(is_smooth_projective(h));
}
BENCHMARK(BM_Smoothness)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Stabilizer(benchmark::State& state) {
  const VarContext ctx = VarContext::standard(5);
  const Polynomial h = parse_poly(fermat(static_cast<int>(state.range(0)), 5), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_algebra(h));
}
BENCHMARK(BM_Stabilizer)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_StabilizerOracle(benchmark::State& state) {
  const VarContext ctx = VarContext::standard(5);
  const Polynomial h = parse_poly(fermat(static_cast<int>(state.range(0)), 5), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::stabilizer_dimension(h));
}
BENCHMARK(BM_StabilizerOracle)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_RationalEigen(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = Rational(static_cast<std::int64_t>(i % 3) - 1);
    if (i + 1 < n) m(i, i + 1) = Rational(BigInt(1), BigInt(2));
  }
  for (auto _ : state) benchmark::DoNotOptimize(rational_eigen(m));
}
BENCHMARK(BM_RationalEigen)->DenseRange(3, 7, 2);

static void BM_VanishingVerdict(benchmark::State& state) {
  const VarContext ctx = VarContext::standard(5);
  const Polynomial h = parse_poly("x0^2 + x1^2 + x2^2 + x3*x4", ctx);
  const Derivation d = Derivation::diagonal(ctx, {0, 0, 0, 1, -1});
  const Ideal curve(ctx, {parse_poly("x0^2 + x1^2 + x2^2", ctx), parse_poly("x3", ctx), parse_poly("x4", ctx)});
  for (auto _ : state) benchmark::DoNotOptimize(check_vanishing_on_curve(h, d, curve));
}
BENCHMARK(BM_VanishingVerdict)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
