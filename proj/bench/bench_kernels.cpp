// Serial reference against the OpenMP kernels on a few sizes.

#include <benchmark/benchmark.h>

#include "dualpair/gallery.hpp"
#include "dualpair/kernels.hpp"
#include "dualpair/points.hpp"

using namespace dp;
using namespace dp::kernels;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_PairingTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto F = Field::prime_field(1009);  // 1008 is divisible by every n used here
  const PointGroup G(gallery::mu_idempotent_pair(n, F), F);
  const auto P = G.points(Side::A), Q = G.points(Side::B);
  for (auto _ : state) benchmark::DoNotOptimize(pairing_table(P, G.pair().theta(), Q, exec_of(state)));
  state.SetLabel(exec_of(state) == Exec::Parallel ? "parallel" : "serial");
}

void BM_Multiplicativity(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DualPair P = gallery::mu_constant_pair(n, Field::prime_field(1009));
  const Algebra& A = P.A();
  const Matrix& mu = P.comultiplication(Side::A);
  auto mul = [&](const Vec& x, const Vec& y) { return tensor_mul(A, A, x, y); };
  for (auto _ : state) benchmark::DoNotOptimize(multiplicativity_failures(A, mu, mul, exec_of(state)));
  state.SetLabel(exec_of(state) == Exec::Parallel ? "parallel" : "serial");
}

void BM_ComplexPairing(benchmark::State& state) {
  const auto n = static_cast<long>(state.range(0));
  const mpfr_prec_t prec = 256;
  const DualPair P = gallery::mu_idempotent_pair(static_cast<std::size_t>(n), Field::rationals());
  std::vector<CVec> pts, dual;
  for (long k = 0; k < n; ++k) {
    CVec row, e(static_cast<std::size_t>(n), num::BigComplex(prec));
    for (long l = 0; l < n; ++l) row.push_back(num::BigComplex::root_of_unity(prec, k * l, n));
    e[static_cast<std::size_t>(k)] = num::BigComplex(prec, mpq_class(1));
    pts.push_back(row);
    dual.push_back(e);
  }
  for (auto _ : state) benchmark::DoNotOptimize(complex_pairing_matrix(pts, P.theta(), dual, prec, exec_of(state)));
  state.SetLabel(exec_of(state) == Exec::Parallel ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_PairingTable)->ArgsProduct({{8, 16, 36}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Multiplicativity)->ArgsProduct({{4, 8, 12}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ComplexPairing)->ArgsProduct({{8, 16, 24}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
