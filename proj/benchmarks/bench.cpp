#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "relspin/bell.hpp"
#include "relspin/dirac.hpp"
#include "relspin/matrix.hpp"
#include "relspin/sampling.hpp"
#include "relspin/spin_observables.hpp"

using namespace relspin;

namespace {

struct Input {
  Direction a, b;
  BeamVelocity beta;
};

std::vector<Input> inputs(std::size_t n) {
  std::mt19937_64 gen(42);
  std::vector<Input> out;
  out.reserve(n);
  while (out.size() < n) out.push_back({random_direction(gen), random_direction(gen), random_velocity(gen, 0.99)});
  return out;
}

CMatrix hermitian(std::size_t dim) {
  std::mt19937_64 gen(7);
  std::normal_distribution<double> g;
  CMatrix a(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    a(r, r) = g(gen);
    for (std::size_t c = r + 1; c < dim; ++c) {
      a(r, c) = {g(gen), g(gen)};
      a(c, r) = std::conj(a(r, c));
    }
  }
  return a;
}

void BM_ClosedForm(benchmark::State& state) {
  const auto in = inputs(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& x = in[i++ & 1023];
    benchmark::DoNotOptimize(eprb_closed_form(x.a, x.b, x.beta));
  }
}
BENCHMARK(BM_ClosedForm);

void BM_Oracle(benchmark::State& state) {
  const auto in = inputs(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& x = in[i++ & 1023];
    benchmark::DoNotOptimize(eprb_oracle(x.a, x.b, x.beta));
  }
}
BENCHMARK(BM_Oracle);

void BM_ChshValue(benchmark::State& state) {
  const auto s = ChshSettings::standard();
  const BeamVelocity beta({0.6, 0.3, 0.1});
  for (auto _ : state) benchmark::DoNotOptimize(chsh_value(s, beta));
}
BENCHMARK(BM_ChshValue);

void BM_HermEig(benchmark::State& state) {
  const auto a = hermitian(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(a));
}
BENCHMARK(BM_HermEig)->Arg(2)->Arg(4)->Arg(16);

void BM_BuildContext(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dirac::build_context({1.0, 2.0, 2.0}, 0.5));
}
BENCHMARK(BM_BuildContext);

void BM_MaximizeChsh(benchmark::State& state) {
  const BeamVelocity beta({0.99, 0.0, 0.0});
  for (auto _ : state) benchmark::DoNotOptimize(maximize_chsh(beta));
}
BENCHMARK(BM_MaximizeChsh)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
