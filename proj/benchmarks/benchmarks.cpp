#include <benchmark/benchmark.h>

#include "jointmeas/bloch.hpp"
#include "jointmeas/mub.hpp"
#include "jointmeas/operators.hpp"
#include "jointmeas/steering.hpp"

using namespace jointmeas;

static void BM_AdaptiveJointDodecahedron(benchmark::State& state) {
  const QubitConfig config = platonic_config("dodecahedron10");
  for (auto _ : state) {
    benchmark::DoNotOptimize(adaptive_joint(config));
  }
}
BENCHMARK(BM_AdaptiveJointDodecahedron);

static void BM_ValidatePovmMub(benchmark::State& state) {
  const JointObservable g = mub_joint(fourier_mub(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(validate_povm(g));
  }
}
BENCHMARK(BM_ValidatePovmMub)->Arg(4)->Arg(8)->Arg(16);

static void BM_QubitBoundEnumeration(benchmark::State& state) {
  std::vector<BlochVector> directions;
  const int n = static_cast<int>(state.range(0));
  for (int k = 0; k < n; ++k) {
    const double theta = 0.3 * k, phi = 0.7 * k + 0.1;
    directions.emplace_back(std::sin(theta) * std::cos(phi),
                            std::sin(theta) * std::sin(phi), std::cos(theta));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(qubit_bound(directions));
  }
}
BENCHMARK(BM_QubitBoundEnumeration)->Arg(10)->Arg(16)->Arg(20);

static void BM_BuildMubWitness(benchmark::State& state) {
  const MubPair pair = fourier_mub(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_mub_witness(pair));
  }
}
BENCHMARK(BM_BuildMubWitness)->Arg(4)->Arg(9)->Arg(16);

BENCHMARK_MAIN();
