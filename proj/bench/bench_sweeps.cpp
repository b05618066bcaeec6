// Serial reference loops against the OpenMP sweeps.

#include <benchmark/benchmark.h>

#include <memory>

#include "higgins/abelian.hpp"
#include "higgins/certifier.hpp"
#include "higgins/coset_system.hpp"
#include "higgins/trefoil.hpp"

using namespace higgins;

namespace {
  Execution policy(benchmark::State const& state) {
    return state.range(0) == 0 ? Execution::serial()
                               : Execution::threads(static_cast<int>(state.range(0)));
  }

  CosetSystem z2_system() {
    auto G = std::make_shared<AbelianGroup>(2, std::vector<std::int64_t>{});
    auto H = std::make_shared<AbelianSubgroup>(
        G, std::vector<Word>{G->alphabet().parse("x1 x2")});
    return make_coset_system(H, Mode::synchronous);
  }

  void certify_sync(benchmark::State& state) {
    CosetSystem sys = z2_system();
    for (auto _ : state) {
      benchmark::DoNotOptimize(certify_coset_system(sys, 8, policy(state)).K);
    }
  }

  void certify_async(benchmark::State& state) {
    CosetSystem sys = z2_system();
    sys.mode        = Mode::asynchronous;
    for (auto _ : state) {
      benchmark::DoNotOptimize(certify_coset_system(sys, 6, policy(state)).K);
    }
  }

  void crossover(benchmark::State& state) {
    CosetSystem       sys = z2_system();
    std::vector<Word> Y   = sys.context->generators();
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_maximal_crossover(sys, Y, Y, 1, 8, policy(state)).violations);
    }
  }

  void trefoil(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(trefoil_crossover_experiment(5, 4, policy(state)).violations);
    }
  }
}  // namespace

// argument 0 is the serial loop, n > 0 the OpenMP sweep with n threads
BENCHMARK(certify_sync)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(certify_async)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(crossover)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(trefoil)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
