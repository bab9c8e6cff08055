#include <benchmark/benchmark.h>

#include "arc/parser.hpp"
#include "random_arch.hpp"
#include "test_support.hpp"

using namespace arc;

namespace {

std::vector<SourceFile> coffee_sources() {
  std::vector<SourceFile> files;
  for (const auto& p : test::coffee_files()) files.push_back({p.filename().string(), test::slurp(p)});
  return files;
}

void BM_ParseListing(benchmark::State& state) {
  const auto text = test::slurp(test::fixture("coffee/CoffeeMachine.arc"));
  for (auto _ : state) benchmark::DoNotOptimize(parse_model(text, "CoffeeMachine.arc"));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseListing);

void BM_CompileCoffee(benchmark::State& state) {
  const auto files = coffee_sources();
  for (auto _ : state) benchmark::DoNotOptimize(compile(files));
}
BENCHMARK(BM_CompileCoffee);

void BM_ElaborateFlattenCoffee(benchmark::State& state) {
  const auto files = coffee_sources();
  Program prog = compile(files);
  for (auto _ : state) {
    auto e = elaborate("CoffeeMachine", prog);
    benchmark::DoNotOptimize(flatten(e.architecture));
  }
}
BENCHMARK(BM_ElaborateFlattenCoffee);

void BM_ElaborateRandom(benchmark::State& state) {
  test::ArchGenerator gen(static_cast<std::uint64_t>(state.range(0)), {});
  std::vector<SourceFile> files{{"random.arc", gen.generate()}};
  Program prog = compile(files);
  for (auto _ : state) {
    auto e = elaborate("C0", prog);
    benchmark::DoNotOptimize(flatten(e.architecture));
  }
}
BENCHMARK(BM_ElaborateRandom)->Arg(3)->Arg(7)->Arg(11);

void BM_RunEchoLoop(benchmark::State& state) {
  Program prog = test::compile_paths({test::fixture("misc/echo_loop.arc")});
  auto b = test::build(prog, "Loop");
  RunConfig cfg;
  cfg.maxSteps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(b.arch(), b.routes(), {{"start", RuntimeValue(std::int64_t{0})}}, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RunEchoLoop)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
