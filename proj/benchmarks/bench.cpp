#include <benchmark/benchmark.h>

#include <memory>

#include "cuttrees/bass_serre.hpp"
#include "cuttrees/cut_engine.hpp"
#include "cuttrees/families.hpp"
#include "cuttrees/nesting.hpp"
#include "cuttrees/presets.hpp"
#include "cuttrees/structure_tree.hpp"

using namespace cuttrees;

namespace {

Truncation model(const char* fam, int r) {
  return truncate(make_generator(FamilySpec::parse(fam)), r, 2);
}

void bm_truncate(benchmark::State& state) {
  const auto gen = make_generator(FamilySpec::parse("cross:4"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncate(gen, static_cast<int>(state.range(0)), 2));
  }
}
BENCHMARK(bm_truncate)->Arg(4)->Arg(6)->Arg(8);

void bm_kappa(benchmark::State& state) {
  const Truncation t = model("cross:4", static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kappa(t.model));
  }
}
BENCHMARK(bm_kappa)->Arg(4)->Arg(6);

void bm_separator_enumeration(benchmark::State& state) {
  const Truncation t = model("ladder", static_cast<int>(state.range(0)));
  EdgeIndex e = 0;
  for (EdgeIndex i = 0; i < t.model.edge_count(); ++i)
    if (!t.model.edge(i).is_protected) {
      e = i;
      break;
    }
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_separators_containing(t.model, e, 3));
  }
}
BENCHMARK(bm_separator_enumeration)->Arg(6)->Arg(10);

void bm_nesting_index(benchmark::State& state) {
  const KappaResult kr = kappa(model("tree:4", 3).model);
  for (auto _ : state) {
    benchmark::DoNotOptimize(m_index(kr.minimal_cuts));
  }
}
BENCHMARK(bm_nesting_index);

void bm_structure_tree(benchmark::State& state) {
  const Truncation t = model("tree:4", 3);
  const std::vector<Cut> opt = optimal_cuts(kappa(t.model).minimal_cuts);
  for (auto _ : state) {
    const CutSystem sys(t.model, opt);
    benchmark::DoNotOptimize(build_tree(sys));
  }
}
BENCHMARK(bm_structure_tree);

void bm_pipeline(benchmark::State& state) {
  const auto pres =
      std::make_shared<Presentation>(Presentation::from_json(preset_presentation("z2_z3")));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stallings_pipeline(pres, 5));
  }
}
BENCHMARK(bm_pipeline);

}  // namespace

BENCHMARK_MAIN();
