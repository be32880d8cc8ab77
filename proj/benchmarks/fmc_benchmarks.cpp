#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>
#include <string>

#include "fmc/analysis/analysis.hpp"
#include "fmc/analysis/solver.hpp"
#include "fmc/dl/functional_syntax.hpp"
#include "fmc/dsl.hpp"
#include "fmc/owl/compiler.hpp"
#include "fmc/propositional.hpp"
#include "fmc/scaffold/scaffold.hpp"

namespace {

const std::string& aisco_source() {
  static const std::string text = [] {
    std::ifstream in(FMC_AISCO_MODEL);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }();
  return text;
}

// A wide model: `n` optional children under the root, each owning an
// alternative group of three, with a requires chain across the groups.
std::string wide_model(int n) {
  std::string src = "feature Root {\n";
  for (int i = 0; i < n; ++i) {
    const std::string k = std::to_string(i);
    src += "  optional M" + k + " { alternative { A" + k + " B" + k + " C" + k + " } }\n";
  }
  src += "}\nconstraints {\n";
  for (int i = 0; i + 1 < n; ++i) {
    src += "  A" + std::to_string(i) + " requires M" + std::to_string(i + 1) + "\n";
  }
  return src + "}\n";
}

void BM_ParseAisco(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(fmc::parse_model(aisco_source()));
}
BENCHMARK(BM_ParseAisco);

void BM_CompileAndSerializeAisco(benchmark::State& state) {
  const fmc::FeatureModel model = fmc::parse_model(aisco_source());
  for (auto _ : state) {
    benchmark::DoNotOptimize(fmc::dl::serialize_functional(fmc::owl::compile(model)));
  }
}
BENCHMARK(BM_CompileAndSerializeAisco);

void BM_ParseFunctionalAisco(benchmark::State& state) {
  const std::string text =
      fmc::dl::serialize_functional(fmc::owl::compile(fmc::parse_model(aisco_source())));
  for (auto _ : state) benchmark::DoNotOptimize(fmc::dl::parse_functional(text));
}
BENCHMARK(BM_ParseFunctionalAisco);

void BM_ScaffoldAisco(benchmark::State& state) {
  const fmc::dl::Ontology o = fmc::owl::compile(fmc::parse_model(aisco_source()));
  const auto registry = fmc::scaffold::TriggerRegistry::defaults();
  for (auto _ : state) benchmark::DoNotOptimize(fmc::scaffold::generate(o, registry));
}
BENCHMARK(BM_ScaffoldAisco);

void BM_SolveWide(benchmark::State& state) {
  const fmc::PropositionalFormula f =
      fmc::to_propositional(fmc::parse_model(wide_model(static_cast<int>(state.range(0)))));
  for (auto _ : state) benchmark::DoNotOptimize(fmc::analysis::solve(f));
}
BENCHMARK(BM_SolveWide)->RangeMultiplier(4)->Range(4, 256);

void BM_DeadFeaturesWide(benchmark::State& state) {
  const fmc::FeatureModel m = fmc::parse_model(wide_model(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(fmc::analysis::dead_features(m));
}
BENCHMARK(BM_DeadFeaturesWide)->RangeMultiplier(4)->Range(4, 64);

void BM_CountAisco(benchmark::State& state) {
  const fmc::FeatureModel m = fmc::parse_model(aisco_source());
  for (auto _ : state) benchmark::DoNotOptimize(fmc::analysis::count_configurations(m));
}
BENCHMARK(BM_CountAisco);

void BM_CountWide(benchmark::State& state) {
  // Root plus four features per block, so 5 blocks stay under the counting cap.
  const fmc::FeatureModel m = fmc::parse_model(wide_model(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(fmc::analysis::count_configurations(m));
}
BENCHMARK(BM_CountWide)->DenseRange(1, 5);

}  // namespace

BENCHMARK_MAIN();
