#include <benchmark/benchmark.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "dsmfuse/belief.hpp"
#include "dsmfuse/hyper_power_set.hpp"
#include "dsmfuse/lattice.hpp"

using namespace dsmfuse;

namespace {

Proposition term(std::size_t n, IndexSet t) { return Proposition::intersection(n, t); }

// p, b, f, nf with f ∩ nf = ∅.
Model tp2_model() {
  const IndexSet exclusive = 0b1100;
  return Model(Frame({"p", "b", "f", "nf"}), std::span<const IndexSet>(&exclusive, 1));
}

std::array<Bba, 3> tp2_rules(const Model& m, double eps) {
  auto rule = [&](IndexSet strong, IndexSet weak) {
    const std::vector<Bba::Entry> e{{term(4, strong), 1 - eps}, {term(4, weak), eps}};
    return Bba(m, e);
  };
  return {rule(0b1001, 0b0001), rule(0b0110, 0b0010), rule(0b0011, 0b0001)};
}

Bba random_bba(std::mt19937_64& rng, const Model& m, std::size_t focal) {
  std::uniform_int_distribution<IndexSet> pick(1, (IndexSet{1} << m.width()) - 1);
  std::vector<Bba::Entry> entries;
  double total = 0.0;
  for (std::size_t i = 0; i < focal; ++i) {
    const IndexSet t[] = {pick(rng), pick(rng)};
    const double w = std::uniform_real_distribution<double>(0.1, 1.0)(rng);
    entries.emplace_back(Proposition::canonicalize(m.width(), t), w);
    total += w;
  }
  for (auto& e : entries) e.second /= total;
  return Bba(m, entries);
}

}  // namespace

static void BM_EnumerateHyperPowerSet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::size_t count = 0;
  for (auto _ : state) {
    count = 0;
    for_each_hyper_power_set_element(n, {}, [&](const Proposition& p) {
      benchmark::DoNotOptimize(p);
      ++count;
    });
  }
  state.counters["elements"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateHyperPowerSet)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_Tp2Hybrid(benchmark::State& state) {
  const Model m = tp2_model();
  const auto rules = tp2_rules(m, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(dsm_hybrid_combine(rules));
}
BENCHMARK(BM_Tp2Hybrid);

static void BM_RandomDempster(benchmark::State& state) {
  const auto sources_count = static_cast<std::size_t>(state.range(0));
  const Model m = Model::free(Frame::numbered(6));
  std::mt19937_64 rng(17);
  std::vector<Bba> sources;
  for (std::size_t i = 0; i < sources_count; ++i) sources.push_back(random_bba(rng, m, 8));
  for (auto _ : state) benchmark::DoNotOptimize(dempster_combine(sources));
  state.counters["tuples"] = std::pow(8.0, static_cast<double>(sources_count));
}
BENCHMARK(BM_RandomDempster)->Arg(2)->Arg(3)->Arg(4);

static void BM_RandomHybridShafer(benchmark::State& state) {
  const Model m = Model::shafer(Frame::numbered(6));
  std::mt19937_64 rng(23);
  std::vector<Bba> sources;
  for (int i = 0; i < 3; ++i) sources.push_back(random_bba(rng, Model::free(Frame::numbered(6)), 8));
  // Mass on terms that vanish under the Shafer model lands on ∅ and goes through S2.
  std::vector<Bba> shafer_sources;
  for (const auto& s : sources) {
    std::vector<Bba::Entry> entries;
    for (const auto& [p, mass] : s.focal_elements()) entries.emplace_back(m.reduce(p), mass);
    shafer_sources.push_back(Bba::with_conflict(m, entries));
  }
  for (auto _ : state) benchmark::DoNotOptimize(dsm_hybrid_combine(shafer_sources));
}
BENCHMARK(BM_RandomHybridShafer);

BENCHMARK_MAIN();
