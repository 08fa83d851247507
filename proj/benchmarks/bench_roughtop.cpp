#include <benchmark/benchmark.h>

#include <fstream>
#include <random>
#include <sstream>

#include "roughtop/approx.hpp"
#include "roughtop/commands.hpp"
#include "roughtop/enumerate.hpp"
#include "roughtop/rough_group.hpp"
#include "roughtop/topology.hpp"
#include "roughtop/trg.hpp"
#include "roughtop/workspace.hpp"

using namespace roughtop;

namespace {

std::string fixture(const char* name) {
  std::ifstream in(std::string(ROUGHTOP_FIXTURE_DIR) + "/" + name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

UniversePtr numbered(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return make_universe(std::move(names));
}

void BM_Approximations(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto u = numbered(n);
  std::mt19937 rng(1);
  std::vector<ElementSet> blocks(n / 4 + 1, ElementSet(n));
  for (std::size_t e = 0; e < n; ++e) blocks[rng() % blocks.size()].insert(e);
  std::erase_if(blocks, [](const ElementSet& b) { return b.empty(); });
  ApproxSpace space(Partition(u, blocks));
  ElementSet x(n);
  for (std::size_t e = 0; e < n; e += 3) x.insert(e);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lower_approx(space, x));
    benchmark::DoNotOptimize(upper_approx(space, x));
  }
}
BENCHMARK(BM_Approximations)->Arg(12)->Arg(64);

void BM_GenerateTopology(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto u = numbered(n);
  Family sub;
  for (std::size_t e = 0; e + 1 < n; ++e) sub.push_back(ElementSet(n, {e, e + 1}));
  for (auto _ : state) benchmark::DoNotOptimize(generate_topology(u, u->full_set(), sub));
}
BENCHMARK(BM_GenerateTopology)->Arg(4)->Arg(8)->Arg(12);

void BM_EnumerateTopologies(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto u = numbered(n);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_topologies(u, u->full_set(), n));
}
BENCHMARK(BM_EnumerateTopologies)->DenseRange(2, 5);

void BM_ParseWorkspace(benchmark::State& state) {
  const std::string text = fixture("s4.rt");
  for (auto _ : state) benchmark::DoNotOptimize(parse_workspace(text));
}
BENCHMARK(BM_ParseWorkspace);

void BM_VerifyTrgS4(benchmark::State& state) {
  auto ws = parse_workspace(fixture("s4.rt"));
  auto group = verify_rough_group(ws.space_of_subset("G"), ws.subset("G").set);
  const auto tau = ws.topology("tau");
  for (auto _ : state) benchmark::DoNotOptimize(verify_trg(*group.cert, tau));
}
BENCHMARK(BM_VerifyTrgS4);

void BM_ProductDocument(benchmark::State& state) {
  auto ws = parse_workspace(fixture("z3.rt"));
  for (auto _ : state) benchmark::DoNotOptimize(product_document(ws, "G", "tau", ws, "G", "tau"));
}
BENCHMARK(BM_ProductDocument);

void BM_PropositionSuiteZ3Squared(benchmark::State& state) {
  auto ws = parse_workspace(fixture("z3_squared.rt"));
  Command cmd;
  cmd.verb = "check";
  cmd.kind = "prop";
  cmd.prop = "suite";
  cmd.args = {{"group", "GxG"}, {"topology", "tauxtau"}};
  for (auto _ : state) benchmark::DoNotOptimize(run_command(ws, cmd));
}
BENCHMARK(BM_PropositionSuiteZ3Squared);

}  // namespace
BENCHMARK_MAIN();
