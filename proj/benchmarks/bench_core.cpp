#include <benchmark/benchmark.h>

#include "dfscert/exact.hpp"
#include "dfscert/gadgets.hpp"
#include "dfscert/navigator.hpp"

namespace bm = benchmark;
using namespace dfscert;

static void BM_ExactCheck(bm::State& st) {
  auto n = static_cast<std::uint32_t>(st.range(0));
  Instance inst = gen_random_valid(n, 5, 42);
  for (auto _ : st) {
    auto v = check_by_conflicts(inst.graph);
    bm::DoNotOptimize(v.accepted);
  }
  st.SetItemsProcessed(st.iterations() * n);
}
BENCHMARK(BM_ExactCheck)->Arg(1 << 12)->Arg(1 << 15)->Arg(1 << 18);

static void BM_DfsNextSweep(bm::State& st) {
  auto n = static_cast<std::uint32_t>(st.range(0));
  Instance inst = gen_random_valid(n, 5, 7);
  for (auto _ : st) {
    GraphOracle o(inst.graph, 1);
    std::uint64_t cap = 4ULL * 25 * 64;
    std::uint64_t visited = 0;
    for (VertexId v = 1; v <= n; ++v) {
      NavResult r = dfs_next(o, v, cap);
      visited += r.kind == NavResult::Next;
    }
    bm::DoNotOptimize(visited);
    st.counters["queries_per_vertex"] =
        static_cast<double>(o.query_count().total()) / static_cast<double>(n);
  }
}
BENCHMARK(BM_DfsNextSweep)->Arg(1 << 10)->Arg(1 << 14);

static void BM_Sweepline(bm::State& st) {
  auto n = static_cast<std::uint32_t>(st.range(0));
  Instance inst = gen_random_valid(n, 5, 9);
  std::vector<std::pair<Label, Label>> vi;
  for (Label v = 1; v <= n; ++v) vi.emplace_back(parent_label(inst.graph, v), v);
  auto ei = inst.graph.edge_labels();
  for (auto _ : st) {
    auto r = sweepline_conflicts(vi, ei);
    bm::DoNotOptimize(r.has_value());
  }
  st.SetItemsProcessed(st.iterations() * (vi.size() + ei.size()));
}
BENCHMARK(BM_Sweepline)->Arg(1 << 12)->Arg(1 << 16);

static void BM_GenBad(bm::State& st) {
  auto n = static_cast<std::uint32_t>(st.range(0));
  std::uint64_t seed = 0;
  for (auto _ : st) {
    Instance inst = gen_bad(n, 32, ++seed);
    bm::DoNotOptimize(inst.graph.edge_count());
  }
  st.SetItemsProcessed(st.iterations() * n);
}
BENCHMARK(BM_GenBad)->Arg(1 << 15)->Arg(1 << 18);

BENCHMARK_MAIN();
