#include "dfscert/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>
#include <thread>

#include "dfscert/exact.hpp"
#include "dfscert/parallel.hpp"

namespace dfscert {

namespace {

bool needs_quoting(const std::string& s) {
  return s.find_first_of(",\"\n") != std::string::npos;
}

std::string csv_field(const std::string& s) {
  if (!needs_quoting(s)) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string format_double(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

void emit_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "n,d,epsilon,ell,tester,seed,verdict,neighbor_queries,label_queries,wall_time_ms,"
         "witness,notes\n";
  for (const BenchRecord& r : records) {
    out << r.n << ',' << r.d << ',' << format_double(r.epsilon) << ',' << r.ell << ','
        << csv_field(r.tester) << ',' << r.seed << ',' << csv_field(r.verdict) << ','
        << r.neighbor_queries << ',' << r.label_queries << ',' << format_double(r.wall_time_ms)
        << ',' << csv_field(r.witness) << ',' << csv_field(r.notes) << '\n';
  }
  if (!out) throw IoError("failed writing CSV stream");
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  struct Task {
    std::uint32_t n;
    std::uint32_t trial;
  };
  std::vector<Task> tasks;
  for (std::uint32_t n : config.sizes) {
    for (std::uint32_t t = 0; t < config.trials; ++t) tasks.push_back({n, t});
  }

  std::vector<BenchRecord> records(tasks.size());
  parallel_for(tasks.size(), [&](std::uint64_t idx) {
    const Task& task = tasks[idx];
    std::uint64_t seed = derive_seed(config.params.seed, (static_cast<std::uint64_t>(task.n) << 20) + task.trial);

    Instance inst = [&] {
      switch (config.instances) {
        case BenchInstances::Bad: {
          std::uint32_t N = config.N != 0
                                ? config.N
                                : static_cast<std::uint32_t>(std::cbrt(static_cast<double>(task.n)));
          return gen_bad(task.n, std::max<std::uint32_t>(N, 1), seed);
        }
        case BenchInstances::Planted: {
          Instance base = gen_path(task.n, std::max(config.d, 3u), seed);
          std::uint32_t k = std::max<std::uint32_t>(
              1, static_cast<std::uint32_t>(config.params.epsilon * task.n / 5.0));
          return perturb(base, k, PlantKind::L2, derive_seed(seed, 7));
        }
        default:
          return gen_random_valid(task.n, config.d, seed);
      }
    }();

    GraphOracle oracle(inst.graph, derive_seed(seed, 11));
    TesterParams p = config.params;
    p.seed = derive_seed(seed, 11);

    auto t0 = std::chrono::steady_clock::now();
    Verdict v = [&] {
      try {
        return run_tester(config.tester, oracle, p);
      } catch (const BudgetExhausted&) {
        return Verdict::accept();
      } catch (const EmptyGraph&) {
        return Verdict::accept();
      }
    }();
    auto t1 = std::chrono::steady_clock::now();

    ResolvedParams rp = resolve_params(p, inst.graph.n(), inst.graph.degree_bound());
    BenchRecord rec;
    rec.n = task.n;
    rec.d = inst.graph.degree_bound();
    rec.epsilon = p.epsilon;
    rec.ell = rp.ell;
    rec.tester = tester_name(config.tester);
    rec.seed = seed;
    rec.verdict = v.accepted ? "accept" : "reject";
    rec.neighbor_queries = oracle.query_count().neighbor_queries;
    rec.label_queries = oracle.query_count().label_queries;
    rec.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (v.witness) rec.witness = describe_witness(*v.witness);
    rec.notes = std::string("s_branch=") + (rp.global_cube_branch ? "cube" : "formula") +
                ";edge_cost=per-attempt";
    records[idx] = std::move(rec);
  });

  std::sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.seed < b.seed;
  });
  return records;
}

}  // namespace dfscert
