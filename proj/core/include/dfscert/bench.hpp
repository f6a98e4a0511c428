#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "dfscert/gadgets.hpp"
#include "dfscert/parallel.hpp"

namespace dfscert {

struct BenchRecord {
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  double epsilon = 0.0;
  std::uint32_t ell = 0;
  std::string tester;
  std::uint64_t seed = 0;
  std::string verdict;  // "accept" | "reject"
  std::uint64_t neighbor_queries = 0;
  std::uint64_t label_queries = 0;
  double wall_time_ms = 0.0;
  std::string witness;  // empty on accept
  std::string notes;    // e.g. which s-branch fired, edge-cost accounting
};

// Header row then one record per row, RFC-4180 quoting, columns in the
// order the struct lists them.
void emit_csv(std::ostream& out, const std::vector<BenchRecord>& records);

enum class BenchInstances : std::uint8_t { Valid, Bad, Planted };

struct BenchConfig {
  TesterKind tester = TesterKind::Combined;
  std::vector<std::uint32_t> sizes;
  std::uint32_t trials = 10;
  std::uint32_t d = 5;
  std::uint32_t N = 0;  // for Bad instances; 0 = floor(n^{1/3})
  BenchInstances instances = BenchInstances::Valid;
  TesterParams params;
};

// One record per (size, trial); trials fan out over a worker pool capped by
// DFS_CERTIFY_THREADS, records come back sorted by (n, seed).
std::vector<BenchRecord> run_bench(const BenchConfig& config);

}  // namespace dfscert
