#include <doctest.h>

#include <cstdio>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "dfscert/bench.hpp"
#include "dfscert/exact.hpp"
#include "dfscert/gadgets.hpp"
#include "dfscert/io.hpp"
#include "support/fixtures.hpp"

using namespace dfscert;
namespace ts = dfscert::testsupport;
namespace fs = std::filesystem;

namespace {

std::string render(const LabeledGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("dfscert_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("write_graph emits the documented 5-line file for P3") {
  std::string text = render(ts::p3());
  CHECK(text ==
        "dfsgraph 1 3 2 0\n"
        "labels 1 2 3\n"
        "e 1 2\n"
        "e 2 3\n"
        "end\n");
}

TEST_CASE("round trip is the identity, byte for byte") {
  Rng rng(11111);
  for (int trial = 0; trial < 100; ++trial) {
    auto n = static_cast<std::uint32_t>(rng.range(1, 400));
    Instance inst = rng.coin() ? gen_random_valid(n, 5, rng.next_u64())
                               : gen_random_valid_directed(n, 4, rng.next_u64());
    std::string once = render(inst.graph);
    std::istringstream in(once);
    LabeledGraph parsed = parse_graph(in);
    CHECK(render(parsed) == once);
  }
  // generator outputs round trip at scale
  Instance big = gen_bad(1 << 15, 32, 5);
  std::string once = render(big.graph);
  std::istringstream in(once);
  CHECK(render(parse_graph(in)) == once);
}

TEST_CASE("parse errors carry line numbers") {
  std::istringstream missing_end("dfsgraph 1 3 2 0\nlabels 1 2 3\ne 1 2\n");
  CHECK_THROWS_WITH_AS(parse_graph(missing_end), doctest::Contains("EOF"), ParseError);

  std::istringstream bad_header("dfsgraph 2 3 2 0\nlabels 1 2 3\nend\n");
  CHECK_THROWS_AS(parse_graph(bad_header), ParseError);

  std::istringstream dup(
      "dfsgraph 1 4 3 0\nlabels 1 2 3 4\ne 1 2\ne 1 2\nend\n");
  CHECK_THROWS_AS(parse_graph(dup), DuplicateEdge);

  std::istringstream badlabel("dfsgraph 1 3 2 0\nlabels 1 1 2\nend\n");
  CHECK_THROWS_AS(parse_graph(badlabel), NonBijectiveLabels);
}

TEST_CASE("emit_csv quotes and orders columns") {
  std::vector<BenchRecord> records;
  std::ostringstream empty;
  emit_csv(empty, records);
  CHECK(empty.str() ==
        "n,d,epsilon,ell,tester,seed,verdict,neighbor_queries,label_queries,wall_time_ms,"
        "witness,notes\n");

  BenchRecord r;
  r.n = 4;
  r.d = 3;
  r.epsilon = 0.1;
  r.ell = 2;
  r.tester = "combined";
  r.seed = 7;
  r.verdict = "reject";
  r.neighbor_queries = 10;
  r.label_queries = 5;
  r.wall_time_ms = 0.5;
  r.witness = "conflict v=3 edge={2,4}";
  r.notes = "s_branch=formula;edge_cost=per-attempt";
  records = {r, r, r};
  std::ostringstream three;
  emit_csv(three, records);
  // header + 3 rows; the witness field holds a comma, so it gets quotes
  int lines = 0;
  for (char c : three.str()) lines += c == '\n';
  CHECK(lines == 4);
  CHECK(three.str().find("\"conflict v=3 edge={2,4}\"") != std::string::npos);
}

TEST_CASE("cli: gen then check mirrors the library verdicts") {
  TempDir tmp;

  // valid path instance: check accepts with exit 0
  std::string good = tmp.file("p3.dfsg");
  save_graph_file(good, ts::p3());
  CHECK(run_cli({"check", good}) == 0);

  std::string bad = tmp.file("ga.dfsg");
  save_graph_file(bad, ts::ga());
  CHECK(run_cli({"check", bad}) == 1);
  CHECK(run_cli({"check", bad, "--mode", "conflicts"}) == 1);
  CHECK(run_cli({"check", bad, "--mode", "simulation"}) == 1);

  // generated instances
  std::string gg = tmp.file("good.dfsg");
  CHECK(run_cli({"gen", "good", "--n", "640", "--N", "4", "--seed", "3", "--out", gg}) == 0);
  CHECK(run_cli({"check", gg}) == 0);
  LabeledGraph g = load_graph_file(gg);
  CHECK(check_by_conflicts(g).accepted);

  std::string gb = tmp.file("bad.dfsg");
  CHECK(run_cli({"gen", "bad", "--n", "640", "--N", "4", "--seed", "3", "--out", gb}) == 0);
  int rc = run_cli({"check", gb});
  CHECK(rc == (check_by_conflicts(load_graph_file(gb)).accepted ? 0 : 1));

  // usage errors exit 2
  CHECK(run_cli({"check", tmp.file("missing.dfsg")}) == 2);
  CHECK(run_cli({"frobnicate"}) == 2);
  CHECK(run_cli({}) == 2);
}

TEST_CASE("cli: test subcommand agrees with the library under the same seed") {
  TempDir tmp;
  std::string file = tmp.file("inst.dfsg");
  Instance inst = gen_bad(4096, 16, 9);
  save_graph_file(file, inst.graph);

  int rc = run_cli({"test", file, "--eps", "0.03", "--tester", "combined", "--seed", "42",
                    "--no-fallback"});
  TesterParams p;
  p.epsilon = 0.03;
  p.seed = 42;
  p.allow_fallback = false;
  GraphOracle o(inst.graph, 42);
  Verdict v = test_combined(o, p);
  CHECK(rc == (v.accepted ? 0 : 1));

  // fin route runs end to end
  std::string r3 = tmp.file("r3.dfsg");
  save_graph_file(r3, ts::r3());
  CHECK(run_cli({"test", r3, "--eps", "0.3", "--fin", "--seed", "1"}) == 0);
  CHECK(run_cli({"check", r3, "--fin"}) == 0);
}

TEST_CASE("cli: bench writes a parsable CSV with matching query counts") {
  TempDir tmp;
  std::string csv = tmp.file("bench.csv");
  CHECK(run_cli({"bench", "--tester", "simple", "--sizes", "256,512", "--trials", "3", "--eps",
                 "0.2", "--seed", "5", "--csv", csv}) == 0);
  std::ifstream in(csv);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "n,d,epsilon,ell,tester,seed,verdict,neighbor_queries,label_queries,wall_time_ms,"
        "witness,notes");
  int rows = 0;
  for (std::string line; std::getline(in, line);) rows += !line.empty();
  CHECK(rows == 6);
}

TEST_CASE("cli: bench rows replay to identical oracle counts") {
  BenchConfig config;
  config.tester = TesterKind::Simple;
  config.sizes = {512};
  config.trials = 4;
  config.d = 4;
  config.params.epsilon = 0.2;
  config.params.seed = 77;
  auto records = run_bench(config);
  REQUIRE(records.size() == 4);
  for (const auto& rec : records) {
    Instance inst = gen_random_valid(rec.n, config.d, rec.seed);
    GraphOracle o(inst.graph, derive_seed(rec.seed, 11));
    TesterParams p = config.params;
    p.seed = derive_seed(rec.seed, 11);
    Verdict v = test_simple(o, p);
    CHECK((v.accepted ? "accept" : "reject") == rec.verdict);
    CHECK(o.query_count().neighbor_queries == rec.neighbor_queries);
    CHECK(o.query_count().label_queries == rec.label_queries);
  }
}

TEST_CASE("cli: game smoke run") {
  TempDir tmp;
  std::string csv = tmp.file("game.csv");
  CHECK(run_cli({"game", "--n", "2048", "--N", "8", "--budget", "1", "--trials", "40", "--seed",
                 "3", "--csv", csv}) == 0);
  std::ifstream in(csv);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header == "n,N,budget,trials,successes,rate,wilson_low,wilson_high");
  CHECK(row.substr(0, 5) == "2048,");
}

TEST_CASE("bench and game results are independent of the worker count") {
  auto run_once = [](const char* threads) {
    setenv("DFS_CERTIFY_THREADS", threads, 1);
    BenchConfig config;
    config.tester = TesterKind::Combined;
    config.sizes = {128, 256};
    config.trials = 6;
    config.d = 4;
    config.params.epsilon = 0.3;
    config.params.seed = 4242;
    auto records = run_bench(config);
    TesterParams gp;
    gp.epsilon = 1.0 / 33.0;
    gp.allow_fallback = false;
    GameResult game = distinguisher_game(TesterKind::Combined, 2048, 8, 500, 30, 11, gp);
    unsetenv("DFS_CERTIFY_THREADS");
    return std::pair{records, game.successes};
  };
  auto [r1, g1] = run_once("1");
  auto [r2, g2] = run_once("2");
  REQUIRE(r1.size() == r2.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    CHECK(r1[i].seed == r2[i].seed);
    CHECK(r1[i].verdict == r2[i].verdict);
    CHECK(r1[i].neighbor_queries == r2[i].neighbor_queries);
    CHECK(r1[i].label_queries == r2[i].label_queries);
  }
  CHECK(g1 == g2);
}
