#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dfscert/bench.hpp"
#include "dfscert/exact.hpp"
#include "dfscert/gadgets.hpp"
#include "dfscert/io.hpp"
#include "dfscert/transforms.hpp"

namespace dfscert {

namespace {

TesterKind parse_tester(const std::string& name) {
  if (name == "combined") return TesterKind::Combined;
  if (name == "simple") return TesterKind::Simple;
  if (name == "l1") return TesterKind::L1;
  if (name == "l2") return TesterKind::L2;
  if (name == "l3") return TesterKind::L3;
  if (name == "global") return TesterKind::Global;
  throw CLI::ValidationError("tester", "unknown tester " + name);
}

int report(const Verdict& v) {
  if (v.accepted) {
    std::cout << "accept\n";
    return 0;
  }
  std::cout << describe_witness(*v.witness) << '\n';
  return 1;
}

int cmd_gen(const std::string& kind, std::uint32_t n, std::uint32_t N, std::uint32_t d,
            std::uint64_t seed, const std::string& out, const std::string& plant_kind,
            std::uint32_t plant_k) {
  Instance inst = [&] {
    if (kind == "good") return gen_good(n, N, seed);
    if (kind == "bad") return gen_bad(n, N, seed);
    if (kind == "random") return gen_random_valid(n, d, seed);
    // perturbed: plant into a path substrate
    Instance base = gen_path(n, std::max(d, 3u), seed);
    std::uint32_t k = plant_k != 0 ? plant_k : std::max<std::uint32_t>(1, n / 50);
    PlantKind pk = plant_kind == "l1"   ? PlantKind::L1
                   : plant_kind == "l3" ? PlantKind::L3
                   : plant_kind == "g"  ? PlantKind::G
                                        : PlantKind::L2;
    return perturb(base, k, pk, derive_seed(seed, 7));
  }();
  save_graph_file(out, inst.graph);
  std::cout << "family=" << family_name(inst.family) << " n=" << inst.graph.n()
            << " d=" << inst.graph.degree_bound() << " edges=" << inst.graph.edge_count();
  if (inst.family == Family::Bad) std::cout << " farness_certificate=" << farness_certificate(inst);
  std::cout << '\n';
  return 0;
}

int cmd_check(const std::string& file, bool fin, const std::string& mode) {
  LabeledGraph g = load_graph_file(file);
  if (fin) {
    Verdict v = check_fin(g);
    return report(v);
  }
  if (mode == "conflicts") return report(check_by_conflicts(g));
  if (mode == "simulation") return report(check_by_simulation(g));
  Verdict a = check_by_conflicts(g);
  Verdict b = check_by_simulation(g);
  if (a.accepted != b.accepted) {
    std::cerr << "checker disagreement (conflicts vs simulation)\n";
    return 2;
  }
  return report(a);
}

int cmd_test(const std::string& file, const std::string& tester, const TesterParams& params,
             bool fin) {
  LabeledGraph g = load_graph_file(file);
  GraphOracle oracle(g, params.seed, std::nullopt, fin);
  TesterKind kind = parse_tester(tester);
  Verdict v = [&] {
    try {
      if (fin && kind == TesterKind::Combined) return test_fin(oracle, params);
      return run_tester(kind, oracle, params);  // with --fin the oracle reverses labels
    } catch (const BudgetExhausted&) {
      return Verdict::accept();
    } catch (const EmptyGraph&) {
      return Verdict::accept();
    }
  }();
  QueryCounter qc = oracle.query_count();
  std::cout << "queries neighbor=" << qc.neighbor_queries << " label=" << qc.label_queries
            << " total=" << qc.total() << '\n';
  return report(v);
}

int cmd_bench(const std::string& tester, const std::string& sizes_csv, std::uint32_t trials,
              double eps, std::uint64_t seed, const std::string& csv, std::uint32_t d,
              const std::string& instances, bool no_fallback) {
  BenchConfig config;
  config.tester = parse_tester(tester);
  std::stringstream ss(sizes_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) config.sizes.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
  }
  if (config.sizes.empty()) throw CLI::ValidationError("sizes", "no sizes given");
  config.trials = trials;
  config.d = d;
  config.params.epsilon = eps;
  config.params.seed = seed;
  config.params.allow_fallback = !no_fallback;
  config.instances = instances == "bad"       ? BenchInstances::Bad
                     : instances == "planted" ? BenchInstances::Planted
                                              : BenchInstances::Valid;
  std::vector<BenchRecord> records = run_bench(config);
  std::ofstream out(csv, std::ios::binary);
  if (!out) throw IoError("cannot open " + csv);
  emit_csv(out, records);
  std::cout << "wrote " << records.size() << " records to " << csv << '\n';
  return 0;
}

int cmd_game(std::uint32_t n, std::uint32_t N, std::uint64_t budget, std::uint64_t trials,
             std::uint64_t seed, const std::string& csv) {
  TesterParams params;
  params.epsilon = 1.0 / 33.0;  // the construction's farness constant
  params.allow_fallback = false;
  GameResult res =
      distinguisher_game(TesterKind::Combined, n, N, budget, trials, seed, params);
  std::cout << "game n=" << n << " N=" << N << " budget=" << budget << " trials=" << res.trials
            << " success=" << res.successes << " rate=" << res.rate << " wilson=["
            << res.wilson_low << "," << res.wilson_high << "]\n";
  if (!csv.empty()) {
    std::ofstream out(csv, std::ios::binary);
    if (!out) throw IoError("cannot open " + csv);
    out << "n,N,budget,trials,successes,rate,wilson_low,wilson_high\n";
    out << n << ',' << N << ',' << budget << ',' << res.trials << ',' << res.successes << ','
        << res.rate << ',' << res.wilson_low << ',' << res.wilson_high << '\n';
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"DFS numbering validity: exact checkers, sublinear testers, hard instances"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance and write it to a file");
  std::string gen_kind;
  std::uint32_t gen_n = 64, gen_N = 4, gen_d = 5, gen_k = 0;
  std::uint64_t gen_seed = 1;
  std::string gen_out, gen_plant = "l2";
  gen->add_option("kind", gen_kind, "good|bad|random|perturbed")->required();
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--N", gen_N, "segment length for good/bad arms");
  gen->add_option("--d", gen_d, "degree bound for random/perturbed");
  gen->add_option("--seed", gen_seed, "rng seed");
  gen->add_option("--out", gen_out, "output file")->required();
  gen->add_option("--kind-planted", gen_plant, "l1|l2|l3|g (perturbed only)");
  gen->add_option("--k", gen_k, "planted conflicts (perturbed only; default n/50)");

  // check
  auto* check = app.add_subcommand("check", "exact validity check");
  std::string check_file, check_mode = "both";
  bool check_fin_flag = false;
  check->add_option("file", check_file, "graph file")->required();
  check->add_flag("--fin", check_fin_flag, "check FIN numbering instead");
  check->add_option("--mode", check_mode, "conflicts|simulation|both");

  // test
  auto* test = app.add_subcommand("test", "sublinear property test");
  std::string test_file, test_tester = "combined";
  bool test_fin_flag = false, test_no_fallback = false;
  TesterParams tp;
  test->add_option("file", test_file, "graph file")->required();
  test->add_option("--eps", tp.epsilon, "proximity parameter")->required();
  test->add_option("--tester", test_tester, "combined|simple|l1|l2|l3|global");
  test->add_option("--seed", tp.seed, "rng seed");
  test->add_option("--ell", tp.ell, "locality (default ceil(n^(1/3)))");
  test->add_option("--c-local", tp.c_local, "local sampling constant");
  test->add_option("--c-global", tp.c_global, "global sampling constant (0 = auto)");
  test->add_flag("--fin", test_fin_flag, "test the FIN numbering");
  test->add_flag("--no-fallback", test_no_fallback, "never fall back to the exact check");

  // bench
  auto* bench = app.add_subcommand("bench", "run trials and emit a CSV");
  std::string bench_tester = "combined", bench_sizes, bench_csv, bench_instances = "valid";
  std::uint32_t bench_trials = 10, bench_d = 5;
  double bench_eps = 0.1;
  std::uint64_t bench_seed = 1;
  bool bench_no_fallback = false;
  bench->add_option("--tester", bench_tester, "tester to benchmark")->required();
  bench->add_option("--sizes", bench_sizes, "comma separated n values")->required();
  bench->add_option("--trials", bench_trials, "trials per size");
  bench->add_option("--eps", bench_eps, "proximity parameter");
  bench->add_option("--seed", bench_seed, "master seed");
  bench->add_option("--csv", bench_csv, "output CSV path")->required();
  bench->add_option("--d", bench_d, "degree bound of generated instances");
  bench->add_option("--instances", bench_instances, "valid|bad|planted");
  bench->add_flag("--no-fallback", bench_no_fallback, "never fall back to the exact check");

  // game
  auto* game = app.add_subcommand("game", "good-vs-bad distinguishing game");
  std::uint32_t game_n = 0, game_N = 0;
  std::uint64_t game_budget = 0, game_trials = 100, game_seed = 1;
  std::string game_csv;
  game->add_option("--n", game_n, "vertex count")->required();
  game->add_option("--N", game_N, "segment length")->required();
  game->add_option("--budget", game_budget, "oracle query budget per trial")->required();
  game->add_option("--trials", game_trials, "number of trials");
  game->add_option("--seed", game_seed, "master seed");
  game->add_option("--csv", game_csv, "optional CSV summary path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::stringstream msg;
    int code = app.exit(e, msg, msg);
    std::cerr << msg.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      return cmd_gen(gen_kind, gen_n, gen_N, gen_d, gen_seed, gen_out, gen_plant, gen_k);
    }
    if (check->parsed()) return cmd_check(check_file, check_fin_flag, check_mode);
    if (test->parsed()) {
      tp.allow_fallback = !test_no_fallback;
      return cmd_test(test_file, test_tester, tp, test_fin_flag);
    }
    if (bench->parsed()) {
      return cmd_bench(bench_tester, bench_sizes, bench_trials, bench_eps, bench_seed, bench_csv,
                       bench_d, bench_instances, bench_no_fallback);
    }
    if (game->parsed()) {
      return cmd_game(game_n, game_N, game_budget, game_trials, game_seed, game_csv);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace dfscert
