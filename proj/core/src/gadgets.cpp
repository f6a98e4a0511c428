#include "dfscert/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "dfscert/exact.hpp"
#include "dfscert/parallel.hpp"
#include "dfscert/rng.hpp"

namespace dfscert {

namespace {

struct ArmShape {
  std::uint32_t chain;                                   // leading path, in N units
  std::vector<std::pair<std::uint32_t, std::uint32_t>> teeth;  // (base segment i, teeth segment j)
};

ArmShape arm_shape(ArmType t) {
  switch (t) {
    case ArmType::G1:
      return {6, {{2, 6}, {0, 7}}};
    case ArmType::G2:
      return {7, {{4, 7}}};
    case ArmType::B1:
      return {7, {{0, 7}}};
    default:
      return {6, {{2, 6}, {4, 7}}};
  }
}

// Emits one arm over labels offset+1 .. offset+size (size <= 8N; smaller
// sizes keep the label prefix, which preserves validity of valid arms).
void emit_arm(std::vector<LabelEdge>& edges, ArmType t, Label offset, std::uint32_t N,
              std::uint32_t size) {
  ArmShape shape = arm_shape(t);
  std::uint32_t chain_len = std::min(size, shape.chain * N);
  for (std::uint32_t j = 1; j < chain_len; ++j) {
    edges.emplace_back(offset + j, offset + j + 1);
  }
  for (auto [i, j] : shape.teeth) {
    for (std::uint32_t k = 1; k <= N; ++k) {
      Label base = i * N + k;
      Label tooth = j * N + (N - k + 1);
      if (tooth <= size) edges.emplace_back(offset + base, offset + tooth);
    }
  }
}

// Arm roots form a balanced binary tree hanging off the global root, which
// carries the first two arms directly (matching the two-branch picture at
// n = 64, N = 4). 0-indexed: children of arm i are arms 2i+2 and 2i+3.
void heap_preorder(std::uint32_t node, std::uint32_t count, std::vector<std::uint32_t>& out) {
  if (node >= count) return;
  out.push_back(node);
  heap_preorder(2 * node + 2, count, out);
  heap_preorder(2 * node + 3, count, out);
}

Instance gen_family(Family family, std::uint32_t n, std::uint32_t N, std::uint64_t seed) {
  if (N < 1) throw TooSmall("segment length N must be positive");
  if (n < 16 * N) throw TooSmall("need n >= 16N for at least two arms");
  const std::uint32_t arm_size = 8 * N;
  const std::uint32_t arms = n / arm_size;

  Rng rng(derive_seed(seed, 0xa17));
  Instance inst{LabeledGraph::build(1, 1, {}, {1}), family, {}};
  inst.meta.N = N;
  inst.meta.seed = seed;

  // Heap-shaped root tree over the arm roots; the pre-order rank determines
  // each arm's label offset. Vertex 1 is the global root.
  std::vector<std::uint32_t> order;
  order.reserve(arms);
  heap_preorder(0, arms, order);
  if (arms >= 2) {
    std::vector<std::uint32_t> second;
    heap_preorder(1, arms, second);
    order.insert(order.end(), second.begin(), second.end());
  }
  std::vector<Label> root_label(arms, 0);  // by heap index
  std::vector<Label> offsets(arms);        // by pre-order rank

  std::uint64_t used = 1 + static_cast<std::uint64_t>(arms) * arm_size;
  std::uint32_t last_arm_size = arm_size;
  if (used > n) last_arm_size = arm_size - static_cast<std::uint32_t>(used - n);

  std::vector<LabelEdge> edges;
  edges.reserve(static_cast<std::size_t>(n) + arms);
  for (std::uint32_t rank = 0; rank < arms; ++rank) {
    Label offset = 1 + static_cast<Label>(rank) * arm_size;
    offsets[rank] = offset;
    root_label[order[rank]] = offset + 1;
  }
  for (std::uint32_t heap = 0; heap < arms; ++heap) {
    Label parent = heap <= 1 ? 1 : root_label[(heap - 2) / 2];
    edges.emplace_back(parent, root_label[heap]);
  }

  for (std::uint32_t rank = 0; rank < arms; ++rank) {
    bool coin = rng.coin();
    ArmType t = family == Family::Good ? (coin ? ArmType::G1 : ArmType::G2)
                                       : (coin ? ArmType::B1 : ArmType::B2);
    std::uint32_t size = rank + 1 == arms ? last_arm_size : arm_size;
    emit_arm(edges, t, offsets[rank], N, size);
    inst.meta.arm_types.push_back(t);
    inst.meta.arm_offsets.push_back(offsets[rank]);
    inst.meta.arm_sizes.push_back(size);
  }

  // Leftover labels become a path off the global root, explored last.
  if (used < n) {
    Label first = static_cast<Label>(used) + 1;
    edges.emplace_back(1, first);
    for (Label l = first; l < n; ++l) edges.emplace_back(l, l + 1);
  }

  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), 1);  // implicit ids; games permute
  inst.graph = LabeledGraph::build(n, kGadgetDegreeBound, edges, labels, false);
  return inst;
}

}  // namespace

Instance gen_good(std::uint32_t n, std::uint32_t N, std::uint64_t seed) {
  return gen_family(Family::Good, n, N, seed);
}

Instance gen_bad(std::uint32_t n, std::uint32_t N, std::uint64_t seed) {
  return gen_family(Family::Bad, n, N, seed);
}

namespace {

std::vector<std::pair<VertexId, VertexId>> random_bounded_edges(std::uint32_t n, std::uint32_t d,
                                                                Rng& rng) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (n < 2 || d == 0) return edges;
  std::vector<std::vector<VertexId>> nbr(n + 1);  // degrees stay <= d, scans are cheap
  std::uint64_t target = std::max<std::uint64_t>(static_cast<std::uint64_t>(n) * d / 3, 1);
  std::uint64_t attempts = 4 * target + 16;
  while (attempts-- > 0 && edges.size() < target) {
    auto a = static_cast<VertexId>(rng.range(1, n));
    auto b = static_cast<VertexId>(rng.range(1, n));
    if (a == b || nbr[a].size() >= d || nbr[b].size() >= d) continue;
    if (std::find(nbr[a].begin(), nbr[a].end(), b) != nbr[a].end()) continue;
    nbr[a].push_back(b);
    nbr[b].push_back(a);
    edges.push_back(std::minmax(a, b));
  }
  return edges;
}

// Labels every vertex by discovery time of a DFS run with seeded vertex and
// neighbor orders; the result is a DFS numbering by definition.
std::vector<Label> dfs_labels(std::uint32_t n, const std::vector<std::vector<VertexId>>& adj,
                              Rng& rng) {
  std::vector<Label> label(n + 1, 0);
  std::vector<VertexId> start(n);
  std::iota(start.begin(), start.end(), 1);
  for (std::uint32_t i = n; i > 1; --i) {
    std::swap(start[i - 1], start[rng.below(i)]);
  }
  Label next = 1;
  std::vector<std::pair<VertexId, std::size_t>> stack;
  std::vector<std::vector<VertexId>> shuffled(adj);
  for (auto& ns : shuffled) {
    for (std::size_t i = ns.size(); i > 1; --i) std::swap(ns[i - 1], ns[rng.below(i)]);
  }
  for (VertexId s : start) {
    if (label[s] != 0) continue;
    label[s] = next++;
    stack.push_back({s, 0});
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx >= shuffled[v].size()) {
        stack.pop_back();
        continue;
      }
      VertexId w = shuffled[v][idx++];
      if (label[w] == 0) {
        label[w] = next++;
        stack.push_back({w, 0});
      }
    }
  }
  return label;
}

}  // namespace

Instance gen_random_valid(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0x6e4));
  auto edges = random_bounded_edges(n, d, rng);
  std::vector<std::vector<VertexId>> adj(n + 1);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<Label> by_vertex = dfs_labels(n, adj, rng);
  std::vector<Label> labels(n);
  for (VertexId v = 1; v <= n; ++v) labels[v - 1] = by_vertex[v];
  Instance inst{LabeledGraph::build_by_id(n, d, edges, labels, false), Family::RandomValid, {}};
  inst.meta.seed = seed;
  return inst;
}

Instance gen_random_valid_directed(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0xd14));
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<std::uint32_t> outdeg(n + 1, 0), indeg(n + 1, 0);
  if (n >= 2 && d >= 1) {
    std::uint64_t target = std::max<std::uint64_t>(static_cast<std::uint64_t>(n) * d / 3, 1);
    std::uint64_t attempts = 4 * target + 16;
    while (attempts-- > 0 && edges.size() < target) {
      auto a = static_cast<VertexId>(rng.range(1, n));
      auto b = static_cast<VertexId>(rng.range(1, n));
      if (a == b || outdeg[a] >= d || indeg[b] >= d) continue;
      if (!seen.insert({a, b}).second) continue;
      edges.push_back({a, b});
      ++outdeg[a];
      ++indeg[b];
    }
  }
  std::vector<std::vector<VertexId>> adj(n + 1);
  for (auto [a, b] : edges) adj[a].push_back(b);
  std::vector<Label> by_vertex = dfs_labels(n, adj, rng);
  std::vector<Label> labels(n);
  for (VertexId v = 1; v <= n; ++v) labels[v - 1] = by_vertex[v];
  Instance inst{LabeledGraph::build_by_id(n, d, edges, labels, true), Family::RandomValid, {}};
  inst.meta.seed = seed;
  return inst;
}

Instance gen_path(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
  std::vector<LabelEdge> edges;
  for (Label l = 1; l < n; ++l) edges.emplace_back(l, l + 1);
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  Instance inst{LabeledGraph::build(n, std::max<std::uint32_t>(d, 2), edges, labels, false),
                Family::RandomValid, {}};
  inst.meta.seed = seed;
  return inst;
}

namespace {

struct GapPlan {
  std::uint32_t g1, g2, g3;  // u - p(v), v - u, w - v
};

}  // namespace

Instance perturb(const Instance& base, std::uint32_t k, PlantKind kind, std::uint64_t seed) {
  const LabeledGraph& g = base.graph;
  const std::uint32_t n = g.n();
  if (k < 1) throw CannotPlant("k must be positive");
  if (static_cast<std::uint64_t>(k) * 10 > n) throw CannotPlant("k exceeds n/10");
  if (g.directed()) throw CannotPlant("planting targets undirected instances");
  if (g.degree_bound() < 3) throw CannotPlant("planting needs headroom: d >= 3");
  if (first_conflict(g)) throw CannotPlant("base instance must be valid");

  const auto ell = static_cast<std::uint32_t>(std::ceil(std::cbrt(static_cast<double>(n))));
  const std::uint32_t window = n / k;
  std::uint32_t wide = ell + 1;
  if (3ULL * wide + 6 > window) {
    if (kind == PlantKind::G) throw CannotPlant("windows too narrow for all-global gaps");
    // local kinds shrink their wide gaps; the <= ell gap keeps its type
    wide = window >= 12 ? (window - 6) / 3 : 2;
    if (wide < 2) throw CannotPlant("windows too narrow to plant");
  }

  Rng rng(derive_seed(seed, 0x9e7));
  std::vector<Label> parents = all_parent_labels(g);

  EditList edits;
  std::vector<ConflictingPair> planted;
  for (std::uint32_t i = 0; i < k; ++i) {
    Label lo = 1 + i * window;
    Label hi = lo + window - 1;
    // the window must be an isolated chain run: nbrs(x) within {x-1, x+1}
    for (Label x = lo; x <= hi; ++x) {
      for (VertexId nb : g.neighbors(g.vertex_of(x))) {
        Label l = g.label_of(nb);
        if (l + 1 != x && l != x + 1) {
          throw CannotPlant("window around label " + std::to_string(x) + " is not a plain chain");
        }
      }
    }

    std::uint32_t narrow = 1 + static_cast<std::uint32_t>(rng.below(std::min(ell, wide)));
    GapPlan gp{};
    switch (kind) {
      case PlantKind::L1:
        gp = {narrow, wide, wide};
        break;
      case PlantKind::L2:
        gp = {wide, narrow, wide};
        break;
      case PlantKind::L3:
        gp = {wide, wide, narrow};
        break;
      default:
        gp = {wide, wide, wide};
        break;
    }
    Label pv = lo + 1;
    Label u = pv + gp.g1;
    Label v = u + gp.g2;
    Label w = v + gp.g3;
    if (w > hi) throw CannotPlant("gap plan does not fit the window");

    // Reroute v's parent to pv, then add the conflicting interval {u, w}.
    edits.push_back(Edit{Edit::Delete, v - 1, v});
    edits.push_back(Edit{Edit::Insert, pv, v});
    edits.push_back(Edit{Edit::Insert, u, w});
    planted.push_back({v, u, w});
    (void)parents;
  }

  Instance out{apply_edits(g, edits), Family::Perturbed, base.meta};
  out.meta.seed = seed;
  out.meta.planted = planted;
  return out;
}

std::uint64_t farness_certificate(const Instance& inst) {
  std::uint64_t quadruples = 0;
  if (inst.family == Family::Bad) {
    for (std::size_t i = 0; i < inst.meta.arm_types.size(); ++i) {
      if (inst.meta.arm_types[i] != ArmType::B2) continue;
      std::uint32_t m = inst.meta.arm_sizes[i];
      std::uint32_t N = inst.meta.N;
      if (m > 7 * N) quadruples += std::min(N, m - 7 * N);
    }
  }
  std::uint64_t quad_bound = (quadruples + 1) / 2;
  std::uint64_t matching = conflict_matching(inst.graph).size();
  std::uint64_t matching_bound = (matching + 2) / 3;
  return std::max(quad_bound, matching_bound);
}

Verdict run_tester(TesterKind kind, GraphOracle& o, const TesterParams& p) {
  switch (kind) {
    case TesterKind::Combined:
      return test_combined(o, p);
    case TesterKind::Simple:
      return test_simple(o, p);
    case TesterKind::L1:
      return test_l1(o, p);
    case TesterKind::L2:
      return test_l2(o, p);
    case TesterKind::L3:
      return test_l3(o, p);
    default:
      return test_global(o, p);
  }
}

const char* tester_name(TesterKind kind) {
  switch (kind) {
    case TesterKind::Combined:
      return "combined";
    case TesterKind::Simple:
      return "simple";
    case TesterKind::L1:
      return "l1";
    case TesterKind::L2:
      return "l2";
    case TesterKind::L3:
      return "l3";
    default:
      return "global";
  }
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Good:
      return "good";
    case Family::Bad:
      return "bad";
    case Family::RandomValid:
      return "random-valid";
    default:
      return "perturbed";
  }
}

namespace {

std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  const double z = 1.959963984540054;  // 95%
  double p = static_cast<double>(successes) / trials;
  double z2 = z * z;
  double denom = 1.0 + z2 / trials;
  double center = (p + z2 / (2.0 * trials)) / denom;
  double half = z * std::sqrt(p * (1.0 - p) / trials + z2 / (4.0 * trials * trials)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

}  // namespace

GameResult distinguisher_game(TesterKind tester, std::uint32_t n, std::uint32_t N,
                              std::uint64_t budget, std::uint64_t trials, std::uint64_t seed,
                              const TesterParams& params) {
  GameResult res;
  res.trials = trials;
  std::vector<std::uint8_t> wins(trials, 0);
  parallel_for(trials, [&](std::uint64_t t) {
    std::uint64_t ts = derive_seed(seed, t);
    Rng trial_rng(ts);
    bool b = trial_rng.coin();
    Instance inst = b ? gen_bad(n, N, derive_seed(ts, 1)) : gen_good(n, N, derive_seed(ts, 1));

    // Labels keep their meaning; ids are shuffled so nothing leaks through them.
    std::vector<VertexId> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::uint32_t i = n; i > 1; --i) {
      std::swap(perm[i], perm[1 + trial_rng.below(i)]);
    }
    LabeledGraph shuffled = inst.graph.permute_ids(perm);

    GraphOracle oracle(shuffled, derive_seed(ts, 2), budget);
    TesterParams p = params;
    p.seed = derive_seed(ts, 2);
    bool guessed_bad;
    try {
      Verdict v = run_tester(tester, oracle, p);
      guessed_bad = !v.accepted;
    } catch (const BudgetExhausted&) {
      guessed_bad = false;  // out of budget, accept
    }
    wins[t] = guessed_bad == b;
  });
  for (std::uint8_t w : wins) res.successes += w;
  res.rate = trials ? static_cast<double>(res.successes) / trials : 0.0;
  auto [lo, hi] = wilson_interval(res.successes, trials);
  res.wilson_low = lo;
  res.wilson_high = hi;
  return res;
}

}  // namespace dfscert
