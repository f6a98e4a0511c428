#include "dfscert/tester.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dfscert/exact.hpp"
#include "dfscert/navigator.hpp"

namespace dfscert {

ResolvedParams resolve_params(const TesterParams& p, std::uint32_t n, std::uint32_t d) {
  ResolvedParams rp;
  const double eps = p.epsilon;
  rp.ell = p.ell != 0 ? p.ell
                      : static_cast<std::uint32_t>(std::ceil(std::cbrt(static_cast<double>(n))));
  rp.ell = std::max<std::uint32_t>(rp.ell, 1);

  rp.vertex_samples = static_cast<std::uint64_t>(std::ceil(p.c_local / eps));
  rp.edge_samples = static_cast<std::uint64_t>(std::ceil(p.c_local * static_cast<double>(d) / eps));

  double c_global = p.c_global != 0
                        ? static_cast<double>(p.c_global)
                        : std::ceil(10.0 * std::sqrt(200.0 * static_cast<double>(d)));
  double formula = std::ceil(c_global * std::sqrt(static_cast<double>(n) / rp.ell) / eps);
  double cube = std::pow(static_cast<double>(d) / eps, 3.0);
  rp.global_cube_branch = cube > formula;
  rp.global_samples = static_cast<std::uint64_t>(std::max(formula, cube));

  rp.nav_call_cap = 4ULL * d * d * rp.ell;
  rp.nominal = (2 * rp.vertex_samples + rp.edge_samples) * rp.ell +
               2 * rp.global_samples * (d + 1ULL);
  rp.hard_cap = p.budget_factor * (3 * rp.edge_samples * rp.nav_call_cap +
                                   2 * rp.global_samples * (d + 1ULL));
  return rp;
}

ConflictType classify_conflict(const LabeledGraph& g, const ConflictingPair& c, std::uint32_t ell) {
  Label pv = parent_label(g, c.v);
  ConflictType t;
  t.l1 = pv != kVirtualParent && c.u - pv <= ell;
  t.l2 = c.v - c.u <= ell;
  t.l3 = c.w - c.v <= ell;
  return t;
}

namespace {

Direction w_check_dir(const GraphOracle& o) {
  return o.directed() ? Direction::Out : Direction::Undirected;
}

// Largest label over v's neighborhood (out-neighbors when directed).
Label max_neighbor_label(GraphOracle& o, VertexId v) {
  Label best = 0;
  for (std::uint32_t i = 1; i <= o.degree_bound(); ++i) {
    auto w = o.neighbor_query(v, i, w_check_dir(o));
    if (!w) break;
    best = std::max(best, o.label_query(*w));
  }
  return best;
}

}  // namespace

Verdict walk_from_parent(GraphOracle& o, VertexId v, const ResolvedParams& rp) {
  Label label_v = o.label_query(v);
  auto [p_label, p_vertex] = probe_parent(o, v);
  if (p_label == kVirtualParent) return Verdict::accept();

  std::uint64_t steps = std::min<std::uint64_t>(rp.ell, label_v - p_label);
  VertexId cur = p_vertex;
  Label cur_label = p_label;
  for (std::uint64_t t = 0; t < steps; ++t) {
    NavResult res = dfs_next(o, cur, rp.nav_call_cap);
    if (res.kind == NavResult::Inconsistent) return Verdict::accept();
    if (res.kind == NavResult::EndOfComponent) {
      // v lies beyond cur in the same component, so the walk cannot end here
      if (o.directed()) return Verdict::accept();
      return Verdict::reject(OrderViolation{cur, true});
    }
    Label next_label = o.label_query(res.vertex);
    if (next_label != cur_label + 1) return Verdict::reject(OrderViolation{cur, true});
    if (next_label == label_v) return Verdict::accept();  // reached v, no conflict
    Label big = max_neighbor_label(o, res.vertex);
    if (big > label_v) return Verdict::reject(ConflictingPair{label_v, next_label, big});
    cur = res.vertex;
    cur_label = next_label;
  }
  return Verdict::accept();
}

Verdict walk_backwards_from_vertex(GraphOracle& o, VertexId v, const ResolvedParams& rp) {
  Label label_v = o.label_query(v);
  auto [p_label, p_vertex] = probe_parent(o, v);
  (void)p_vertex;

  VertexId cur = v;
  Label cur_label = label_v;
  for (std::uint64_t t = 0; t < rp.ell; ++t) {
    NavResult res = dfs_prev(o, cur, rp.nav_call_cap);
    if (res.kind == NavResult::Inconsistent) return Verdict::accept();
    if (res.kind == NavResult::EndOfComponent) {
      if (p_label == kVirtualParent || o.directed()) return Verdict::accept();
      // p(v) < cur lives in the same component, the walk cannot be done
      return Verdict::reject(OrderViolation{cur, false});
    }
    Label next_label = o.label_query(res.vertex);
    if (next_label != cur_label - 1) return Verdict::reject(OrderViolation{cur, false});
    if (next_label <= p_label) return Verdict::accept();  // left the window (p(v), v)
    Label big = max_neighbor_label(o, res.vertex);
    if (big > label_v) return Verdict::reject(ConflictingPair{label_v, next_label, big});
    cur = res.vertex;
    cur_label = next_label;
  }
  return Verdict::accept();
}

Verdict walk_backwards_from_edge(GraphOracle& o, VertexId w_vertex, Label u_label, Label w_label,
                                 const ResolvedParams& rp) {
  VertexId cur = w_vertex;
  Label cur_label = w_label;
  for (std::uint64_t t = 0; t < rp.ell; ++t) {
    NavResult res = dfs_prev(o, cur, rp.nav_call_cap);
    if (res.kind == NavResult::Inconsistent) return Verdict::accept();
    if (res.kind == NavResult::EndOfComponent) {
      if (o.directed()) return Verdict::accept();
      // u < cur_label is in w's component via the sampled edge
      return Verdict::reject(OrderViolation{cur, false});
    }
    Label next_label = o.label_query(res.vertex);
    if (next_label != cur_label - 1) return Verdict::reject(OrderViolation{cur, false});
    if (next_label <= u_label) return Verdict::accept();
    // candidate middle vertex of (v, {u, w})
    auto [pv, pvx] = probe_parent(o, res.vertex);
    (void)pvx;
    if (pv < u_label) return Verdict::reject(ConflictingPair{next_label, u_label, w_label});
    cur = res.vertex;
    cur_label = next_label;
  }
  return Verdict::accept();
}

namespace {

// Runs one probe, treating an exhausted budget as probe acceptance.
template <typename Fn>
std::optional<Verdict> probe(Fn&& fn) {
  try {
    Verdict v = fn();
    if (!v.accepted) return v;
    return std::nullopt;
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
}

}  // namespace

Verdict test_l1(GraphOracle& o, const TesterParams& p) {
  ResolvedParams rp = resolve_params(p, o.n(), o.degree_bound());
  for (std::uint64_t i = 0; i < rp.vertex_samples; ++i) {
    VertexId v = o.sample_vertex();
    if (auto r = probe([&] { return walk_from_parent(o, v, rp); })) return *r;
  }
  return Verdict::accept();
}

Verdict test_l2(GraphOracle& o, const TesterParams& p) {
  ResolvedParams rp = resolve_params(p, o.n(), o.degree_bound());
  for (std::uint64_t i = 0; i < rp.vertex_samples; ++i) {
    VertexId v = o.sample_vertex();
    if (auto r = probe([&] { return walk_backwards_from_vertex(o, v, rp); })) return *r;
  }
  return Verdict::accept();
}

Verdict test_l3(GraphOracle& o, const TesterParams& p) {
  ResolvedParams rp = resolve_params(p, o.n(), o.degree_bound());
  for (std::uint64_t i = 0; i < rp.edge_samples; ++i) {
    std::optional<Verdict> r = probe([&]() -> Verdict {
      SampledEdge e = o.sample_edge();  // EmptyGraph propagates to the caller
      if (e.label_a > e.label_b) {
        if (o.directed()) return Verdict::accept();  // backward arc, no interval
        std::swap(e.a, e.b);
        std::swap(e.label_a, e.label_b);
      }
      return walk_backwards_from_edge(o, e.b, e.label_a, e.label_b, rp);
    });
    if (r) return *r;
  }
  return Verdict::accept();
}

Verdict test_global(GraphOracle& o, const TesterParams& p) {
  ResolvedParams rp = resolve_params(p, o.n(), o.degree_bound());
  std::vector<std::pair<Label, Label>> vertex_intervals;
  std::vector<LabelEdge> edge_intervals;
  try {
    for (std::uint64_t i = 0; i < rp.global_samples; ++i) {
      VertexId v = o.sample_vertex();
      Label lv = o.label_query(v);
      auto [pl, pvx] = probe_parent(o, v);
      (void)pvx;
      vertex_intervals.emplace_back(pl, lv);
    }
    for (std::uint64_t i = 0; i < rp.global_samples; ++i) {
      SampledEdge e;
      try {
        e = o.sample_edge();
      } catch (const EmptyGraph&) {
        break;  // tolerated: vertex intervals alone can still conflict
      }
      auto [a, b] = std::minmax(e.label_a, e.label_b);
      if (o.directed() && e.label_a > e.label_b) continue;
      edge_intervals.emplace_back(a, b);
    }
  } catch (const BudgetExhausted&) {
    // keep whatever was collected; the sweep itself is query free
  }
  if (auto c = sweepline_conflicts(std::move(vertex_intervals), std::move(edge_intervals))) {
    return Verdict::reject(*c);
  }
  return Verdict::accept();
}

namespace {

// Reads the whole graph through the oracle and decides exactly.
Verdict exact_fallback(GraphOracle& o) {
  const std::uint32_t n = o.n(), d = o.degree_bound();
  std::vector<Label> labels(n);
  for (VertexId v = 1; v <= n; ++v) labels[v - 1] = o.label_query(v);
  std::vector<std::pair<VertexId, VertexId>> edges;
  const Direction dir = o.directed() ? Direction::Out : Direction::Undirected;
  for (VertexId v = 1; v <= n; ++v) {
    for (std::uint32_t i = 1; i <= d; ++i) {
      auto w = o.neighbor_query(v, i, dir);
      if (!w) break;
      if (o.directed() || v < *w) edges.emplace_back(v, *w);
    }
  }
  // A reversing oracle hands out the reversed labels, so the rebuilt graph
  // is already the reversed instance and the plain check applies.
  LabeledGraph copy = LabeledGraph::build_by_id(n, d, edges, labels, o.directed());
  return check_by_conflicts(copy);
}

}  // namespace

Verdict test_combined(GraphOracle& o, const TesterParams& p) {
  const std::uint32_t n = o.n(), d = o.degree_bound();
  ResolvedParams rp = resolve_params(p, n, d);

  if (p.allow_fallback && rp.nominal >= static_cast<std::uint64_t>(d) * n) {
    return exact_fallback(o);
  }

  o.tighten_budget(o.used() + rp.hard_cap);
  Verdict v = test_l1(o, p);
  if (!v.accepted) return v;
  v = test_l2(o, p);
  if (!v.accepted) return v;
  try {
    v = test_l3(o, p);
  } catch (const EmptyGraph&) {
    v = Verdict::accept();  // no edges, no conflicting pairs to find
  }
  if (!v.accepted) return v;
  return test_global(o, p);
}

Verdict test_simple(GraphOracle& o, const TesterParams& p) {
  const std::uint32_t n = o.n(), d = o.degree_bound();
  auto s = static_cast<std::uint64_t>(
      std::ceil(p.c_simple * std::sqrt(static_cast<double>(n) / p.epsilon)));
  s = std::max<std::uint64_t>(s, 1);
  o.tighten_budget(o.used() + p.budget_factor * (2 * s * (2ULL * d + 4)));

  std::vector<std::pair<Label, Label>> vertex_intervals;
  std::vector<LabelEdge> edge_intervals;
  try {
    for (std::uint64_t i = 0; i < s; ++i) {
      VertexId v = o.sample_vertex();
      Label lv = o.label_query(v);
      auto [pl, pvx] = probe_parent(o, v);
      (void)pvx;
      vertex_intervals.emplace_back(pl, lv);
    }
    for (std::uint64_t i = 0; i < s; ++i) {
      SampledEdge e;
      try {
        e = o.sample_edge();
      } catch (const EmptyGraph&) {
        break;
      }
      auto [a, b] = std::minmax(e.label_a, e.label_b);
      if (o.directed() && e.label_a > e.label_b) continue;
      edge_intervals.emplace_back(a, b);
    }
  } catch (const BudgetExhausted&) {
  }
  if (auto c = sweepline_conflicts(std::move(vertex_intervals), std::move(edge_intervals))) {
    return Verdict::reject(*c);
  }
  return Verdict::accept();
}

Verdict test_fin(GraphOracle& o, const TesterParams& p) {
  if (o.directed()) throw DirectedUnsupported("FIN testing is undirected only");
  if (!o.reversed()) {
    throw InvalidInput("test_fin expects an oracle built with reverse_labels = true");
  }
  return test_combined(o, p);
}

}  // namespace dfscert
