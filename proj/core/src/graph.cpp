#include "dfscert/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace dfscert {

namespace {

void check_vertex_range(VertexId v, std::uint32_t n) {
  if (v < 1 || v > n) {
    throw VertexOutOfRange("vertex id " + std::to_string(v) + " not in [1, " + std::to_string(n) + "]");
  }
}

std::vector<std::size_t> offsets_from_degrees(std::uint32_t n, const std::vector<std::uint32_t>& deg) {
  std::vector<std::size_t> off(n + 2, 0);
  for (VertexId v = 1; v <= n; ++v) off[v + 1] = off[v] + deg[v];
  return off;
}

}  // namespace

LabeledGraph LabeledGraph::build_by_id(std::uint32_t n, std::uint32_t d,
                                       const std::vector<std::pair<VertexId, VertexId>>& edges,
                                       const std::vector<Label>& labels, bool directed) {
  if (n < 1) throw VertexOutOfRange("n must be at least 1");
  if (labels.size() != n) {
    throw NonBijectiveLabels("expected " + std::to_string(n) + " labels, got " +
                             std::to_string(labels.size()));
  }

  LabeledGraph g;
  g.n_ = n;
  g.d_ = d;
  g.directed_ = directed;

  g.labels_.assign(n + 1, 0);
  g.inverse_.assign(n + 1, 0);
  for (VertexId v = 1; v <= n; ++v) {
    Label l = labels[v - 1];
    if (l < 1 || l > n) throw NonBijectiveLabels("label " + std::to_string(l) + " out of [1, n]");
    if (g.inverse_[l] != 0) throw NonBijectiveLabels("label " + std::to_string(l) + " repeats");
    g.labels_[v] = l;
    g.inverse_[l] = v;
  }

  // Normalize, validate, and count degrees.
  std::vector<std::pair<VertexId, VertexId>> seen;
  seen.reserve(edges.size());
  std::vector<std::uint32_t> deg(n + 1, 0), indeg(n + 1, 0);
  for (auto [a, b] : edges) {
    check_vertex_range(a, n);
    check_vertex_range(b, n);
    if (a == b) throw SelfLoop("self loop at vertex " + std::to_string(a));
    std::pair<VertexId, VertexId> key =
        directed ? std::pair{a, b} : std::pair{std::min(a, b), std::max(a, b)};
    seen.push_back(key);
    if (directed) {
      ++deg[a];
      ++indeg[b];
    } else {
      ++deg[a];
      ++deg[b];
    }
  }
  std::sort(seen.begin(), seen.end());
  if (auto dup = std::adjacent_find(seen.begin(), seen.end()); dup != seen.end()) {
    throw DuplicateEdge("duplicate edge {" + std::to_string(dup->first) + "," +
                        std::to_string(dup->second) + "}");
  }
  for (VertexId v = 1; v <= n; ++v) {
    std::uint32_t worst = directed ? std::max(deg[v], indeg[v]) : deg[v];
    if (worst > d) {
      throw DegreeBoundExceeded("vertex " + std::to_string(v) + " has degree " +
                                std::to_string(worst) + " > d = " + std::to_string(d));
    }
  }
  g.edge_count_ = seen.size();

  if (directed) {
    g.out_off_ = offsets_from_degrees(n, deg);
    g.in_off_ = offsets_from_degrees(n, indeg);
    g.out_.resize(g.out_off_[n + 1]);
    g.in_.resize(g.in_off_[n + 1]);
    std::vector<std::size_t> op(g.out_off_.begin(), g.out_off_.end());
    std::vector<std::size_t> ip(g.in_off_.begin(), g.in_off_.end());
    for (auto [a, b] : seen) {
      g.out_[op[a]++] = b;
      g.in_[ip[b]++] = a;
    }
    for (VertexId v = 1; v <= n; ++v) {
      std::sort(g.out_.begin() + g.out_off_[v], g.out_.begin() + g.out_off_[v + 1]);
      std::sort(g.in_.begin() + g.in_off_[v], g.in_.begin() + g.in_off_[v + 1]);
    }
    g.adj_off_.assign(n + 2, 0);
  } else {
    g.adj_off_ = offsets_from_degrees(n, deg);
    g.adj_.resize(g.adj_off_[n + 1]);
    std::vector<std::size_t> ap(g.adj_off_.begin(), g.adj_off_.end());
    for (auto [a, b] : seen) {
      g.adj_[ap[a]++] = b;
      g.adj_[ap[b]++] = a;
    }
    for (VertexId v = 1; v <= n; ++v) {
      std::sort(g.adj_.begin() + g.adj_off_[v], g.adj_.begin() + g.adj_off_[v + 1]);
    }
    g.out_off_.assign(n + 2, 0);
    g.in_off_.assign(n + 2, 0);
  }
  return g;
}

LabeledGraph LabeledGraph::build(std::uint32_t n, std::uint32_t d,
                                 const std::vector<LabelEdge>& edges,
                                 const std::vector<Label>& labels, bool directed) {
  if (labels.size() != n) {
    throw NonBijectiveLabels("expected " + std::to_string(n) + " labels, got " +
                             std::to_string(labels.size()));
  }
  std::vector<VertexId> inv(n + 1, 0);
  for (VertexId v = 1; v <= n; ++v) {
    Label l = labels[v - 1];
    if (l < 1 || l > n) throw NonBijectiveLabels("label " + std::to_string(l) + " out of [1, n]");
    if (inv[l] != 0) throw NonBijectiveLabels("label " + std::to_string(l) + " repeats");
    inv[l] = v;
  }
  std::vector<std::pair<VertexId, VertexId>> id_edges;
  id_edges.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw VertexOutOfRange("edge label {" + std::to_string(a) + "," + std::to_string(b) +
                             "} not in [1, n]");
    }
    id_edges.emplace_back(inv[a], inv[b]);
  }
  return build_by_id(n, d, id_edges, labels, directed);
}

std::optional<VertexId> LabeledGraph::neighbor_slot(VertexId v, std::uint32_t i) const {
  auto ns = neighbors(v);
  if (i < 1 || i > ns.size()) return std::nullopt;
  return ns[i - 1];
}

std::optional<VertexId> LabeledGraph::out_neighbor_slot(VertexId v, std::uint32_t i) const {
  auto ns = out_neighbors(v);
  if (i < 1 || i > ns.size()) return std::nullopt;
  return ns[i - 1];
}

std::optional<VertexId> LabeledGraph::in_neighbor_slot(VertexId v, std::uint32_t i) const {
  auto ns = in_neighbors(v);
  if (i < 1 || i > ns.size()) return std::nullopt;
  return ns[i - 1];
}

bool LabeledGraph::has_edge(Label u, Label w) const {
  if (u < 1 || u > n_ || w < 1 || w > n_ || u == w) return false;
  VertexId a = vertex_of(u), b = vertex_of(w);
  auto ns = directed_ ? out_neighbors(a) : neighbors(a);
  return std::binary_search(ns.begin(), ns.end(), b);
}

std::vector<LabelEdge> LabeledGraph::edge_labels() const {
  std::vector<LabelEdge> out;
  out.reserve(edge_count_);
  for (VertexId v = 1; v <= n_; ++v) {
    if (directed_) {
      for (VertexId w : out_neighbors(v)) out.emplace_back(labels_[v], labels_[w]);
    } else {
      for (VertexId w : neighbors(v)) {
        if (v < w) {
          auto [a, b] = std::minmax(labels_[v], labels_[w]);
          out.emplace_back(a, b);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<VertexId, VertexId>> LabeledGraph::edge_ids() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count_);
  for (VertexId v = 1; v <= n_; ++v) {
    if (directed_) {
      for (VertexId w : out_neighbors(v)) out.emplace_back(v, w);
    } else {
      for (VertexId w : neighbors(v)) {
        if (v < w) out.emplace_back(v, w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledGraph LabeledGraph::permute_ids(const std::vector<VertexId>& perm) const {
  std::vector<Label> labels(n_);
  for (VertexId v = 1; v <= n_; ++v) labels[perm[v] - 1] = labels_[v];
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(edge_count_);
  for (auto [a, b] : edge_ids()) edges.emplace_back(perm[a], perm[b]);
  return build_by_id(n_, d_, edges, labels, directed_);
}

Label parent_label(const LabeledGraph& g, Label v) {
  VertexId x = g.vertex_of(v);
  Label best = kVirtualParent;
  auto ns = g.directed() ? g.in_neighbors(x) : g.neighbors(x);
  for (VertexId nb : ns) {
    Label l = g.label_of(nb);
    if (l < v && l > best) best = l;
  }
  return best;
}

std::vector<Label> all_parent_labels(const LabeledGraph& g) {
  std::vector<Label> p(g.n() + 1, kVirtualParent);
  for (Label v = 1; v <= g.n(); ++v) p[v] = parent_label(g, v);
  return p;
}

bool is_conflicting_pair(const LabeledGraph& g, Label v, LabelEdge e) {
  auto [a, b] = std::minmax(e.first, e.second);
  bool present = g.directed() ? g.has_edge(e.first, e.second) : g.has_edge(a, b);
  if (!present) {
    throw EdgeNotPresent("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                         "} not in graph");
  }
  if (g.directed() && e.first > e.second) return false;  // only forward arcs span an interval
  return parent_label(g, v) < a && a < v && v < b;
}

namespace {

// Conflict intervals of g: for undirected graphs every edge as {min, max};
// for directed graphs only arcs u -> w with u < w (others cannot conflict).
std::vector<LabelEdge> conflict_intervals(const LabeledGraph& g) {
  std::vector<LabelEdge> es = g.edge_labels();
  if (g.directed()) {
    std::erase_if(es, [](const LabelEdge& e) { return e.first > e.second; });
  }
  return es;
}

}  // namespace

std::vector<ConflictingPair> enumerate_conflicts(const LabeledGraph& g) {
  const std::uint32_t n = g.n();
  std::vector<Label> p = all_parent_labels(g);

  // Vertices sorted by p(v); activated into an ordered set once the edge
  // sweep passes their parent.
  std::vector<Label> by_parent(n);
  for (Label v = 1; v <= n; ++v) by_parent[v - 1] = v;
  std::sort(by_parent.begin(), by_parent.end(),
            [&](Label a, Label b) { return p[a] < p[b]; });

  std::vector<LabelEdge> es = conflict_intervals(g);
  std::sort(es.begin(), es.end());

  std::vector<ConflictingPair> out;
  std::set<Label> active;
  std::size_t next = 0;
  for (auto [u, w] : es) {
    while (next < by_parent.size() && p[by_parent[next]] < u) active.insert(by_parent[next++]);
    for (auto it = active.upper_bound(u); it != active.end() && *it < w; ++it) {
      out.push_back({*it, u, w});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Max-over-point segment tree answering "leftmost index in [lo, hi] whose
// value exceeds x"; backs the lexicographically-first conflict search.
class MaxTree {
 public:
  explicit MaxTree(std::uint32_t n) : n_(n), val_(2 * size_up(n), 0) {}

  void update(std::uint32_t i, Label v) {
    std::uint32_t k = i + half();
    if (v <= val_[k]) return;
    val_[k] = v;
    for (k >>= 1; k >= 1; k >>= 1) val_[k] = std::max(val_[2 * k], val_[2 * k + 1]);
  }

  // leftmost i in [lo, hi] with value > x, or 0 if none
  std::uint32_t leftmost_above(std::uint32_t lo, std::uint32_t hi, Label x) const {
    if (lo > hi) return 0;
    return descend(1, 0, half() - 1, lo, hi, x);
  }

 private:
  static std::uint32_t size_up(std::uint32_t n) {
    std::uint32_t s = 1;
    while (s < n + 1) s <<= 1;
    return s;
  }
  std::uint32_t half() const { return static_cast<std::uint32_t>(val_.size() / 2); }

  std::uint32_t descend(std::uint32_t node, std::uint32_t l, std::uint32_t r, std::uint32_t lo,
                        std::uint32_t hi, Label x) const {
    if (r < lo || hi < l || val_[node] <= x) return 0;
    if (l == r) return l;
    std::uint32_t mid = l + (r - l) / 2;
    std::uint32_t left = descend(2 * node, l, mid, lo, hi, x);
    if (left != 0) return left;
    return descend(2 * node + 1, mid + 1, r, lo, hi, x);
  }

  std::uint32_t n_;
  std::vector<Label> val_;
};

}  // namespace

std::optional<ConflictingPair> first_conflict(const LabeledGraph& g) {
  const std::uint32_t n = g.n();
  std::vector<Label> p = all_parent_labels(g);
  std::vector<LabelEdge> es = conflict_intervals(g);

  // max_w[u] = largest w over edges {u, w} with u < w
  MaxTree tree(n);
  std::vector<std::vector<Label>> w_at(n + 1);
  for (auto [u, w] : es) {
    tree.update(u, w);
    w_at[u].push_back(w);
  }
  for (auto& ws : w_at) std::sort(ws.begin(), ws.end());

  for (Label v = 1; v <= n; ++v) {
    if (v < 2 || p[v] + 1 > v - 1) continue;
    std::uint32_t u = tree.leftmost_above(p[v] + 1, v - 1, v);
    if (u == 0) continue;
    auto it = std::upper_bound(w_at[u].begin(), w_at[u].end(), v);
    return ConflictingPair{v, u, *it};
  }
  return std::nullopt;
}

std::vector<ConflictingPair> conflict_matching(const LabeledGraph& g) {
  std::vector<ConflictingPair> conflicts = enumerate_conflicts(g);
  if (conflicts.empty()) return {};

  // Compress the two sides of the conflict graph.
  std::vector<Label> verts;
  std::vector<LabelEdge> edges;
  for (const auto& c : conflicts) {
    verts.push_back(c.v);
    edges.emplace_back(c.u, c.w);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  auto vert_index = [&](Label v) {
    return static_cast<std::uint32_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  auto edge_index = [&](const LabelEdge& e) {
    return static_cast<std::uint32_t>(std::lower_bound(edges.begin(), edges.end(), e) - edges.begin());
  };

  std::vector<std::vector<std::uint32_t>> adj(verts.size());
  for (const auto& c : conflicts) adj[vert_index(c.v)].push_back(edge_index({c.u, c.w}));

  const std::uint32_t kFree = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> match_v(verts.size(), kFree), match_e(edges.size(), kFree);

  // Greedy seed, then Kuhn's augmenting search.
  for (std::uint32_t i = 0; i < verts.size(); ++i) {
    for (std::uint32_t e : adj[i]) {
      if (match_e[e] == kFree) {
        match_e[e] = i;
        match_v[i] = e;
        break;
      }
    }
  }
  std::vector<std::uint32_t> visited(edges.size(), 0);
  std::uint32_t stamp = 0;
  auto augment = [&](auto&& self, std::uint32_t i) -> bool {
    for (std::uint32_t e : adj[i]) {
      if (visited[e] == stamp) continue;
      visited[e] = stamp;
      if (match_e[e] == kFree || self(self, match_e[e])) {
        match_e[e] = i;
        match_v[i] = e;
        return true;
      }
    }
    return false;
  };
  for (std::uint32_t i = 0; i < verts.size(); ++i) {
    if (match_v[i] != kFree) continue;
    ++stamp;
    augment(augment, i);
  }

  std::vector<ConflictingPair> out;
  for (std::uint32_t i = 0; i < verts.size(); ++i) {
    if (match_v[i] != kFree) {
      out.push_back({verts[i], edges[match_v[i]].first, edges[match_v[i]].second});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledGraph apply_edits(const LabeledGraph& g, const EditList& edits, bool transitional,
                         std::optional<std::uint32_t> bound_override) {
  std::set<LabelEdge> es;
  for (auto e : g.edge_labels()) es.insert(e);
  for (const Edit& ed : edits) {
    LabelEdge key = g.directed() ? LabelEdge{ed.u, ed.w}
                                 : LabelEdge{std::min(ed.u, ed.w), std::max(ed.u, ed.w)};
    if (ed.kind == Edit::Insert) {
      if (!es.insert(key).second) {
        throw DuplicateEdge("edit inserts existing edge {" + std::to_string(ed.u) + "," +
                            std::to_string(ed.w) + "}");
      }
    } else {
      if (es.erase(key) == 0) {
        throw EdgeNotPresent("edit deletes missing edge {" + std::to_string(ed.u) + "," +
                             std::to_string(ed.w) + "}");
      }
    }
  }
  std::uint32_t bound = bound_override.value_or(g.degree_bound());
  if (transitional) {
    std::vector<std::uint32_t> deg(g.n() + 1, 0), indeg(g.n() + 1, 0);
    for (auto [a, b] : es) {
      if (g.directed()) {
        ++deg[g.vertex_of(a)];
        ++indeg[g.vertex_of(b)];
      } else {
        ++deg[g.vertex_of(a)];
        ++deg[g.vertex_of(b)];
      }
    }
    std::uint32_t worst = 0;
    for (VertexId v = 1; v <= g.n(); ++v) worst = std::max({worst, deg[v], indeg[v]});
    bound = std::max(bound, worst);
  }
  std::vector<Label> labels(g.n());
  for (VertexId v = 1; v <= g.n(); ++v) labels[v - 1] = g.label_of(v);
  return LabeledGraph::build(g.n(), bound, {es.begin(), es.end()}, labels, g.directed());
}

}  // namespace dfscert
