#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dfscert/errors.hpp"

namespace dfscert {

// Vertices are ids in [1, n]; labels are a bijection onto [1, n].
// Label 0 is reserved for the virtual parent of orphans.
using VertexId = std::uint32_t;
using Label = std::uint32_t;

constexpr Label kVirtualParent = 0;

using LabelEdge = std::pair<Label, Label>;

struct Edit {
  enum Kind : std::uint8_t { Insert, Delete };
  Kind kind;
  Label u;  // for directed graphs: tail
  Label w;  // head
  bool operator==(const Edit&) const = default;
};

using EditList = std::vector<Edit>;

// A conflicting pair (v, {u, w}) with p(v) < u < v < w, all in label space.
struct ConflictingPair {
  Label v;
  Label u;
  Label w;
  bool operator==(const ConflictingPair&) const = default;
  auto operator<=>(const ConflictingPair&) const = default;
};

// Immutable bounded-degree graph with a bijective vertex labeling.
// Adjacency is sorted ascending by neighbor id so oracle replies replay
// deterministically. Directed graphs keep separate in/out adjacency.
class LabeledGraph {
 public:
  // edges are given as label pairs; labels[i] is the label of vertex id i+1.
  static LabeledGraph build(std::uint32_t n, std::uint32_t d,
                            const std::vector<LabelEdge>& edges,
                            const std::vector<Label>& labels, bool directed = false);

  // Same, but edges reference vertex ids directly (the on-disk layout).
  static LabeledGraph build_by_id(std::uint32_t n, std::uint32_t d,
                                  const std::vector<std::pair<VertexId, VertexId>>& edges,
                                  const std::vector<Label>& labels, bool directed = false);

  std::uint32_t n() const { return n_; }
  std::uint32_t degree_bound() const { return d_; }
  bool directed() const { return directed_; }
  std::size_t edge_count() const { return edge_count_; }

  Label label_of(VertexId v) const { return labels_[v]; }

  // Inverse lookup. Exact algorithms only; the query model has no such op
  // and oracle code never calls it.
  VertexId vertex_of(Label l) const { return inverse_[l]; }

  std::span<const VertexId> neighbors(VertexId v) const { return slice(adj_, adj_off_, v); }
  std::span<const VertexId> out_neighbors(VertexId v) const { return slice(out_, out_off_, v); }
  std::span<const VertexId> in_neighbors(VertexId v) const { return slice(in_, in_off_, v); }

  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(adj_off_[v + 1] - adj_off_[v]);
  }
  std::uint32_t out_degree(VertexId v) const {
    return static_cast<std::uint32_t>(out_off_[v + 1] - out_off_[v]);
  }
  std::uint32_t in_degree(VertexId v) const {
    return static_cast<std::uint32_t>(in_off_[v + 1] - in_off_[v]);
  }

  // i-th neighbor, 1-based slot; nullopt when degree < i.
  std::optional<VertexId> neighbor_slot(VertexId v, std::uint32_t i) const;
  std::optional<VertexId> out_neighbor_slot(VertexId v, std::uint32_t i) const;
  std::optional<VertexId> in_neighbor_slot(VertexId v, std::uint32_t i) const;

  // Edge presence in label space. For directed graphs (u, w) means u -> w.
  bool has_edge(Label u, Label w) const;

  // Canonical edge list in label space: undirected pairs with u < w sorted
  // lexicographically; directed pairs (tail, head) sorted the same way.
  std::vector<LabelEdge> edge_labels() const;

  // Edge list in id space with u < v for undirected edges, sorted.
  std::vector<std::pair<VertexId, VertexId>> edge_ids() const;

  // Copy with vertex ids permuted: new id = perm[old id]. Labels follow
  // their vertices; the labeled graph is unchanged up to id renaming.
  LabeledGraph permute_ids(const std::vector<VertexId>& perm) const;

 private:
  static std::span<const VertexId> slice(const std::vector<VertexId>& flat,
                                         const std::vector<std::size_t>& off, VertexId v) {
    return {flat.data() + off[v], off[v + 1] - off[v]};
  }

  std::uint32_t n_ = 0;
  std::uint32_t d_ = 0;
  bool directed_ = false;
  std::size_t edge_count_ = 0;
  std::vector<Label> labels_;     // index by id, [1, n]
  std::vector<VertexId> inverse_;  // index by label, [1, n]
  // undirected adjacency (empty when directed)
  std::vector<std::size_t> adj_off_;
  std::vector<VertexId> adj_;
  // directed adjacency (empty when undirected)
  std::vector<std::size_t> out_off_, in_off_;
  std::vector<VertexId> out_, in_;
};

// p(v): largest neighbor label below v, or 0. Directed graphs use
// in-neighbors only.
Label parent_label(const LabeledGraph& g, Label v);

// p(v) for every v, index by label; [0] unused.
std::vector<Label> all_parent_labels(const LabeledGraph& g);

// true iff p(v) < min(e) < v < max(e). Throws EdgeNotPresent if e is no edge.
bool is_conflicting_pair(const LabeledGraph& g, Label v, LabelEdge e);

// All conflicting pairs in (v, u, w) lexicographic order. Output sensitive.
std::vector<ConflictingPair> enumerate_conflicts(const LabeledGraph& g);

// Lexicographically first conflicting pair, if any. O((n + m) log n).
std::optional<ConflictingPair> first_conflict(const LabeledGraph& g);

// Maximum matching in the bipartite conflict graph (vertices vs. edges),
// by augmenting paths. Pairs are mutually vertex- and edge-disjoint.
std::vector<ConflictingPair> conflict_matching(const LabeledGraph& g);

// Applies an edit list. Unless `transitional`, the result must respect the
// degree bound (DegreeBoundExceeded otherwise). `bound_override` replaces
// the declared bound of the result.
LabeledGraph apply_edits(const LabeledGraph& g, const EditList& edits, bool transitional = false,
                         std::optional<std::uint32_t> bound_override = std::nullopt);

}  // namespace dfscert
