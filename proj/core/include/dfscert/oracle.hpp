#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "dfscert/graph.hpp"
#include "dfscert/rng.hpp"

namespace dfscert {

struct QueryCounter {
  std::uint64_t neighbor_queries = 0;
  std::uint64_t label_queries = 0;
  std::uint64_t total() const { return neighbor_queries + label_queries; }
};

enum class Direction { Undirected, Out, In };

struct SampledEdge {
  VertexId a;
  VertexId b;
  Label label_a;
  Label label_b;
};

// Query-counted access to a hidden labeled graph: the i-th-neighbor query
// and the label query, nothing else. Vertex ids are public, so drawing a
// uniform vertex is free; there is deliberately no label-to-vertex lookup.
//
// With `reverse_labels` every label answer x becomes n+1-x, which turns a
// FIN-numbering question into a DFS-numbering question over the same graph.
class GraphOracle {
 public:
  GraphOracle(const LabeledGraph& g, std::uint64_t seed,
              std::optional<std::uint64_t> budget = std::nullopt, bool reverse_labels = false)
      : g_(&g), rng_(seed), budget_(budget), reverse_labels_(reverse_labels) {
    if (reverse_labels && g.directed()) {
      throw DirectedUnsupported("label reversal is a FIN device for undirected graphs");
    }
  }

  // The oracle borrows the graph; it must outlive the oracle.
  GraphOracle(const LabeledGraph&& g, std::uint64_t seed,
              std::optional<std::uint64_t> budget = std::nullopt,
              bool reverse_labels = false) = delete;

  // Public model parameters.
  std::uint32_t n() const { return g_->n(); }
  std::uint32_t degree_bound() const { return g_->degree_bound(); }
  bool directed() const { return g_->directed(); }
  bool reversed() const { return reverse_labels_; }

  std::optional<VertexId> neighbor_query(VertexId v, std::uint32_t i,
                                         Direction dir = Direction::Undirected) {
    check_vertex(v);
    if (i < 1 || i > g_->degree_bound()) {
      throw VertexOutOfRange("neighbor slot " + std::to_string(i) + " outside [1, d]");
    }
    if (g_->directed()) {
      if (dir == Direction::Undirected) {
        throw DirectionUnsupported("directed graph requires an in or out query");
      }
    } else if (dir != Direction::Undirected) {
      throw DirectionUnsupported("undirected graph has no in/out neighbor lists");
    }
    charge(counter_.neighbor_queries);
    switch (dir) {
      case Direction::Out:
        return g_->out_neighbor_slot(v, i);
      case Direction::In:
        return g_->in_neighbor_slot(v, i);
      default:
        return g_->neighbor_slot(v, i);
    }
  }

  Label label_query(VertexId v) {
    check_vertex(v);
    charge(counter_.label_queries);
    Label l = g_->label_of(v);
    return reverse_labels_ ? g_->n() + 1 - l : l;
  }

  // Uniform over [1, n]; ids are public, costs nothing.
  VertexId sample_vertex() { return static_cast<VertexId>(rng_.range(1, g_->n())); }

  // Uniform over E by rejection over (vertex, slot); every attempt costs one
  // neighbor query, plus one label query per endpoint on success.
  SampledEdge sample_edge() {
    if (g_->edge_count() == 0) throw EmptyGraph("cannot sample an edge from an empty graph");
    const Direction dir = g_->directed() ? Direction::Out : Direction::Undirected;
    for (;;) {
      VertexId v = sample_vertex();
      auto i = static_cast<std::uint32_t>(rng_.range(1, g_->degree_bound()));
      std::optional<VertexId> w = neighbor_query(v, i, dir);
      if (!w) continue;
      SampledEdge e{v, *w, 0, 0};
      e.label_a = label_query(v);
      e.label_b = label_query(*w);
      return e;
    }
  }

  QueryCounter query_count() const { return counter_; }
  std::uint64_t used() const { return counter_.total(); }

  std::optional<std::uint64_t> budget() const { return budget_; }

  // Lowers the budget to `cap` absolute queries (never raises it).
  void tighten_budget(std::uint64_t cap) {
    budget_ = budget_ ? std::min(*budget_, cap) : cap;
  }

  Rng& rng() { return rng_; }

 private:
  void check_vertex(VertexId v) const {
    if (v < 1 || v > g_->n()) {
      throw VertexOutOfRange("vertex id " + std::to_string(v) + " out of range");
    }
  }

  void charge(std::uint64_t& bucket) {
    if (budget_ && counter_.total() >= *budget_) throw BudgetExhausted();
    ++bucket;
  }

  const LabeledGraph* g_;
  QueryCounter counter_;
  Rng rng_;
  std::optional<std::uint64_t> budget_;
  bool reverse_labels_;
};

}  // namespace dfscert
