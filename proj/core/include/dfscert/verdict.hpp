#pragma once

#include <optional>
#include <string>
#include <variant>

#include "dfscert/graph.hpp"

namespace dfscert {

// A rejection observed while navigating: the successor (forward) or
// predecessor (backward) of `at` in the p-tree does not carry the adjacent
// label, or the walk hit end-of-component where the component cannot end.
// Checkable by exact recomputation on the underlying graph.
struct OrderViolation {
  VertexId at;
  bool forward;
  bool operator==(const OrderViolation&) const = default;
};

using Witness = std::variant<ConflictingPair, OrderViolation>;

// Accept, or Reject carrying an independently checkable witness.
struct Verdict {
  bool accepted;
  std::optional<Witness> witness;

  static Verdict accept() { return {true, std::nullopt}; }
  static Verdict reject(Witness w) { return {false, std::move(w)}; }
};

// "conflict v=3 edge={2,4}" / "order-violation at=7 dir=prev"
std::string describe_witness(const Witness& w);

// True iff the witness certifies invalidity of g when recomputed exactly.
bool validate_witness(const LabeledGraph& g, const Witness& w);

}  // namespace dfscert
