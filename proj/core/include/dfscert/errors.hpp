#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dfscert {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- graph construction -------------------------------------------------

struct NonBijectiveLabels : Error {
  explicit NonBijectiveLabels(const std::string& what) : Error(what) {}
};

struct DegreeBoundExceeded : Error {
  explicit DegreeBoundExceeded(const std::string& what) : Error(what) {}
};

struct SelfLoop : Error {
  explicit SelfLoop(const std::string& what) : Error(what) {}
};

struct DuplicateEdge : Error {
  explicit DuplicateEdge(const std::string& what) : Error(what) {}
};

struct VertexOutOfRange : Error {
  explicit VertexOutOfRange(const std::string& what) : Error(what) {}
};

struct EdgeNotPresent : Error {
  explicit EdgeNotPresent(const std::string& what) : Error(what) {}
};

// --- oracle --------------------------------------------------------------

// Raised instead of returning data once the query budget is spent, so a
// caller can implement accept-on-budget explicitly.
struct BudgetExhausted : Error {
  BudgetExhausted() : Error("oracle query budget exhausted") {}
};

struct DirectionUnsupported : Error {
  explicit DirectionUnsupported(const std::string& what) : Error(what) {}
};

struct EmptyGraph : Error {
  explicit EmptyGraph(const std::string& what) : Error(what) {}
};

// --- fixes / transforms ----------------------------------------------------

struct VertexIsOne : Error {
  VertexIsOne() : Error("vertex 1 has no predecessor and is never in conflict") {}
};

struct InvalidInput : Error {
  explicit InvalidInput(const std::string& what) : Error(what) {}
};

struct DegreeBoundTooSmall : Error {
  explicit DegreeBoundTooSmall(const std::string& what) : Error(what) {}
};

struct DirectedUnsupported : Error {
  explicit DirectedUnsupported(const std::string& what) : Error(what) {}
};

// --- generators -------------------------------------------------------------

struct TooSmall : Error {
  explicit TooSmall(const std::string& what) : Error(what) {}
};

struct CannotPlant : Error {
  explicit CannotPlant(const std::string& what) : Error(what) {}
};

// --- persistence --------------------------------------------------------------

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + (line == kEof ? std::string("EOF") : std::to_string(line)) + ": " + what),
        line_number(line) {}

  static constexpr std::size_t kEof = static_cast<std::size_t>(-1);
  std::size_t line_number;
};

struct IoError : Error {
  explicit IoError(const std::string& what) : Error(what) {}
};

}  // namespace dfscert
