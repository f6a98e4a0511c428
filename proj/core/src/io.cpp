#include "dfscert/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace dfscert {

void write_graph(std::ostream& out, const LabeledGraph& g) {
  out << "dfsgraph 1 " << g.n() << ' ' << g.degree_bound() << ' ' << (g.directed() ? 1 : 0)
      << '\n';
  out << "labels";
  for (VertexId v = 1; v <= g.n(); ++v) out << ' ' << g.label_of(v);
  out << '\n';
  const char* tag = g.directed() ? "a" : "e";
  for (auto [u, v] : g.edge_ids()) out << tag << ' ' << u << ' ' << v << '\n';
  out << "end\n";
  if (!out) throw IoError("failed writing graph stream");
}

namespace {

std::uint64_t parse_uint(const std::string& tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  if (tok.empty()) throw ParseError(line, std::string("empty ") + what);
  for (char c : tok) {
    if (c < '0' || c > '9') throw ParseError(line, std::string("bad ") + what + ": " + tok);
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
    if (value > 0xffffffffULL) throw ParseError(line, std::string(what) + " out of range: " + tok);
  }
  return value;
}

}  // namespace

LabeledGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++lineno;
    return true;
  };

  if (!next_line()) throw ParseError(ParseError::kEof, "empty stream");
  std::istringstream header(line);
  std::string magic, version, ns, ds, dirs;
  header >> magic >> version >> ns >> ds >> dirs;
  if (magic != "dfsgraph") throw ParseError(lineno, "expected 'dfsgraph' header");
  if (version != "1") throw ParseError(lineno, "unsupported version " + version);
  auto n = static_cast<std::uint32_t>(parse_uint(ns, lineno, "n"));
  auto d = static_cast<std::uint32_t>(parse_uint(ds, lineno, "d"));
  if (dirs != "0" && dirs != "1") throw ParseError(lineno, "directed flag must be 0 or 1");
  bool directed = dirs == "1";

  if (!next_line()) throw ParseError(ParseError::kEof, "missing labels line");
  std::istringstream ls(line);
  std::string tag;
  ls >> tag;
  if (tag != "labels") throw ParseError(lineno, "expected 'labels' line");
  std::vector<Label> labels;
  labels.reserve(n);
  std::string tok;
  while (ls >> tok) labels.push_back(static_cast<Label>(parse_uint(tok, lineno, "label")));
  if (labels.size() != n) {
    throw ParseError(lineno, "expected " + std::to_string(n) + " labels, got " +
                                 std::to_string(labels.size()));
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  bool saw_end = false;
  while (next_line()) {
    if (line == "end") {
      saw_end = true;
      break;
    }
    if (line.empty()) throw ParseError(lineno, "unexpected blank line");
    std::istringstream es(line);
    std::string kind, us, vs;
    es >> kind >> us >> vs;
    if ((kind != "e" && kind != "a") || vs.empty()) {
      throw ParseError(lineno, "expected edge line 'e u v' or 'a u v'");
    }
    if ((kind == "a") != directed) {
      throw ParseError(lineno, directed ? "directed graph needs 'a' lines" : "undirected graph needs 'e' lines");
    }
    auto u = static_cast<VertexId>(parse_uint(us, lineno, "vertex"));
    auto v = static_cast<VertexId>(parse_uint(vs, lineno, "vertex"));
    if (!directed && u >= v) throw ParseError(lineno, "undirected edges must have u < v by id");
    edges.emplace_back(u, v);
  }
  if (!saw_end) throw ParseError(ParseError::kEof, "missing 'end' terminator");

  return LabeledGraph::build_by_id(n, d, edges, labels, directed);
}

void save_graph_file(const std::string& path, const LabeledGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_graph(out, g);
}

LabeledGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return parse_graph(in);
}

}  // namespace dfscert
