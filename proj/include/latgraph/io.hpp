#pragma once

// JSON and DOT forms of graphs and lattices.
//
// Graph JSON:   {"kind":"simple"|"directed","vertices":n | [label,...],"edges":[[i,j],...]}
// Lattice JSON: {"nodes":[{"id":0,"order":1},...],"covers":[[lower,upper],...]}

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "latgraph/error.hpp"
#include "latgraph/graph.hpp"
#include "latgraph/lattice.hpp"
#include "latgraph/reconstruct.hpp"

namespace latgraph {

using Json = nlohmann::ordered_json;

namespace detail {
inline Json edge_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

inline Json vertex_field(std::size_t n, const std::vector<std::string>& labels) {
  if (labels.empty()) return n;
  return labels;
}

inline std::vector<std::string> label_strings(const std::vector<CanonicalLabel>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(to_string(l));
  return out;
}
}  // namespace detail

inline Json to_json(const SimpleGraph& g, const std::vector<std::string>& labels = {}) {
  return Json{{"kind", "simple"},
              {"vertices", detail::vertex_field(g.vertex_count(), labels)},
              {"edges", detail::edge_list(g.edges())}};
}

inline Json to_json(const Digraph& g, const std::vector<std::string>& labels = {}) {
  return Json{{"kind", "directed"},
              {"vertices", detail::vertex_field(g.vertex_count(), labels)},
              {"edges", detail::edge_list(g.arcs())}};
}

inline Json to_json(const LabeledGraph& g) { return to_json(g.graph, detail::label_strings(g.labels)); }
inline Json to_json(const LabeledDigraph& g) { return to_json(g.graph, detail::label_strings(g.labels)); }

inline Json to_json(const CyclicLattice& l) {
  Json nodes = Json::array();
  for (const auto& n : l.nodes()) nodes.push_back({{"id", n.id.value}, {"order", n.order}});
  Json covers = Json::array();
  for (auto [lo, hi] : l.covers()) covers.push_back({lo.value, hi.value});
  return Json{{"nodes", nodes}, {"covers", covers}};
}

// A graph read back from JSON. Exactly one of `simple` / `directed` is set.
struct ParsedGraph {
  std::optional<SimpleGraph> simple;
  std::optional<Digraph> directed;
  std::vector<std::string> labels;  // empty when vertices were given as a count
};

namespace detail {
[[noreturn]] inline void bad_json(const std::string& why) { fail(ErrorKind::Syntax, "invalid JSON input: " + why); }

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::Syntax, std::string("JSON parse error: ") + e.what());
  }
}

inline std::uint32_t as_index(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    bad_json("expected a non-negative integer, got " + j.dump());
  return j.get<std::uint32_t>();
}
}  // namespace detail

inline ParsedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) detail::bad_json("graph must be an object");
  const std::string kind = j.value("kind", std::string("simple"));
  if (kind != "simple" && kind != "directed") detail::bad_json("unknown kind '" + kind + "'");
  if (!j.contains("vertices") || !j.contains("edges")) detail::bad_json("graph needs vertices and edges");

  ParsedGraph out;
  std::size_t n = 0;
  const Json& verts = j.at("vertices");
  if (verts.is_array()) {
    for (const auto& v : verts) out.labels.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    n = out.labels.size();
  } else {
    n = detail::as_index(verts);
  }
  std::vector<Edge> edges;
  if (!j.at("edges").is_array()) detail::bad_json("edges must be an array");
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) detail::bad_json("each edge must be a pair");
    edges.emplace_back(detail::as_index(e[0]), detail::as_index(e[1]));
  }
  try {
    if (kind == "simple")
      out.simple = SimpleGraph(n, edges);
    else
      out.directed = Digraph(n, edges);
  } catch (const Error& e) {
    detail::bad_json(e.what());
  }
  return out;
}

inline ParsedGraph graph_from_json(const std::string& text) { return graph_from_json(detail::parse_text(text)); }

// Node ids must be dense from 0. The result is not validated here; callers
// that need a valid lattice run validate_lattice.
inline CyclicLattice lattice_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("covers"))
    detail::bad_json("lattice needs nodes and covers");
  const Json& nodes = j.at("nodes");
  if (!nodes.is_array()) detail::bad_json("nodes must be an array");
  std::vector<std::uint64_t> orders(nodes.size(), 0);
  std::vector<bool> seen(nodes.size(), false);
  for (const auto& n : nodes) {
    if (!n.is_object() || !n.contains("id") || !n.contains("order"))
      detail::bad_json("each node needs id and order");
    const auto id = detail::as_index(n.at("id"));
    if (id >= nodes.size() || seen[id]) detail::bad_json("node ids must be dense from 0 and distinct");
    seen[id] = true;
    orders[id] = n.at("order").get<std::uint64_t>();
  }
  std::vector<Cover> covers;
  if (!j.at("covers").is_array()) detail::bad_json("covers must be an array");
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2) detail::bad_json("each cover must be a pair");
    const auto lo = detail::as_index(c[0]), hi = detail::as_index(c[1]);
    if (lo >= nodes.size() || hi >= nodes.size()) detail::bad_json("cover references a missing node");
    covers.emplace_back(LatticeNodeId(lo), LatticeNodeId(hi));
  }
  return CyclicLattice(orders, std::move(covers));
}

inline CyclicLattice lattice_from_json(const std::string& text) {
  return lattice_from_json(detail::parse_text(text));
}

namespace detail {
inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string dot(bool directed, std::size_t n, const std::vector<Edge>& edges,
                       const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << (directed ? "digraph G {\n" : "graph G {\n");
  for (std::size_t v = 0; v < n; ++v) {
    os << "  " << v;
    if (!labels.empty()) os << " [label=\"" << dot_escape(labels[v]) << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : edges) os << "  " << u << (directed ? " -> " : " -- ") << v << ";\n";
  os << "}\n";
  return os.str();
}
}  // namespace detail

inline std::string to_dot(const SimpleGraph& g, const std::vector<std::string>& labels = {}) {
  return detail::dot(false, g.vertex_count(), g.edges(), labels);
}

inline std::string to_dot(const Digraph& g, const std::vector<std::string>& labels = {}) {
  return detail::dot(true, g.vertex_count(), g.arcs(), labels);
}

// Hasse diagram drawn bottom-up; node labels are subgroup orders.
inline std::string to_dot(const CyclicLattice& l) {
  std::vector<Edge> edges;
  for (auto [lo, hi] : l.covers()) edges.emplace_back(lo.value, hi.value);
  std::vector<std::string> labels;
  for (const auto& n : l.nodes()) labels.push_back(std::to_string(n.order));
  std::string s = detail::dot(true, l.size(), edges, labels);
  return s.insert(s.find('\n') + 1, "  rankdir=BT;\n");
}

}  // namespace latgraph
