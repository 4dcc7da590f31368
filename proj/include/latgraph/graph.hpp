#pragma once

// Simple graphs and digraphs over dense vertex ids, stored as sorted
// neighbor lists.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "latgraph/error.hpp"
#include "latgraph/ids.hpp"

namespace latgraph {

using Edge = std::pair<Vertex, Vertex>;

// Dense adjacency used while building graphs.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(std::size_t n) : rows_(n, boost::dynamic_bitset<>(n)) {}

  std::size_t size() const noexcept { return rows_.size(); }
  void set(Vertex u, Vertex v) { rows_[u].set(v); }
  void reset(Vertex u, Vertex v) { rows_[u].reset(v); }
  void set_both(Vertex u, Vertex v) {
    rows_[u].set(v);
    rows_[v].set(u);
  }
  bool test(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const boost::dynamic_bitset<>& row(Vertex u) const { return rows_[u]; }

 private:
  std::vector<boost::dynamic_bitset<>> rows_;
};

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::size_t n) : adj_(n) {}

  // Edges may repeat and come in either orientation; self-loops are rejected.
  SimpleGraph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) fail(ErrorKind::InvalidParameter, "edge endpoint out of range");
      if (u == v) fail(ErrorKind::InvalidParameter, "self-loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    normalize();
  }

  // Symmetric part of the matrix, diagonal ignored.
  explicit SimpleGraph(const AdjacencyMatrix& m) : adj_(m.size()) {
    for (Vertex u = 0; u < m.size(); ++u)
      for (auto v = m.row(u).find_first(); v != boost::dynamic_bitset<>::npos; v = m.row(u).find_next(v))
        if (v != u && m.test(Vertex(v), u)) adj_[u].push_back(Vertex(v));
  }

  std::size_t vertex_count() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept {
    std::size_t d = 0;
    for (const auto& a : adj_) d += a.size();
    return d / 2;
  }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const {
    return std::binary_search(adj_.at(u).begin(), adj_.at(u).end(), v);
  }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  AdjacencyMatrix matrix() const {
    AdjacencyMatrix m(adj_.size());
    for (Vertex u = 0; u < adj_.size(); ++u)
      for (Vertex v : adj_[u]) m.set(u, v);
    return m;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void normalize() {
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
    }
  }

  std::vector<std::vector<Vertex>> adj_;
};

class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n), in_(n) {}

  Digraph(std::size_t n, const std::vector<Edge>& arcs) : out_(n), in_(n) {
    for (auto [u, v] : arcs) {
      if (u >= n || v >= n) fail(ErrorKind::InvalidParameter, "arc endpoint out of range");
      if (u == v) fail(ErrorKind::InvalidParameter, "self-arc at vertex " + std::to_string(u));
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
    normalize();
  }

  explicit Digraph(const AdjacencyMatrix& m) : out_(m.size()), in_(m.size()) {
    for (Vertex u = 0; u < m.size(); ++u)
      for (auto v = m.row(u).find_first(); v != boost::dynamic_bitset<>::npos; v = m.row(u).find_next(v))
        if (v != u) {
          out_[u].push_back(Vertex(v));
          in_[v].push_back(u);
        }
  }

  std::size_t vertex_count() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept {
    std::size_t d = 0;
    for (const auto& a : out_) d += a.size();
    return d;
  }
  const std::vector<Vertex>& out_neighbors(Vertex v) const { return out_.at(v); }
  const std::vector<Vertex>& in_neighbors(Vertex v) const { return in_.at(v); }
  bool has_arc(Vertex u, Vertex v) const {
    return std::binary_search(out_.at(u).begin(), out_.at(u).end(), v);
  }

  std::vector<Edge> arcs() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < out_.size(); ++u)
      for (Vertex v : out_[u]) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.out_ == b.out_; }

 private:
  void normalize() {
    for (auto* lists : {&out_, &in_})
      for (auto& a : *lists) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
      }
  }

  std::vector<std::vector<Vertex>> out_, in_;
};

// Forget arc directions.
inline SimpleGraph underlying_graph(const Digraph& d) {
  return SimpleGraph(d.vertex_count(), d.arcs());
}

}  // namespace latgraph
