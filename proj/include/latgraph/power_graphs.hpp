#pragma once

// Power-type graphs computed directly from the group table, and maximal
// clique enumeration.

#include <algorithm>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "latgraph/graph.hpp"
#include "latgraph/group.hpp"

namespace latgraph {

// x ~ y iff x and y lie in a common cyclic subgroup. Every pair inside each
// <z> is marked.
inline SimpleGraph epow_oracle(const FiniteGroup& g) {
  AdjacencyMatrix m(g.order());
  for (const auto& c : cyclic_subgroups(g))
    for (ElementId x : c.members)
      for (ElementId y : c.members)
        if (x != y) m.set(x.value, y.value);
  return SimpleGraph(m);
}

// Arc x -> y iff y is a power of x (y in <x>), x != y.
inline Digraph dirpow_oracle(const FiniteGroup& g) {
  AdjacencyMatrix m(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const ElementId gx(x);
    for (ElementId y = gx;; y = g.mul(y, gx)) {
      if (y != gx) m.set(x, y.value);
      if (y == g.identity()) break;
    }
  }
  return Digraph(m);
}

// x ~ y iff one is a power of the other.
inline SimpleGraph pow_oracle(const FiniteGroup& g) {
  return underlying_graph(dirpow_oracle(g));
}

// Difference graph with isolated vertices dropped; `original[i]` is the
// group element behind compacted vertex i.
struct DiffGraph {
  SimpleGraph graph;
  std::vector<ElementId> original;
};

inline DiffGraph diff_oracle(const FiniteGroup& g) {
  const auto en = epow_oracle(g), pw = pow_oracle(g);
  std::vector<Edge> diff;
  for (const auto& e : en.edges())
    if (!pw.adjacent(e.first, e.second)) diff.push_back(e);
  std::vector<std::int64_t> remap(g.order(), -1);
  DiffGraph out;
  for (const auto& [u, v] : diff) remap[u] = remap[v] = 0;
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (remap[x] == 0) {
      remap[x] = std::int64_t(out.original.size());
      out.original.emplace_back(x);
    }
  for (auto& [u, v] : diff) {
    u = Vertex(remap[u]);
    v = Vertex(remap[v]);
  }
  out.graph = SimpleGraph(out.original.size(), diff);
  return out;
}

namespace detail {

class BronKerbosch {
 public:
  using Bits = boost::dynamic_bitset<>;

  explicit BronKerbosch(const SimpleGraph& g) : n_(g.vertex_count()), nbr_(n_, Bits(n_)) {
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : g.neighbors(u)) nbr_[u].set(v);
  }

  std::vector<std::vector<Vertex>> run() {
    if (n_ == 0) return {};
    Bits p(n_), x(n_);
    p.set();
    std::vector<Vertex> r;
    expand(r, p, x);
    return std::move(out_);
  }

 private:
  void expand(std::vector<Vertex>& r, Bits p, Bits x) {
    if (p.none()) {
      if (x.none()) {
        out_.push_back(r);
        std::sort(out_.back().begin(), out_.back().end());
      }
      return;
    }
    // pivot maximizing |P ∩ N(u)| over P ∪ X
    const Bits px = p | x;
    std::size_t pivot = px.find_first();
    std::size_t best = (p & nbr_[pivot]).count();
    for (auto u = px.find_next(pivot); u != Bits::npos; u = px.find_next(u)) {
      const std::size_t c = (p & nbr_[u]).count();
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    const Bits candidates = p - nbr_[pivot];
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      r.push_back(Vertex(v));
      expand(r, p & nbr_[v], x & nbr_[v]);
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  std::size_t n_;
  std::vector<Bits> nbr_;
  std::vector<std::vector<Vertex>> out_;
};

}  // namespace detail

// All inclusion-maximal cliques (Bron–Kerbosch with pivoting), sorted by
// size descending, then lexicographically.
inline std::vector<std::vector<Vertex>> maximal_cliques(const SimpleGraph& g) {
  auto cliques = detail::BronKerbosch(g).run();
  std::sort(cliques.begin(), cliques.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  return cliques;
}

}  // namespace latgraph
