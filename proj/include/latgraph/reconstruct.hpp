#pragma once

// Element-free reconstructions between the enhanced power graph and the
// order-labeled cyclic subgroup lattice, and from the lattice to the power
// graph, the directed power graph and the difference graph.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/pending/disjoint_sets.hpp>

#include "latgraph/arith.hpp"
#include "latgraph/error.hpp"
#include "latgraph/graph.hpp"
#include "latgraph/iso.hpp"
#include "latgraph/lattice.hpp"
#include "latgraph/power_graphs.hpp"

namespace latgraph {

// (node, i): the i-th generator (1-based) of the cyclic subgroup at `node`.
struct CanonicalLabel {
  LatticeNodeId node;
  std::uint32_t index = 1;

  friend auto operator<=>(const CanonicalLabel&, const CanonicalLabel&) = default;
};

inline std::string to_string(const CanonicalLabel& l) {
  return "n" + std::to_string(l.node.value) + ":g" + std::to_string(l.index);
}

struct LabeledGraph {
  SimpleGraph graph;
  std::vector<CanonicalLabel> labels;  // labels[v] for vertex v
};

struct LabeledDigraph {
  Digraph graph;
  std::vector<CanonicalLabel> labels;
};

// The phi(order) generators introduced when node v is attached.
inline std::vector<CanonicalLabel> new_vertices(const CyclicLattice& l, LatticeNodeId v) {
  std::vector<CanonicalLabel> out;
  const auto count = totient(l.order(v));
  for (std::uint32_t i = 1; i <= count; ++i) out.push_back({v, i});
  return out;
}

namespace detail {

// Vertex numbering shared by all lattice-side reconstructions: stages in
// order, nodes by id within a stage, generator indices within a node.
struct VertexLayout {
  std::vector<CanonicalLabel> labels;
  std::vector<std::vector<Vertex>> of_node;  // vertices carrying each node
  std::vector<std::vector<LatticeNodeId>> stages;
};

inline VertexLayout layout_vertices(const CyclicLattice& l, std::size_t max_stage) {
  require_valid(l);
  VertexLayout out;
  out.stages = levelize(l);
  out.of_node.resize(l.size());
  for (std::size_t s = 0; s < out.stages.size() && s <= max_stage; ++s)
    for (LatticeNodeId v : out.stages[s])
      for (const auto& lab : new_vertices(l, v)) {
        out.of_node[v.value].push_back(Vertex(out.labels.size()));
        out.labels.push_back(lab);
      }
  return out;
}

inline std::vector<std::vector<LatticeNodeId>> all_down_sets(const CyclicLattice& l) {
  std::vector<std::vector<LatticeNodeId>> out;
  for (std::uint32_t v = 0; v < l.size(); ++v) out.push_back(down_set(l, LatticeNodeId(v)));
  return out;
}

inline bool placed(const VertexLayout& lay, LatticeNodeId v) { return !lay.of_node[v.value].empty(); }

}  // namespace detail

// Clique gluing: every node contributes the complete graph on the vertices
// of its down-set. `max_stage` stops after that stage of the levelization.
inline LabeledGraph epow_from_lattice(const CyclicLattice& l,
                                      std::size_t max_stage = std::size_t(-1)) {
  const auto lay = detail::layout_vertices(l, max_stage);
  const auto down = detail::all_down_sets(l);
  AdjacencyMatrix m(lay.labels.size());
  for (std::uint32_t v = 0; v < l.size(); ++v) {
    if (!detail::placed(lay, LatticeNodeId(v))) continue;
    std::vector<Vertex> members;
    for (LatticeNodeId u : down[v])
      members.insert(members.end(), lay.of_node[u.value].begin(), lay.of_node[u.value].end());
    for (Vertex x : members)
      for (Vertex y : members)
        if (x != y) m.set(x, y);
  }
  return {SimpleGraph(m), lay.labels};
}

// New generators form a clique and are joined to every vertex strictly below
// their node; nothing is joined across incomparable nodes.
inline LabeledGraph pow_from_lattice(const CyclicLattice& l) {
  const auto lay = detail::layout_vertices(l, std::size_t(-1));
  const auto down = detail::all_down_sets(l);
  AdjacencyMatrix m(lay.labels.size());
  for (std::uint32_t v = 0; v < l.size(); ++v) {
    const auto& fresh = lay.of_node[v];
    for (Vertex x : fresh)
      for (Vertex y : fresh)
        if (x != y) m.set(x, y);
    for (LatticeNodeId u : down[v]) {
      if (u.value == v) continue;
      for (Vertex x : fresh)
        for (Vertex y : lay.of_node[u.value]) m.set_both(x, y);
    }
  }
  return {SimpleGraph(m), lay.labels};
}

// Both arcs between generators of the same node; arcs from each generator
// down to every vertex strictly below its node.
inline LabeledDigraph dirpow_from_lattice(const CyclicLattice& l) {
  const auto lay = detail::layout_vertices(l, std::size_t(-1));
  const auto down = detail::all_down_sets(l);
  AdjacencyMatrix m(lay.labels.size());
  for (std::uint32_t v = 0; v < l.size(); ++v) {
    const auto& fresh = lay.of_node[v];
    for (Vertex x : fresh)
      for (Vertex y : fresh)
        if (x != y) m.set(x, y);
    for (LatticeNodeId u : down[v]) {
      if (u.value == v) continue;
      for (Vertex x : fresh)
        for (Vertex y : lay.of_node[u.value]) m.set(x, y);
    }
  }
  return {Digraph(m), lay.labels};
}

namespace detail {
inline LabeledGraph drop_isolated(const SimpleGraph& g, const std::vector<CanonicalLabel>& labels) {
  std::vector<std::int64_t> remap(g.vertex_count(), -1);
  LabeledGraph out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) {
      remap[v] = std::int64_t(out.labels.size());
      out.labels.push_back(labels[v]);
    }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(Vertex(remap[u]), Vertex(remap[v]));
  out.graph = SimpleGraph(out.labels.size(), edges);
  return out;
}
}  // namespace detail

// Enhanced-power edges that are not power edges, isolated vertices removed.
inline LabeledGraph diff_from_lattice(const CyclicLattice& l) {
  const auto en = epow_from_lattice(l);
  const auto pw = pow_from_lattice(l);
  std::vector<Edge> edges;
  for (auto [u, v] : en.graph.edges())
    if (!pw.graph.adjacent(u, v)) edges.emplace_back(u, v);
  return detail::drop_isolated(SimpleGraph(en.labels.size(), edges), en.labels);
}

// Direct characterization: labels on nodes u and v are adjacent iff u and v
// are incomparable but lie below a common node.
inline LabeledGraph diff_incomparability(const CyclicLattice& l) {
  const auto lay = detail::layout_vertices(l, std::size_t(-1));
  const std::size_t n = l.size();
  std::vector<boost::dynamic_bitset<>> down(n, boost::dynamic_bitset<>(n));
  for (std::uint32_t v = 0; v < n; ++v)
    for (LatticeNodeId u : down_set(l, LatticeNodeId(v))) down[v].set(u.value);

  AdjacencyMatrix m(lay.labels.size());
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b) {
      if (down[a].test(b) || down[b].test(a)) continue;
      bool shared = false;
      for (std::uint32_t w = 0; w < n && !shared; ++w) shared = down[w].test(a) && down[w].test(b);
      if (!shared) continue;
      for (Vertex x : lay.of_node[a])
        for (Vertex y : lay.of_node[b]) m.set_both(x, y);
    }
  return detail::drop_isolated(SimpleGraph(m), lay.labels);
}

// Element x -> (node of <x>, rank of x among that subgroup's generators in
// increasing ElementId order).
inline std::vector<CanonicalLabel> oracle_labeling(const FiniteGroup& g, const LatticeWithSubgroups& ls) {
  std::vector<CanonicalLabel> out(g.order());
  std::vector<bool> hit(g.order(), false);
  for (std::uint32_t v = 0; v < ls.subgroups.size(); ++v) {
    const auto& gens = ls.subgroups[v].generators;
    for (std::uint32_t i = 0; i < gens.size(); ++i) {
      out[gens[i].value] = {LatticeNodeId(v), i + 1};
      hit[gens[i].value] = true;
    }
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end())
    fail(ErrorKind::InvalidParameter, "lattice does not cover every element of the group");
  return out;
}

namespace detail {
inline std::vector<std::uint64_t> node_colors(const std::vector<CanonicalLabel>& labels) {
  std::vector<std::uint64_t> out;
  for (const auto& l : labels) out.push_back(l.node.value);
  return out;
}
}  // namespace detail

// True iff some bijection that keeps every vertex on its lattice node (and
// so only permutes generator indices) maps one graph onto the other.
inline bool equal_up_to_generator_indices(const SimpleGraph& g1, const std::vector<CanonicalLabel>& l1,
                                          const SimpleGraph& g2, const std::vector<CanonicalLabel>& l2,
                                          const IsoOptions& opt = {}) {
  return colored_graph_isomorphism(g1, detail::node_colors(l1), g2, detail::node_colors(l2), opt).found;
}

inline bool equal_up_to_generator_indices(const Digraph& g1, const std::vector<CanonicalLabel>& l1,
                                          const Digraph& g2, const std::vector<CanonicalLabel>& l2,
                                          const IsoOptions& opt = {}) {
  return colored_digraph_isomorphism(g1, detail::node_colors(l1), g2, detail::node_colors(l2), opt).found;
}

struct EpowReconstructionOptions {
  // Rebuild the enhanced power graph from the result and require it to be
  // isomorphic to the input.
  bool verify_by_rebuild = true;
  IsoOptions iso;
};

// Recovers the order-labeled cyclic subgroup lattice from an unlabeled
// enhanced power graph. Maximal cliques stand for maximal cyclic subgroups;
// (clique, d) pairs for d dividing the clique size stand for their
// subgroups; two cliques meeting in r vertices share the subgroups of every
// order dividing r.
inline CyclicLattice lattice_from_epow(const SimpleGraph& g, const EpowReconstructionOptions& opt = {}) {
  const auto reject = [](const std::string& why) { fail(ErrorKind::NotEnhancedPowerGraph, why); };
  const std::size_t n = g.vertex_count();
  if (n == 0) reject("graph has no vertices");

  const auto cliques = maximal_cliques(g);

  // One divisor node per (clique, d), d | |clique|.
  std::vector<std::size_t> first(cliques.size());
  std::vector<std::uint64_t> node_order;
  std::vector<std::vector<std::uint64_t>> clique_divisors;
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    first[c] = node_order.size();
    clique_divisors.push_back(divisors(cliques[c].size()));
    for (std::uint64_t d : clique_divisors.back()) node_order.push_back(d);
  }
  const auto node_of = [&](std::size_t c, std::uint64_t d) {
    const auto& ds = clique_divisors[c];
    return first[c] + std::size_t(std::lower_bound(ds.begin(), ds.end(), d) - ds.begin());
  };

  boost::disjoint_sets_with_storage<> classes(node_order.size());
  for (std::size_t i = 0; i < node_order.size(); ++i) classes.make_set(i);

  for (std::size_t c = 0; c < cliques.size(); ++c)
    for (std::size_t e = c + 1; e < cliques.size(); ++e) {
      std::vector<Vertex> common;
      std::set_intersection(cliques[c].begin(), cliques[c].end(), cliques[e].begin(), cliques[e].end(),
                            std::back_inserter(common));
      const std::uint64_t r = common.size();
      if (r == 0)
        reject("maximal cliques " + std::to_string(c) + " and " + std::to_string(e) + " are disjoint");
      if (cliques[c].size() % r != 0 || cliques[e].size() % r != 0)
        reject("maximal cliques of sizes " + std::to_string(cliques[c].size()) + " and " +
               std::to_string(cliques[e].size()) + " meet in " + std::to_string(r) + " vertices");
      for (std::uint64_t d : divisors(r)) classes.union_set(node_of(c, d), node_of(e, d));
    }

  // Classes become lattice nodes, numbered by (order, first divisor node).
  std::map<std::size_t, std::size_t> root_first;
  for (std::size_t i = 0; i < node_order.size(); ++i) root_first.emplace(classes.find_set(i), i);
  std::vector<std::pair<std::uint64_t, std::size_t>> keyed;
  for (const auto& [root, i] : root_first) keyed.emplace_back(node_order[i], i);
  std::sort(keyed.begin(), keyed.end());
  std::map<std::size_t, std::uint32_t> node_id;
  std::vector<std::uint64_t> orders;
  for (const auto& [d, i] : keyed) {
    node_id[classes.find_set(i)] = std::uint32_t(orders.size());
    orders.push_back(d);
  }
  for (std::size_t i = 0; i < node_order.size(); ++i)
    if (orders[node_id.at(classes.find_set(i))] != node_order[i])
      reject("a class mixes subgroups of different orders");

  std::vector<Cover> covers;
  for (std::size_t c = 0; c < cliques.size(); ++c)
    for (auto [d, d2] : divisor_cover_pairs(cliques[c].size()))
      covers.emplace_back(LatticeNodeId(node_id.at(classes.find_set(node_of(c, d)))),
                          LatticeNodeId(node_id.at(classes.find_set(node_of(c, d2)))));

  std::uint64_t accounted = 0;
  for (std::uint64_t d : orders) {
    if (n % d != 0)
      reject("a cyclic subgroup of order " + std::to_string(d) + " cannot live in a group of order " +
             std::to_string(n));
    accounted += totient(d);
  }
  if (accounted != n)
    reject("generator count " + std::to_string(accounted) + " differs from vertex count " +
           std::to_string(n));

  CyclicLattice lattice(orders, std::move(covers));
  if (const auto rep = validate_lattice(lattice); !rep.ok())
    reject("reconstructed lattice is invalid: " + rep.summary());

  if (opt.verify_by_rebuild && !graph_isomorphism(epow_from_lattice(lattice).graph, g, opt.iso).found)
    reject("the lattice does not rebuild the input graph");
  return lattice;
}

}  // namespace latgraph
