#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "latgraph/census.hpp"
#include "latgraph/group_expr.hpp"
#include "latgraph/reconstruct.hpp"

using namespace latgraph;

namespace {

FiniteGroup G(const char* e) { return build_group(e).group; }
LatticeNodeId N(std::uint32_t v) { return LatticeNodeId(v); }

SimpleGraph graph_of(std::size_t n, std::vector<Edge> e) { return SimpleGraph(n, e); }

SimpleGraph relabel(const SimpleGraph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return SimpleGraph(g.vertex_count(), e);
}

ErrorKind reject_kind(const SimpleGraph& g) {
  try {
    lattice_from_epow(g);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "graph accepted";
  return ErrorKind::InvalidParameter;
}

}  // namespace

TEST(NewVertices, PhiManyLabels) {
  const auto l = build_lattice(G("Z(12)")).lattice;
  for (const auto& n : l.nodes()) {
    const auto nv = new_vertices(l, n.id);
    EXPECT_EQ(nv.size(), totient(n.order));
    for (std::uint32_t i = 0; i < nv.size(); ++i) EXPECT_EQ(nv[i], (CanonicalLabel{n.id, i + 1}));
  }
  EXPECT_EQ(to_string(CanonicalLabel{N(3), 2}), "n3:g2");
}

TEST(EpowFromLattice, ChainGivesCompleteGraph) {
  const auto g = epow_from_lattice(CyclicLattice({1, 7}, {{N(0), N(1)}}));
  EXPECT_EQ(g.graph.vertex_count(), 7u);
  EXPECT_EQ(g.graph.edge_count(), 21u);
}

TEST(EpowFromLattice, C2xC6) {
  const auto grp = G("Z(2)xZ(6)");
  const auto ls = build_lattice(grp);
  const auto rec = epow_from_lattice(ls.lattice);
  EXPECT_EQ(rec.graph.vertex_count(), 12u);
  EXPECT_EQ(rec.graph.edge_count(), 39u);
  EXPECT_TRUE(equal_up_to_generator_indices(rec.graph, rec.labels, epow_oracle(grp), oracle_labeling(grp, ls)));
}

TEST(EpowFromLattice, StagesAreUnionsOfPlacedCliques) {
  // After stage s the graph is the union of the cliques on the subgroups
  // placed in stages 0..s.
  const auto grp = G("Z(2)xZ(6)");
  const auto ls = build_lattice(grp);
  const auto stages = levelize(ls.lattice);
  const auto labels = oracle_labeling(grp, ls);
  for (std::size_t s = 0; s < stages.size(); ++s) {
    std::vector<bool> in_stage(ls.lattice.size(), false);
    for (std::size_t t = 0; t <= s; ++t)
      for (auto v : stages[t]) in_stage[v.value] = true;
    std::vector<Vertex> keep;
    std::vector<CanonicalLabel> keep_labels;
    for (Vertex x = 0; x < grp.order(); ++x)
      if (in_stage[labels[x].node.value]) {
        keep.push_back(x);
        keep_labels.push_back(labels[x]);
      }
    std::vector<Edge> e;
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = i + 1; j < keep.size(); ++j)
        for (std::uint32_t v = 0; v < ls.lattice.size(); ++v) {
          const auto& sub = ls.subgroup_of(LatticeNodeId(v));
          if (in_stage[v] && sub.contains(ElementId(keep[i])) && sub.contains(ElementId(keep[j]))) {
            e.emplace_back(Vertex(i), Vertex(j));
            break;
          }
        }
    const SimpleGraph induced(keep.size(), e);
    const auto partial = epow_from_lattice(ls.lattice, s);
    EXPECT_TRUE(equal_up_to_generator_indices(partial.graph, partial.labels, induced, keep_labels)) << s;
  }
  EXPECT_EQ(epow_from_lattice(ls.lattice, stages.size() - 1).graph, epow_from_lattice(ls.lattice).graph);
  EXPECT_EQ(epow_from_lattice(ls.lattice, 0).graph.vertex_count(), 1u);
  EXPECT_EQ(epow_from_lattice(ls.lattice, 1).graph.vertex_count(), 6u);
  EXPECT_EQ(epow_from_lattice(ls.lattice, 1).graph.edge_count(), 6u);
}

TEST(EpowFromLattice, RejectsInvalidLattice) {
  try {
    epow_from_lattice(CyclicLattice({1, 4}, {{N(0), N(1)}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidLattice);
  }
}

TEST(PowFromLattice, Z6) {
  const auto l = build_lattice(G("Z(6)")).lattice;
  const auto rec = pow_from_lattice(l);
  EXPECT_EQ(rec.graph.vertex_count(), 6u);
  EXPECT_EQ(rec.graph.edge_count(), 13u);
}

TEST(DirpowFromLattice, SmallCases) {
  EXPECT_EQ(dirpow_from_lattice(build_lattice(G("Z(4)")).lattice).graph.arc_count(), 7u);
  EXPECT_EQ(dirpow_from_lattice(build_lattice(G("Z(2)xZ(2)")).lattice).graph.arc_count(), 3u);
}

TEST(DiffFromLattice, Z6AndIncomparability) {
  const auto rec = diff_from_lattice(build_lattice(G("Z(6)")).lattice);
  EXPECT_EQ(rec.graph.vertex_count(), 3u);
  EXPECT_EQ(rec.graph.edge_count(), 2u);
  for (const char* e : {"Z(6)", "Z(2)xZ(6)", "Z(60)", "S(4)", "A(5)", "Q(8)", "D(30)"}) {
    const auto l = build_lattice(G(e)).lattice;
    const auto a = diff_from_lattice(l), b = diff_incomparability(l);
    EXPECT_EQ(a.graph, b.graph) << e;
    EXPECT_EQ(a.labels, b.labels) << e;
  }
}

TEST(OracleLabeling, EachElementGeneratesItsNode) {
  const auto g = G("S(4)");
  const auto ls = build_lattice(g);
  const auto labels = oracle_labeling(g, ls);
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const auto& sub = ls.subgroup_of(labels[x].node);
    EXPECT_EQ(sub.generators.at(labels[x].index - 1), ElementId(x));
  }
}

TEST(EqualUpToGeneratorIndices, DetectsChanges) {
  const auto g = G("Z(2)xZ(6)");
  const auto ls = build_lattice(g);
  const auto rec = epow_from_lattice(ls.lattice);
  const auto labels = oracle_labeling(g, ls);
  auto edges = epow_oracle(g).edges();
  edges.pop_back();
  EXPECT_FALSE(equal_up_to_generator_indices(rec.graph, rec.labels, SimpleGraph(12, edges), labels));
  // Same graph, but two vertices of different nodes swap labels.
  auto swapped = labels;
  const auto it = std::find_if(swapped.begin(), swapped.end(), [&](auto l) { return l.node != swapped[0].node; });
  std::swap(swapped[0], *it);
  EXPECT_FALSE(equal_up_to_generator_indices(rec.graph, rec.labels, epow_oracle(g), swapped));
}

TEST(LatticeFromEpow, CompletePrimeGraphIsChain) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = u + 1; v < 5; ++v) e.emplace_back(u, v);
  const auto l = lattice_from_epow(SimpleGraph(5, e));
  EXPECT_EQ(l, CyclicLattice({1, 5}, {{N(0), N(1)}}));
  EXPECT_EQ(lattice_from_epow(SimpleGraph(1)), CyclicLattice({1}, {}));
}

TEST(LatticeFromEpow, C2xC6) {
  const auto g = G("Z(2)xZ(6)");
  const auto l = lattice_from_epow(epow_oracle(g));
  EXPECT_EQ(l.size(), 8u);
  EXPECT_EQ(l.covers().size(), 10u);
  EXPECT_TRUE(labeled_lattice_isomorphism(l, build_lattice(g).lattice).found);
}

TEST(LatticeFromEpow, InvariantUnderVertexRelabeling) {
  std::mt19937 rng(99);
  for (const char* e : {"Z(2)xZ(6)", "S(4)", "Q(16)", "Heis(3)", "D(18)"}) {
    const auto g = G(e);
    const auto ep = epow_oracle(g);
    std::vector<Vertex> perm(ep.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto l = lattice_from_epow(relabel(ep, perm));
    EXPECT_TRUE(labeled_lattice_isomorphism(l, build_lattice(g).lattice).found) << e;
  }
}

TEST(LatticeFromEpow, RejectsNonEnhancedPowerGraphs) {
  EXPECT_EQ(reject_kind(graph_of(3, {{0, 1}, {1, 2}})), ErrorKind::NotEnhancedPowerGraph);          // P3
  EXPECT_EQ(reject_kind(graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), ErrorKind::NotEnhancedPowerGraph);  // C4
  EXPECT_EQ(reject_kind(graph_of(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})),
            ErrorKind::NotEnhancedPowerGraph);                                                      // K4 - e
  EXPECT_EQ(reject_kind(SimpleGraph(0)), ErrorKind::NotEnhancedPowerGraph);
  EXPECT_EQ(reject_kind(SimpleGraph(2)), ErrorKind::NotEnhancedPowerGraph);
  EXPECT_EQ(reject_kind(graph_of(4, {{0, 1}, {2, 3}})), ErrorKind::NotEnhancedPowerGraph);
  // EPow(Z(6)) with one edge removed
  auto e = epow_oracle(G("Z(6)")).edges();
  e.erase(e.begin() + 4);
  EXPECT_EQ(reject_kind(SimpleGraph(6, e)), ErrorKind::NotEnhancedPowerGraph);
}

TEST(RoundTrip, WorkedExamples) {
  for (const char* e : {"Z(2)xZ(6)", "S(4)", "Q(16)"}) {
    for (const auto& c : roundtrip_checks(G(e))) EXPECT_TRUE(c.passed) << e << " " << c.name << ": " << c.detail;
  }
}
