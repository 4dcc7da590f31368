#pragma once

// Isomorphism-class census over a list of groups, and the end-to-end
// round-trip checks of every reconstruction against the direct computation.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "latgraph/catalog.hpp"
#include "latgraph/group_expr.hpp"
#include "latgraph/iso.hpp"
#include "latgraph/lattice.hpp"
#include "latgraph/power_graphs.hpp"
#include "latgraph/reconstruct.hpp"

namespace latgraph {

enum class CensusKind { Pow, Epow, Dirpow, Lattice, Poset };

inline std::optional<CensusKind> parse_census_kind(const std::string& s) {
  if (s == "pow") return CensusKind::Pow;
  if (s == "epow") return CensusKind::Epow;
  if (s == "dirpow") return CensusKind::Dirpow;
  if (s == "lattice") return CensusKind::Lattice;
  if (s == "poset") return CensusKind::Poset;
  return std::nullopt;
}

struct CensusResult {
  // Each class lists indices into the input, ascending; classes are ordered
  // by their first member.
  std::vector<std::vector<std::size_t>> classes;
  std::size_t searches = 0;  // backtracking searches actually run
};

namespace detail {

// One group's structure of the requested kind plus a cheap fingerprint.
struct CensusEntry {
  std::vector<std::uint64_t> fingerprint;
  SimpleGraph graph;
  Digraph digraph;
  CyclicLattice lattice;
};

inline std::vector<std::uint64_t> degree_fingerprint(const Digraph& d) {
  std::vector<std::uint64_t> degs;
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    degs.push_back(d.out_neighbors(v).size() * (d.vertex_count() + 1) + d.in_neighbors(v).size());
  std::sort(degs.begin(), degs.end());
  return degs;
}

inline CensusEntry census_entry(const FiniteGroup& g, CensusKind kind) {
  CensusEntry e;
  e.fingerprint.push_back(g.order());
  switch (kind) {
    case CensusKind::Pow:
    case CensusKind::Epow: {
      e.graph = kind == CensusKind::Pow ? pow_oracle(g) : epow_oracle(g);
      std::vector<std::uint64_t> degs;
      for (Vertex v = 0; v < e.graph.vertex_count(); ++v) degs.push_back(e.graph.degree(v));
      std::sort(degs.begin(), degs.end());
      e.fingerprint.insert(e.fingerprint.end(), degs.begin(), degs.end());
      break;
    }
    case CensusKind::Dirpow: {
      e.digraph = dirpow_oracle(g);
      const auto degs = degree_fingerprint(e.digraph);
      e.fingerprint.insert(e.fingerprint.end(), degs.begin(), degs.end());
      break;
    }
    case CensusKind::Lattice:
    case CensusKind::Poset: {
      e.lattice = build_lattice(g).lattice;
      e.fingerprint.push_back(e.lattice.size());
      e.fingerprint.push_back(e.lattice.covers().size());
      if (kind == CensusKind::Lattice) {
        auto orders = e.lattice.orders();
        std::sort(orders.begin(), orders.end());
        e.fingerprint.insert(e.fingerprint.end(), orders.begin(), orders.end());
      }
      break;
    }
  }
  return e;
}

inline bool census_iso(const CensusEntry& a, const CensusEntry& b, CensusKind kind, const IsoOptions& opt) {
  switch (kind) {
    case CensusKind::Pow:
    case CensusKind::Epow: return graph_isomorphism(a.graph, b.graph, opt).found;
    case CensusKind::Dirpow: return digraph_isomorphism(a.digraph, b.digraph, opt).found;
    case CensusKind::Lattice: return labeled_lattice_isomorphism(a.lattice, b.lattice, opt).found;
    case CensusKind::Poset: return poset_isomorphism(a.lattice, b.lattice, opt).found;
  }
  return false;
}

}  // namespace detail

// Buckets groups by fingerprint, then resolves each bucket into isomorphism
// classes by comparing against one representative per class.
inline CensusResult census(const std::vector<NamedGroup>& groups, CensusKind kind, const IsoOptions& opt = {}) {
  std::vector<detail::CensusEntry> entries;
  for (const auto& g : groups) entries.push_back(detail::census_entry(g.group, kind));

  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets;
  for (std::size_t i = 0; i < entries.size(); ++i) buckets[entries[i].fingerprint].push_back(i);

  CensusResult out;
  for (const auto& [fp, members] : buckets) {
    std::vector<std::vector<std::size_t>> local;
    for (std::size_t i : members) {
      bool placed = false;
      for (auto& cls : local) {
        ++out.searches;
        if (detail::census_iso(entries[cls.front()], entries[i], kind, opt)) {
          cls.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) local.push_back({i});
    }
    out.classes.insert(out.classes.end(), local.begin(), local.end());
  }
  std::sort(out.classes.begin(), out.classes.end());
  return out;
}

// Expressions for the groups every reconstruction is checked against: each
// constructor family up to order 100, direct products of those up to order
// 100, S(5), and the order-16 catalog.
inline const std::vector<std::string>& standard_corpus() {
  static const std::vector<std::string> corpus = [] {
    std::vector<std::string> out;
    const auto z = [](std::uint64_t n) { return "Z(" + std::to_string(n) + ")"; };
    for (std::uint64_t n = 1; n <= 100; ++n) out.push_back(z(n));
    // Non-cyclic abelian groups in invariant-factor form.
    for (std::uint64_t a = 2; a * a <= 100; ++a)
      for (std::uint64_t b = a; a * b <= 100; b += a) {
        out.push_back(z(a) + "x" + z(b));
        for (std::uint64_t c = b; a * b * c <= 100; c += b) out.push_back(z(a) + "x" + z(b) + "x" + z(c));
      }
    std::vector<std::pair<std::string, std::uint64_t>> nonabelian;
    for (std::uint64_t n = 6; n <= 100; n += 2) nonabelian.emplace_back("D(" + std::to_string(n) + ")", n);
    for (std::uint64_t n : {8, 16, 32, 64}) nonabelian.emplace_back("Q(" + std::to_string(n) + ")", n);
    for (std::uint64_t n : {16, 32, 64}) nonabelian.emplace_back("SD(" + std::to_string(n) + ")", n);
    nonabelian.insert(nonabelian.end(), {{"M(2,4)", 16}, {"M(2,5)", 32}, {"M(2,6)", 64}, {"M(3,3)", 27},
                                         {"Heis(3)", 27}, {"S(3)", 6}, {"A(4)", 12}, {"S(4)", 24},
                                         {"A(5)", 60}});
    for (const auto& [name, order] : nonabelian) out.push_back(name);
    for (const auto& [name, order] : nonabelian)
      for (std::uint64_t m = 2; order * m <= 100; ++m) out.push_back(name + "x" + z(m));
    for (const auto& [name, order] : nonabelian)
      if (order * 4 <= 100) out.push_back(name + "x" + z(2) + "x" + z(2));
    for (std::size_t i = 0; i < nonabelian.size(); ++i)
      for (std::size_t j = i; j < nonabelian.size(); ++j)
        if (nonabelian[i].second * nonabelian[j].second <= 100)
          out.push_back(nonabelian[i].first + "x" + nonabelian[j].first);
    out.push_back("S(5)");
    for (int k = 1; k <= 14; ++k) out.push_back("G16(" + std::to_string(k) + ")");
    return out;
  }();
  return corpus;
}

// Named catalogs for the command line.
inline std::vector<NamedGroup> named_catalog(const std::string& name, const BuildOptions& opt = {}) {
  if (name == "order16") return order16_catalog();
  if (name == "corpus") {
    std::vector<NamedGroup> out;
    for (const auto& text : standard_corpus()) {
      auto g = build_group(text, opt);
      g.name = text;
      out.push_back(std::move(g));
    }
    return out;
  }
  fail(ErrorKind::InvalidParameter, "unknown catalog '" + name + "' (known: order16, corpus)");
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {
// Vertex accounting: phi(order(v)) vertices carry each node and
// the counts add up to the group order.
template <typename Labeled>
std::string label_count_problem(const CyclicLattice& l, const Labeled& g, std::size_t group_order) {
  std::vector<std::uint64_t> count(l.size(), 0);
  for (const auto& lab : g.labels) ++count.at(lab.node.value);
  std::uint64_t total = 0;
  for (std::uint32_t v = 0; v < l.size(); ++v) {
    if (count[v] != totient(l.order(LatticeNodeId(v))))
      return "node " + std::to_string(v) + " carries " + std::to_string(count[v]) + " vertices";
    total += count[v];
  }
  if (total != group_order) return "vertex total " + std::to_string(total) + " differs from |G|";
  return {};
}

inline CheckResult run_check(std::string name, const std::function<std::string()>& body) {
  CheckResult r{std::move(name), false, {}};
  try {
    r.detail = body();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}
}  // namespace detail

// Runs all five reconstructions for g and compares each with the graph or
// lattice computed directly from the multiplication table.
inline std::vector<CheckResult> roundtrip_checks(const FiniteGroup& g, const IsoOptions& opt = {}) {
  const auto ls = build_lattice(g);
  const auto& lat = ls.lattice;
  const auto labels = oracle_labeling(g, ls);
  std::vector<CheckResult> out;

  out.push_back(detail::run_check("lattice-from-epow", [&]() -> std::string {
    const auto rebuilt = lattice_from_epow(epow_oracle(g), {true, opt});
    if (!labeled_lattice_isomorphism(rebuilt, lat, opt).found) return "lattices are not isomorphic";
    return {};
  }));

  out.push_back(detail::run_check("epow-from-lattice", [&]() -> std::string {
    const auto rec = epow_from_lattice(lat);
    if (auto p = detail::label_count_problem(lat, rec, g.order()); !p.empty()) return p;
    if (!equal_up_to_generator_indices(rec.graph, rec.labels, epow_oracle(g), labels, opt))
      return "reconstruction differs from the enhanced power graph";
    return {};
  }));

  out.push_back(detail::run_check("pow-from-lattice", [&]() -> std::string {
    const auto rec = pow_from_lattice(lat);
    if (auto p = detail::label_count_problem(lat, rec, g.order()); !p.empty()) return p;
    if (!equal_up_to_generator_indices(rec.graph, rec.labels, pow_oracle(g), labels, opt))
      return "reconstruction differs from the power graph";
    return {};
  }));

  out.push_back(detail::run_check("dirpow-from-lattice", [&]() -> std::string {
    const auto rec = dirpow_from_lattice(lat);
    if (auto p = detail::label_count_problem(lat, rec, g.order()); !p.empty()) return p;
    if (!equal_up_to_generator_indices(rec.graph, rec.labels, dirpow_oracle(g), labels, opt))
      return "reconstruction differs from the directed power graph";
    return {};
  }));

  out.push_back(detail::run_check("diff-from-lattice", [&]() -> std::string {
    const auto rec = diff_from_lattice(lat);
    const auto direct = diff_incomparability(lat);
    if (!(rec.graph == direct.graph && rec.labels == direct.labels))
      return "difference graph disagrees with the incomparability rule";
    const auto oracle = diff_oracle(g);
    std::vector<CanonicalLabel> oracle_labels;
    for (ElementId x : oracle.original) oracle_labels.push_back(labels[x.value]);
    if (!equal_up_to_generator_indices(rec.graph, rec.labels, oracle.graph, oracle_labels, opt))
      return "reconstruction differs from the difference graph";
    return {};
  }));
  return out;
}

}  // namespace latgraph
