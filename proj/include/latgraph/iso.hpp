#pragma once

// Isomorphism tests for graphs, digraphs and order-labeled lattices, and the
// four-way comparison of two groups through their power-type graphs and
// cyclic subgroup lattices.
//
// Everything reduces to vertex-colored digraph isomorphism: colour
// refinement prunes, a backtracking search builds the mapping, and the
// mapping is re-checked arc by arc before it is reported.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "latgraph/error.hpp"
#include "latgraph/graph.hpp"
#include "latgraph/group.hpp"
#include "latgraph/lattice.hpp"
#include "latgraph/power_graphs.hpp"

namespace latgraph {

inline constexpr std::uint64_t kDefaultIsoBudget = 10'000'000;

struct IsoOptions {
  // Maximum number of candidate pairings the search may try.
  std::uint64_t budget = kDefaultIsoBudget;
};

struct IsoResult {
  bool found = false;
  // mapping[v] is the image in the second structure of v in the first.
  std::optional<std::vector<std::uint32_t>> mapping;
};

namespace detail {

struct ColoredDigraph {
  using Bits = boost::dynamic_bitset<>;

  std::size_t n = 0;
  std::vector<Bits> out, in;
  std::vector<std::uint64_t> color;

  ColoredDigraph(std::size_t size, std::vector<std::uint64_t> colors)
      : n(size), out(size, Bits(size)), in(size, Bits(size)), color(std::move(colors)) {
    if (color.empty()) color.assign(n, 0);
  }

  void add_arc(std::size_t u, std::size_t v) {
    out[u].set(v);
    in[v].set(u);
  }

  std::size_t arc_count() const {
    std::size_t c = 0;
    for (const auto& b : out) c += b.count();
    return c;
  }
};

inline ColoredDigraph from_graph(const SimpleGraph& g, std::vector<std::uint64_t> colors) {
  ColoredDigraph d(g.vertex_count(), std::move(colors));
  for (auto [u, v] : g.edges()) {
    d.add_arc(u, v);
    d.add_arc(v, u);
  }
  return d;
}

inline ColoredDigraph from_digraph(const Digraph& g, std::vector<std::uint64_t> colors) {
  ColoredDigraph d(g.vertex_count(), std::move(colors));
  for (auto [u, v] : g.arcs()) d.add_arc(u, v);
  return d;
}

inline ColoredDigraph from_lattice(const CyclicLattice& l, bool with_orders) {
  std::vector<std::uint64_t> colors(l.size(), 0);
  if (with_orders) colors = l.orders();
  ColoredDigraph d(l.size(), std::move(colors));
  for (auto [lo, hi] : l.covers()) d.add_arc(lo.value, hi.value);
  return d;
}

// Joint colour refinement of both digraphs so that colours are comparable.
// Returns false when the colour histograms differ.
inline bool refine_colors(const ColoredDigraph& a, const ColoredDigraph& b,
                          std::vector<std::uint32_t>& ca, std::vector<std::uint32_t>& cb) {
  using Key = std::vector<std::uint64_t>;
  const ColoredDigraph* gs[2] = {&a, &b};
  std::vector<std::uint32_t>* cs[2] = {&ca, &cb};

  {
    std::map<Key, std::uint32_t> ids;
    for (int s = 0; s < 2; ++s) {
      cs[s]->assign(gs[s]->n, 0);
      for (std::size_t v = 0; v < gs[s]->n; ++v) {
        Key k{gs[s]->color[v], gs[s]->out[v].count(), gs[s]->in[v].count()};
        (*cs[s])[v] = ids.emplace(k, std::uint32_t(ids.size())).first->second;
      }
    }
  }

  std::size_t classes = 0;
  for (;;) {
    std::map<Key, std::uint32_t> ids;
    std::vector<std::uint32_t> next[2];
    for (int s = 0; s < 2; ++s) {
      const auto& g = *gs[s];
      next[s].resize(g.n);
      for (std::size_t v = 0; v < g.n; ++v) {
        Key k{(*cs[s])[v]};
        Key outs, ins;
        for (auto w = g.out[v].find_first(); w != ColoredDigraph::Bits::npos; w = g.out[v].find_next(w))
          outs.push_back((*cs[s])[w]);
        for (auto w = g.in[v].find_first(); w != ColoredDigraph::Bits::npos; w = g.in[v].find_next(w))
          ins.push_back((*cs[s])[w]);
        std::sort(outs.begin(), outs.end());
        std::sort(ins.begin(), ins.end());
        k.push_back(outs.size());
        k.insert(k.end(), outs.begin(), outs.end());
        k.insert(k.end(), ins.begin(), ins.end());
        next[s][v] = ids.emplace(std::move(k), std::uint32_t(ids.size())).first->second;
      }
    }
    *cs[0] = std::move(next[0]);
    *cs[1] = std::move(next[1]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }

  std::vector<std::uint32_t> ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  return ha == hb;
}

inline bool verify_mapping(const ColoredDigraph& a, const ColoredDigraph& b,
                           const std::vector<std::uint32_t>& map) {
  if (map.size() != a.n || a.n != b.n) return false;
  std::vector<bool> hit(b.n, false);
  for (auto v : map) {
    if (v >= b.n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t u = 0; u < a.n; ++u) {
    if (a.color[u] != b.color[map[u]]) return false;
    if (a.out[u].count() != b.out[map[u]].count()) return false;
    for (auto w = a.out[u].find_first(); w != ColoredDigraph::Bits::npos; w = a.out[u].find_next(w))
      if (!b.out[map[u]].test(map[w])) return false;
  }
  return true;
}

class IsoSearch {
 public:
  using Bits = ColoredDigraph::Bits;

  IsoSearch(const ColoredDigraph& a, const ColoredDigraph& b, const IsoOptions& opt)
      : a_(a), b_(b), budget_(opt.budget) {}

  IsoResult run() {
    if (a_.n != b_.n || a_.arc_count() != b_.arc_count()) return {};
    if (!refine_colors(a_, b_, ca_, cb_)) return {};
    if (a_.n == 0) return {true, std::vector<std::uint32_t>{}};

    build_order();
    build_twins();
    map_.assign(a_.n, kUnmapped);
    used_.assign(b_.n, false);
    by_color_.clear();
    for (std::uint32_t v = 0; v < b_.n; ++v) by_color_[cb_[v]].push_back(v);

    if (!extend(0)) return {};
    if (!verify_mapping(a_, b_, map_))
      throw std::logic_error("isomorphism search produced a mapping that fails verification");
    return {true, map_};
  }

 private:
  static constexpr std::uint32_t kUnmapped = ~std::uint32_t(0);

  // Connected-first order, rarest colour first.
  void build_order() {
    std::map<std::uint32_t, std::size_t> freq;
    for (auto c : ca_) ++freq[c];
    std::vector<std::size_t> links(a_.n, 0);
    std::vector<bool> placed(a_.n, false);
    order_.clear();
    for (std::size_t step = 0; step < a_.n; ++step) {
      std::size_t best = a_.n;
      for (std::size_t v = 0; v < a_.n; ++v) {
        if (placed[v]) continue;
        if (best == a_.n || links[v] > links[best] ||
            (links[v] == links[best] && freq[ca_[v]] < freq[ca_[best]]))
          best = v;
      }
      placed[best] = true;
      order_.push_back(std::uint32_t(best));
      const Bits nb = a_.out[best] | a_.in[best];
      for (auto w = nb.find_first(); w != Bits::npos; w = nb.find_next(w)) ++links[w];
    }
  }

  // Vertices of b with identical open (or closed) neighbourhoods can be
  // swapped by an automorphism, so one failed pairing rules out the other.
  void build_twins() {
    auto classify = [&](bool closed) {
      std::map<std::pair<std::uint32_t, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>,
               std::uint32_t>
          ids;
      std::vector<std::uint32_t> out(b_.n);
      for (std::size_t v = 0; v < b_.n; ++v) {
        Bits o = b_.out[v], i = b_.in[v];
        if (closed) {
          o.set(v);
          i.set(v);
        }
        std::vector<std::size_t> ov, iv;
        for (auto w = o.find_first(); w != Bits::npos; w = o.find_next(w)) ov.push_back(w);
        for (auto w = i.find_first(); w != Bits::npos; w = i.find_next(w)) iv.push_back(w);
        out[v] = ids.emplace(std::make_pair(cb_[v], std::make_pair(ov, iv)), std::uint32_t(ids.size()))
                     .first->second;
      }
      return out;
    };
    open_twin_ = classify(false);
    closed_twin_ = classify(true);
  }

  bool consistent(std::uint32_t u, std::uint32_t v, std::size_t depth) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const std::uint32_t w = order_[k], mw = map_[w];
      if (a_.out[u].test(w) != b_.out[v].test(mw)) return false;
      if (a_.in[u].test(w) != b_.in[v].test(mw)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == a_.n) return true;
    const std::uint32_t u = order_[depth];
    std::set<std::uint32_t> failed_open, failed_closed;
    for (std::uint32_t v : by_color_[ca_[u]]) {
      if (used_[v]) continue;
      if (failed_open.count(open_twin_[v]) || failed_closed.count(closed_twin_[v])) continue;
      if (++spent_ > budget_)
        fail(ErrorKind::Timeout, "isomorphism search exceeded budget of " + std::to_string(budget_) +
                                     " candidate pairings");
      if (consistent(u, v, depth)) {
        map_[u] = v;
        used_[v] = true;
        if (extend(depth + 1)) return true;
        used_[v] = false;
        map_[u] = kUnmapped;
      }
      failed_open.insert(open_twin_[v]);
      failed_closed.insert(closed_twin_[v]);
    }
    return false;
  }

  const ColoredDigraph& a_;
  const ColoredDigraph& b_;
  std::uint64_t budget_;
  std::uint64_t spent_ = 0;
  std::vector<std::uint32_t> ca_, cb_, order_, map_, open_twin_, closed_twin_;
  std::vector<bool> used_;
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_color_;
};

inline IsoResult colored_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b,
                                     const IsoOptions& opt) {
  return IsoSearch(a, b, opt).run();
}

}  // namespace detail

inline IsoResult graph_isomorphism(const SimpleGraph& g1, const SimpleGraph& g2,
                                   const IsoOptions& opt = {}) {
  if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return {};
  return detail::colored_isomorphism(detail::from_graph(g1, {}), detail::from_graph(g2, {}), opt);
}

// Isomorphism that must also map each vertex to one of the same colour.
inline IsoResult colored_graph_isomorphism(const SimpleGraph& g1, const std::vector<std::uint64_t>& c1,
                                           const SimpleGraph& g2, const std::vector<std::uint64_t>& c2,
                                           const IsoOptions& opt = {}) {
  if (c1.size() != g1.vertex_count() || c2.size() != g2.vertex_count())
    fail(ErrorKind::InvalidParameter, "one colour per vertex required");
  return detail::colored_isomorphism(detail::from_graph(g1, c1), detail::from_graph(g2, c2), opt);
}

inline IsoResult digraph_isomorphism(const Digraph& d1, const Digraph& d2, const IsoOptions& opt = {}) {
  if (d1.vertex_count() != d2.vertex_count() || d1.arc_count() != d2.arc_count()) return {};
  return detail::colored_isomorphism(detail::from_digraph(d1, {}), detail::from_digraph(d2, {}), opt);
}

inline IsoResult colored_digraph_isomorphism(const Digraph& d1, const std::vector<std::uint64_t>& c1,
                                             const Digraph& d2, const std::vector<std::uint64_t>& c2,
                                             const IsoOptions& opt = {}) {
  if (c1.size() != d1.vertex_count() || c2.size() != d2.vertex_count())
    fail(ErrorKind::InvalidParameter, "one colour per vertex required");
  return detail::colored_isomorphism(detail::from_digraph(d1, c1), detail::from_digraph(d2, c2), opt);
}

// Node bijection preserving covers in both directions and node orders.
inline IsoResult labeled_lattice_isomorphism(const CyclicLattice& l1, const CyclicLattice& l2,
                                             const IsoOptions& opt = {}) {
  if (l1.size() != l2.size() || l1.covers().size() != l2.covers().size()) return {};
  return detail::colored_isomorphism(detail::from_lattice(l1, true), detail::from_lattice(l2, true), opt);
}

// Same, ignoring node orders.
inline IsoResult poset_isomorphism(const CyclicLattice& l1, const CyclicLattice& l2,
                                   const IsoOptions& opt = {}) {
  if (l1.size() != l2.size() || l1.covers().size() != l2.covers().size()) return {};
  return detail::colored_isomorphism(detail::from_lattice(l1, false), detail::from_lattice(l2, false), opt);
}

enum class IsoVerdict { Isomorphic, NotIsomorphic, Timeout };

inline const char* to_string(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic: return "true";
    case IsoVerdict::NotIsomorphic: return "false";
    case IsoVerdict::Timeout: return "timeout";
  }
  return "?";
}

template <typename Fn>
IsoVerdict verdict_of(Fn&& search) {
  try {
    return search().found ? IsoVerdict::Isomorphic : IsoVerdict::NotIsomorphic;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Timeout) return IsoVerdict::Timeout;
    throw;
  }
}

// The four structures whose isomorphism classes coincide for finite groups.
struct EquivalenceProfile {
  IsoVerdict lattice_iso = IsoVerdict::Timeout;
  IsoVerdict dirpow_iso = IsoVerdict::Timeout;
  IsoVerdict epow_iso = IsoVerdict::Timeout;
  IsoVerdict pow_iso = IsoVerdict::Timeout;

  bool any_timeout() const {
    return lattice_iso == IsoVerdict::Timeout || dirpow_iso == IsoVerdict::Timeout ||
           epow_iso == IsoVerdict::Timeout || pow_iso == IsoVerdict::Timeout;
  }
  bool all_equal() const {
    return lattice_iso == dirpow_iso && dirpow_iso == epow_iso && epow_iso == pow_iso;
  }
  bool all(IsoVerdict v) const { return all_equal() && lattice_iso == v; }
};

// The four structures compare_groups looks at, computed once per group so
// that many pairwise comparisons can share them.
struct GroupStructures {
  CyclicLattice lattice;
  Digraph dirpow;
  SimpleGraph epow;
  SimpleGraph pow;
};

inline GroupStructures group_structures(const FiniteGroup& g) {
  return {build_lattice(g).lattice, dirpow_oracle(g), epow_oracle(g), pow_oracle(g)};
}

inline EquivalenceProfile compare_structures(const GroupStructures& a, const GroupStructures& b,
                                             const IsoOptions& opt = {}) {
  EquivalenceProfile p;
  p.lattice_iso = verdict_of([&] { return labeled_lattice_isomorphism(a.lattice, b.lattice, opt); });
  p.dirpow_iso = verdict_of([&] { return digraph_isomorphism(a.dirpow, b.dirpow, opt); });
  p.epow_iso = verdict_of([&] { return graph_isomorphism(a.epow, b.epow, opt); });
  p.pow_iso = verdict_of([&] { return graph_isomorphism(a.pow, b.pow, opt); });
  return p;
}

inline EquivalenceProfile compare_groups(const FiniteGroup& g1, const FiniteGroup& g2,
                                         const IsoOptions& opt = {}) {
  return compare_structures(group_structures(g1), group_structures(g2), opt);
}

}  // namespace latgraph
