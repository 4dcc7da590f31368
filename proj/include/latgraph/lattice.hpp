#pragma once

// Order-labeled Hasse diagrams of cyclic subgroup lattices.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "latgraph/arith.hpp"
#include "latgraph/error.hpp"
#include "latgraph/group.hpp"
#include "latgraph/ids.hpp"

namespace latgraph {

struct LatticeNode {
  LatticeNodeId id;
  std::uint64_t order = 0;
  friend bool operator==(const LatticeNode&, const LatticeNode&) = default;
};

// (lower, upper)
using Cover = std::pair<LatticeNodeId, LatticeNodeId>;

// Nodes carry the order of their subgroup; covers are the Hasse edges.
// Construction only checks that ids are in range; structural invariants are
// checked by validate_lattice.
class CyclicLattice {
 public:
  CyclicLattice() = default;

  CyclicLattice(const std::vector<std::uint64_t>& orders, std::vector<Cover> covers) {
    for (std::size_t i = 0; i < orders.size(); ++i)
      nodes_.push_back({LatticeNodeId(std::uint32_t(i)), orders[i]});
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    lower_.resize(orders.size());
    upper_.resize(orders.size());
    for (const auto& [lo, hi] : covers) {
      if (lo.value >= orders.size() || hi.value >= orders.size())
        fail(ErrorKind::InvalidLattice, "cover (" + std::to_string(lo.value) + "," +
                                            std::to_string(hi.value) + ") references a missing node");
      lower_[hi.value].push_back(lo);
      upper_[lo.value].push_back(hi);
    }
    covers_ = std::move(covers);
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  const std::vector<LatticeNode>& nodes() const noexcept { return nodes_; }
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  std::uint64_t order(LatticeNodeId v) const { return nodes_.at(v.value).order; }
  const std::vector<LatticeNodeId>& lower_covers(LatticeNodeId v) const { return lower_.at(v.value); }
  const std::vector<LatticeNodeId>& upper_covers(LatticeNodeId v) const { return upper_.at(v.value); }

  // The node of order 1 when there is exactly one.
  std::optional<LatticeNodeId> bottom() const {
    std::optional<LatticeNodeId> found;
    for (const auto& n : nodes_) {
      if (n.order != 1) continue;
      if (found) return std::nullopt;
      found = n.id;
    }
    return found;
  }

  std::vector<std::uint64_t> orders() const {
    std::vector<std::uint64_t> out;
    for (const auto& n : nodes_) out.push_back(n.order);
    return out;
  }

  friend bool operator==(const CyclicLattice& a, const CyclicLattice& b) {
    return a.nodes_ == b.nodes_ && a.covers_ == b.covers_;
  }

 private:
  std::vector<LatticeNode> nodes_;
  std::vector<Cover> covers_;
  std::vector<std::vector<LatticeNodeId>> lower_, upper_;
};

// Lattice plus the subgroup behind each node (index = node id).
struct LatticeWithSubgroups {
  CyclicLattice lattice;
  std::vector<CyclicSubgroup> subgroups;

  const CyclicSubgroup& subgroup_of(LatticeNodeId v) const { return subgroups.at(v.value); }
};

// One node per cyclic subgroup, in (order, member list) order. H is covered
// by K iff H is a subset of K and |K|/|H| is prime.
inline LatticeWithSubgroups build_lattice(const FiniteGroup& g) {
  LatticeWithSubgroups out;
  out.subgroups = cyclic_subgroups(g);
  const auto& subs = out.subgroups;
  std::vector<std::uint64_t> orders;
  for (const auto& s : subs) orders.push_back(s.order);
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = 0; j < subs.size(); ++j) {
      if (subs[j].order <= subs[i].order || subs[j].order % subs[i].order != 0) continue;
      if (!is_prime(subs[j].order / subs[i].order)) continue;
      if (subs[i].is_subset_of(subs[j]))
        covers.emplace_back(LatticeNodeId(std::uint32_t(i)), LatticeNodeId(std::uint32_t(j)));
    }
  out.lattice = CyclicLattice(orders, std::move(covers));
  return out;
}

inline std::vector<LatticeNodeId> predecessors(const CyclicLattice& l, LatticeNodeId v) {
  auto out = l.lower_covers(v);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
inline boost::dynamic_bitset<> down_set_bits(const CyclicLattice& l, LatticeNodeId v) {
  boost::dynamic_bitset<> seen(l.size());
  std::vector<LatticeNodeId> stack{v};
  seen.set(v.value);
  while (!stack.empty()) {
    const LatticeNodeId u = stack.back();
    stack.pop_back();
    for (LatticeNodeId w : l.lower_covers(u))
      if (!seen.test(w.value)) {
        seen.set(w.value);
        stack.push_back(w);
      }
  }
  return seen;
}

inline std::vector<LatticeNodeId> bits_to_ids(const boost::dynamic_bitset<>& bits) {
  std::vector<LatticeNodeId> out;
  for (auto i = bits.find_first(); i != boost::dynamic_bitset<>::npos; i = bits.find_next(i))
    out.emplace_back(std::uint32_t(i));
  return out;
}
}  // namespace detail

// Nodes below or equal to v, sorted by id.
inline std::vector<LatticeNodeId> down_set(const CyclicLattice& l, LatticeNodeId v) {
  return detail::bits_to_ids(detail::down_set_bits(l, v));
}

struct LatticeViolation {
  std::string code;
  std::string message;
};

struct LatticeReport {
  std::vector<LatticeViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(const std::string& code) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const auto& v) { return v.code == code; });
  }
  std::string summary() const {
    std::string s;
    for (const auto& v : violations) s += (s.empty() ? "" : "; ") + v.code + ": " + v.message;
    return s;
  }
};

namespace detail {
// Kahn order over covers; empty optional when the covers contain a cycle.
inline std::optional<std::vector<LatticeNodeId>> topological_order(const CyclicLattice& l) {
  std::vector<std::size_t> indeg(l.size());
  for (const auto& [lo, hi] : l.covers()) ++indeg[hi.value];
  std::vector<LatticeNodeId> ready, out;
  for (std::uint32_t v = 0; v < l.size(); ++v)
    if (indeg[v] == 0) ready.emplace_back(v);
  while (!ready.empty()) {
    const LatticeNodeId v = ready.back();
    ready.pop_back();
    out.push_back(v);
    for (LatticeNodeId w : l.upper_covers(v))
      if (--indeg[w.value] == 0) ready.push_back(w);
  }
  if (out.size() != l.size()) return std::nullopt;
  return out;
}
}  // namespace detail

// Checks every structural invariant of a cyclic subgroup lattice and
// reports all violations found.
inline LatticeReport validate_lattice(const CyclicLattice& l) {
  LatticeReport rep;
  auto add = [&](std::string code, std::string msg) {
    rep.violations.push_back({std::move(code), std::move(msg)});
  };
  const auto id = [](LatticeNodeId v) { return std::to_string(v.value); };

  if (l.size() == 0) {
    add("empty lattice", "no nodes");
    return rep;
  }

  std::vector<LatticeNodeId> ones;
  for (const auto& n : l.nodes()) {
    if (n.order == 0) add("zero order", "node " + id(n.id) + " has order 0");
    if (n.order == 1) ones.push_back(n.id);
  }
  if (ones.empty()) add("no bottom", "no node of order 1");
  if (ones.size() > 1) add("multiple bottoms", std::to_string(ones.size()) + " nodes of order 1");

  for (const auto& [lo, hi] : l.covers()) {
    const auto a = l.order(lo), b = l.order(hi);
    if (lo == hi) {
      add("self cover", "node " + id(lo));
      continue;
    }
    if (a == 0 || b == 0) continue;
    if (b % a != 0 || b == a)
      add("non-dividing cover", "(" + id(lo) + "," + id(hi) + ") orders " + std::to_string(a) +
                                    " -> " + std::to_string(b));
    else if (!is_prime(b / a))
      add("non-prime cover quotient", "(" + id(lo) + "," + id(hi) + ") orders " +
                                          std::to_string(a) + " -> " + std::to_string(b));
  }
  for (const auto& n : l.nodes())
    if (n.order != 1 && l.lower_covers(n.id).empty())
      add("extra minimal element", "node " + id(n.id) + " of order " + std::to_string(n.order) +
                                       " has no lower cover");
  for (LatticeNodeId b : ones)
    if (!l.lower_covers(b).empty()) add("bottom not minimal", "node " + id(b) + " has lower covers");

  const auto topo = detail::topological_order(l);
  if (!topo) {
    add("cyclic covers", "the cover relation contains a cycle");
    return rep;
  }
  if (!rep.ok()) return rep;  // down-set checks assume sane covers

  std::vector<boost::dynamic_bitset<>> down(l.size());
  for (std::uint32_t v = 0; v < l.size(); ++v) down[v] = detail::down_set_bits(l, LatticeNodeId(v));

  for (std::uint32_t v = 0; v < l.size(); ++v) {
    const std::uint64_t n = l.order(LatticeNodeId(v));
    const auto members = detail::bits_to_ids(down[v]);
    std::vector<std::uint64_t> got;
    for (LatticeNodeId u : members) got.push_back(l.order(u));
    std::sort(got.begin(), got.end());
    if (got != divisors(n)) {
      add("down-set not divisor poset",
          "node " + std::to_string(v) + " of order " + std::to_string(n) + " has " +
              std::to_string(members.size()) + " nodes below it, expected one per divisor");
      continue;
    }
    for (LatticeNodeId u : members)
      for (std::uint64_t p : prime_factors(n)) {
        const std::uint64_t want = l.order(u) * p;
        if (n % want != 0) continue;
        const auto& ups = l.upper_covers(u);
        const bool linked = std::any_of(ups.begin(), ups.end(), [&](LatticeNodeId w) {
          return down[v].test(w.value) && l.order(w) == want;
        });
        if (!linked)
          add("down-set not divisor poset", "below node " + std::to_string(v) + ", node " + id(u) +
                                                " lacks a cover of order " + std::to_string(want));
      }
  }
  if (!rep.ok()) return rep;

  for (std::uint32_t a = 0; a < l.size(); ++a)
    for (std::uint32_t b = a + 1; b < l.size(); ++b) {
      const auto common = down[a] & down[b];
      bool has_meet = false;
      for (auto m = common.find_first(); m != boost::dynamic_bitset<>::npos && !has_meet;
           m = common.find_next(m))
        has_meet = down[m] == common;
      if (!has_meet)
        add("missing meet", "nodes " + std::to_string(a) + " and " + std::to_string(b) +
                                " have no greatest lower bound");
    }
  return rep;
}

inline void require_valid(const CyclicLattice& l) {
  const auto rep = validate_lattice(l);
  if (!rep.ok()) fail(ErrorKind::InvalidLattice, rep.summary());
}

// Stage 0 is the bottom; a node enters the stage after the last of its
// predecessors (longest cover path from the bottom).
inline std::vector<std::vector<LatticeNodeId>> levelize(const CyclicLattice& l) {
  const auto bottom = l.bottom();
  if (!bottom) fail(ErrorKind::InvalidLattice, "lattice has no unique node of order 1");
  const auto topo = detail::topological_order(l);
  if (!topo) fail(ErrorKind::InvalidLattice, "the cover relation contains a cycle");
  std::vector<std::size_t> stage(l.size(), 0);
  std::size_t last = 0;
  for (LatticeNodeId v : *topo) {
    std::size_t s = v == *bottom ? 0 : 1;
    for (LatticeNodeId u : l.lower_covers(v)) s = std::max(s, stage[u.value] + 1);
    stage[v.value] = s;
    last = std::max(last, s);
  }
  std::vector<std::vector<LatticeNodeId>> out(last + 1);
  for (std::uint32_t v = 0; v < l.size(); ++v) out[stage[v]].emplace_back(v);
  return out;
}

}  // namespace latgraph
