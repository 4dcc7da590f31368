#pragma once

// Finite groups given by their multiplication tables, plus element orders and
// cyclic subgroups.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "latgraph/error.hpp"
#include "latgraph/ids.hpp"

namespace latgraph {

inline constexpr std::size_t kDefaultMaxOrder = 512;

enum class GroupDefect {
  EmptyTable,
  NotSquare,
  NotClosed,
  NoIdentity,
  MissingInverse,
  NotAssociative,
};

inline const char* to_string(GroupDefect d) {
  switch (d) {
    case GroupDefect::EmptyTable: return "EmptyTable";
    case GroupDefect::NotSquare: return "NotSquare";
    case GroupDefect::NotClosed: return "NotClosed";
    case GroupDefect::NoIdentity: return "NoIdentity";
    case GroupDefect::MissingInverse: return "MissingInverse";
    case GroupDefect::NotAssociative: return "NotAssociative";
  }
  return "?";
}

// A table that fails a group axiom. `witness` holds the offending entries
// (row/col for NotClosed and NotSquare, x for MissingInverse, x,y,z for
// NotAssociative).
class GroupTableError : public Error {
 public:
  GroupTableError(GroupDefect defect, std::vector<std::int64_t> witness)
      : Error(ErrorKind::InvalidGroup, describe(defect, witness)),
        defect_(defect),
        witness_(std::move(witness)) {}

  GroupDefect defect() const noexcept { return defect_; }
  const std::vector<std::int64_t>& witness() const noexcept { return witness_; }

 private:
  static std::string describe(GroupDefect defect, const std::vector<std::int64_t>& w) {
    std::string s = std::string(to_string(ErrorKind::InvalidGroup)) + ": " + to_string(defect);
    if (!w.empty()) {
      s += "(";
      for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
      s += ")";
    }
    return s;
  }

  GroupDefect defect_;
  std::vector<std::int64_t> witness_;
};

// Immutable group of order n on element ids 0..n-1. Only validate_group can
// make one, so every instance satisfies the group axioms.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return n_; }
  ElementId identity() const noexcept { return identity_; }

  ElementId mul(ElementId x, ElementId y) const noexcept {
    return ElementId(table_[std::size_t(x.value) * n_ + y.value]);
  }
  ElementId inverse(ElementId x) const noexcept { return ElementId(inverse_[x.value]); }

  ElementId power(ElementId x, std::uint64_t k) const noexcept {
    ElementId acc = identity_;
    for (; k > 0; --k) acc = mul(acc, x);
    return acc;
  }

  std::span<const std::uint32_t> row(ElementId x) const noexcept {
    return {table_.data() + std::size_t(x.value) * n_, n_};
  }

  std::vector<std::vector<std::uint32_t>> table() const {
    std::vector<std::vector<std::uint32_t>> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      out[i].assign(table_.begin() + i * n_, table_.begin() + (i + 1) * n_);
    return out;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  friend FiniteGroup validate_group(std::size_t, std::vector<std::uint32_t>, std::size_t);

  FiniteGroup() = default;

  std::size_t n_ = 0;
  std::vector<std::uint32_t> table_;
  ElementId identity_;
  std::vector<std::uint32_t> inverse_;
};

// Checks every axiom on a flat row-major n*n table. Associativity is the full
// triple loop, so tables above `max_order` are refused with TooLarge.
inline FiniteGroup validate_group(std::size_t n, std::vector<std::uint32_t> flat,
                                  std::size_t max_order = kDefaultMaxOrder) {
  if (n == 0) throw GroupTableError(GroupDefect::EmptyTable, {});
  if (flat.size() != n * n) throw GroupTableError(GroupDefect::NotSquare, {});
  if (n > max_order)
    fail(ErrorKind::TooLarge, "group order " + std::to_string(n) + " exceeds cap " +
                                  std::to_string(max_order));
  for (std::size_t i = 0; i < flat.size(); ++i)
    if (flat[i] >= n)
      throw GroupTableError(GroupDefect::NotClosed,
                            {std::int64_t(i / n), std::int64_t(i % n)});

  auto at = [&](std::size_t x, std::size_t y) { return flat[x * n + y]; };

  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = at(c, x) == x && at(x, c) == x;
    if (ok) e = c;
  }
  if (e == n) throw GroupTableError(GroupDefect::NoIdentity, {});

  std::vector<std::uint32_t> inv(n, std::uint32_t(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y)
      if (at(x, y) == e && at(y, x) == e) {
        inv[x] = std::uint32_t(y);
        break;
      }
    if (inv[x] == n) throw GroupTableError(GroupDefect::MissingInverse, {std::int64_t(x)});
  }

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = at(x, y);
      for (std::size_t z = 0; z < n; ++z)
        if (at(xy, z) != at(x, at(y, z)))
          throw GroupTableError(GroupDefect::NotAssociative,
                                {std::int64_t(x), std::int64_t(y), std::int64_t(z)});
    }

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(flat);
  g.identity_ = ElementId(std::uint32_t(e));
  g.inverse_ = std::move(inv);
  return g;
}

// Nested-vector entry point used by file ingestion and tests.
inline FiniteGroup validate_group(const std::vector<std::vector<std::int64_t>>& table,
                                  std::size_t max_order = kDefaultMaxOrder) {
  const std::size_t n = table.size();
  if (n == 0) throw GroupTableError(GroupDefect::EmptyTable, {});
  std::vector<std::uint32_t> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) throw GroupTableError(GroupDefect::NotSquare, {std::int64_t(i)});
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = table[i][j];
      if (v < 0 || std::uint64_t(v) >= n)
        throw GroupTableError(GroupDefect::NotClosed, {std::int64_t(i), std::int64_t(j)});
      flat.push_back(std::uint32_t(v));
    }
  }
  return validate_group(n, std::move(flat), max_order);
}

inline std::uint64_t element_order(const FiniteGroup& g, ElementId x) {
  std::uint64_t k = 1;
  for (ElementId y = x; y != g.identity(); y = g.mul(y, x)) ++k;
  return k;
}

inline std::vector<std::uint64_t> element_orders(const FiniteGroup& g) {
  std::vector<std::uint64_t> out(g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) out[x] = element_order(g, ElementId(x));
  return out;
}

struct CyclicSubgroup {
  std::uint64_t order = 0;
  std::vector<ElementId> members;     // sorted
  std::vector<ElementId> generators;  // sorted

  bool contains(ElementId x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  bool is_subset_of(const CyclicSubgroup& other) const {
    return std::includes(other.members.begin(), other.members.end(), members.begin(),
                         members.end());
  }

  friend bool operator==(const CyclicSubgroup&, const CyclicSubgroup&) = default;
};

inline CyclicSubgroup generated_subgroup(const FiniteGroup& g, ElementId x) {
  CyclicSubgroup c;
  ElementId y = g.identity();
  do {
    c.members.push_back(y);
    y = g.mul(y, x);
  } while (y != g.identity());
  c.order = c.members.size();
  std::sort(c.members.begin(), c.members.end());
  for (ElementId m : c.members)
    if (element_order(g, m) == c.order) c.generators.push_back(m);
  return c;
}

namespace detail {
inline bool subgroup_less(const CyclicSubgroup& a, const CyclicSubgroup& b) {
  if (a.order != b.order) return a.order < b.order;
  return a.members < b.members;
}
}  // namespace detail

// All distinct cyclic subgroups sorted by (order, member list).
inline std::vector<CyclicSubgroup> cyclic_subgroups(const FiniteGroup& g) {
  std::vector<CyclicSubgroup> out;
  std::vector<bool> seen(g.order(), false);
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    CyclicSubgroup c = generated_subgroup(g, ElementId(x));
    // every generator of <x> generates the same subgroup
    for (ElementId gen : c.generators) seen[gen.value] = true;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), detail::subgroup_less);
  return out;
}

inline std::vector<CyclicSubgroup> maximal_cyclic_subgroups(const FiniteGroup& g) {
  auto all = cyclic_subgroups(g);
  std::vector<CyclicSubgroup> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < all.size() && maximal; ++j)
      if (all[j].order > all[i].order && all[i].is_subset_of(all[j])) maximal = false;
    if (maximal) out.push_back(all[i]);
  }
  return out;
}

inline bool is_abelian(const FiniteGroup& g) {
  for (std::uint32_t x = 0; x < g.order(); ++x)
    for (std::uint32_t y = x + 1; y < g.order(); ++y)
      if (g.mul(ElementId(x), ElementId(y)) != g.mul(ElementId(y), ElementId(x))) return false;
  return true;
}

// Element order -> number of elements of that order.
inline std::map<std::uint64_t, std::uint64_t> order_statistics(const FiniteGroup& g) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (std::uint64_t o : element_orders(g)) ++out[o];
  return out;
}

}  // namespace latgraph
