#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "latgraph/catalog.hpp"
#include "latgraph/group.hpp"
#include "latgraph/group_expr.hpp"

using namespace latgraph;

namespace {

using Table = std::vector<std::vector<std::int64_t>>;

GroupDefect defect_of(const Table& t, std::size_t cap = kDefaultMaxOrder) {
  try {
    validate_group(t, cap);
  } catch (const GroupTableError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidGroup);
    return e.defect();
  }
  ADD_FAILURE() << "table was accepted";
  return GroupDefect::EmptyTable;
}

// Element orders by repeated multiplication, written independently of the
// library: smallest k with x^k = e.
std::map<std::uint64_t, std::uint64_t> brute_order_stats(const FiniteGroup& g) {
  std::map<std::uint64_t, std::uint64_t> out;
  const auto t = g.table();
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    std::uint32_t y = x;
    std::uint64_t k = 1;
    while (y != g.identity().value) {
      y = t[y][x];
      ++k;
    }
    ++out[k];
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> subgroup_size_histogram(const std::vector<CyclicSubgroup>& cs) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& c : cs) ++out[c.order];
  return out;
}

}  // namespace

TEST(ValidateGroup, AcceptsZ2WithNonzeroIdentity) {
  const auto g = validate_group(Table{{1, 0}, {0, 1}});
  EXPECT_EQ(g.order(), 2u);
  EXPECT_EQ(g.identity(), ElementId(1));
}

TEST(ValidateGroup, ReportsEachDefect) {
  EXPECT_EQ(defect_of({}), GroupDefect::EmptyTable);
  EXPECT_EQ(defect_of({{0, 1}, {1}}), GroupDefect::NotSquare);
  EXPECT_EQ(defect_of({{0, 2}, {1, 0}}), GroupDefect::NotClosed);
  EXPECT_EQ(defect_of({{0, -1}, {1, 0}}), GroupDefect::NotClosed);
  EXPECT_EQ(defect_of({{0, 0}, {0, 0}}), GroupDefect::NoIdentity);
  EXPECT_EQ(defect_of({{0, 1}, {1, 1}}), GroupDefect::MissingInverse);
  // A Latin square with identity and inverses that is not associative
  // (every element is an involution, impossible in a group of order 5).
  EXPECT_EQ(defect_of({{0, 1, 2, 3, 4},
                       {1, 0, 3, 4, 2},
                       {2, 4, 0, 1, 3},
                       {3, 2, 4, 0, 1},
                       {4, 3, 1, 2, 0}}),
            GroupDefect::NotAssociative);
}

TEST(ValidateGroup, OrderCap) {
  Table z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  try {
    validate_group(z3, 2);
    FAIL() << "expected TooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
  EXPECT_EQ(validate_group(z3, 3).order(), 3u);
}

TEST(ElementOrders, CyclicAndProduct) {
  EXPECT_EQ(order_statistics(cyclic_group(6).group),
            (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}, {3, 2}, {6, 2}}));
  const auto c2c6 = build_group("Z(2)xZ(6)").group;
  EXPECT_EQ(order_statistics(c2c6), (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}, {3, 2}, {6, 6}}));
}

TEST(ElementOrders, AgreeWithBruteForce) {
  for (const char* e : {"Z(12)", "Z(2)xZ(6)", "D(10)", "Q(16)", "SD(16)", "M(2,4)", "Heis(3)", "S(4)", "A(5)"}) {
    const auto g = build_group(e).group;
    EXPECT_EQ(order_statistics(g), brute_order_stats(g)) << e;
  }
}

TEST(GeneratedSubgroup, ElementOfOrderThreeInZ6) {
  const auto g = cyclic_group(6).group;
  const auto c = generated_subgroup(g, ElementId(2));
  EXPECT_EQ(c.order, 3u);
  EXPECT_EQ(c.members, (std::vector<ElementId>{ElementId(0), ElementId(2), ElementId(4)}));
  EXPECT_EQ(c.generators, (std::vector<ElementId>{ElementId(2), ElementId(4)}));
}

TEST(GeneratedSubgroup, IdentityIsTrivial) {
  const auto g = build_group("S(4)").group;
  const auto c = generated_subgroup(g, g.identity());
  EXPECT_EQ(c.order, 1u);
  EXPECT_EQ(c.generators, std::vector<ElementId>{g.identity()});
}

TEST(CyclicSubgroups, CountInZ12IsDivisorCount) {
  EXPECT_EQ(cyclic_subgroups(cyclic_group(12).group).size(), 6u);
  EXPECT_EQ(cyclic_subgroups(cyclic_group(1).group).size(), 1u);
}

TEST(CyclicSubgroups, C2xC6) {
  const auto g = build_group("Z(2)xZ(6)").group;
  EXPECT_EQ(subgroup_size_histogram(cyclic_subgroups(g)),
            (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}, {3, 1}, {6, 3}}));
  const auto maxi = maximal_cyclic_subgroups(g);
  ASSERT_EQ(maxi.size(), 3u);
  for (const auto& m : maxi) EXPECT_EQ(m.order, 6u);
}

TEST(CyclicSubgroups, S4MaximalCensus) {
  const auto maxi = maximal_cyclic_subgroups(build_group("S(4)").group);
  EXPECT_EQ(maxi.size(), 13u);
  EXPECT_EQ(subgroup_size_histogram(maxi), (std::map<std::uint64_t, std::uint64_t>{{2, 6}, {3, 4}, {4, 3}}));
}

TEST(CyclicSubgroups, TotientSumAndMaximalCover) {
  for (const char* e : {"Z(1)", "Z(30)", "Z(3)xZ(3)xZ(3)", "D(12)", "Q(8)", "Q(32)", "SD(32)", "M(3,3)", "S(4)",
                        "A(4)xZ(2)"}) {
    const auto g = build_group(e).group;
    const auto all = cyclic_subgroups(g);
    const auto maxi = maximal_cyclic_subgroups(g);
    std::uint64_t phi_sum = 0;
    for (const auto& c : all) {
      phi_sum += c.generators.size();
      EXPECT_EQ(c.generators.size(), totient(c.order)) << e;
      EXPECT_TRUE(std::any_of(maxi.begin(), maxi.end(), [&](const auto& m) { return c.is_subset_of(m); })) << e;
    }
    EXPECT_EQ(phi_sum, g.order()) << e;
  }
}

TEST(CyclicSubgroups, DistinctAndSorted) {
  const auto all = cyclic_subgroups(build_group("D(8)xZ(2)").group);
  std::set<std::vector<ElementId>> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_TRUE(seen.insert(all[i].members).second);
    if (i) {
      EXPECT_LE(all[i - 1].order, all[i].order);
    }
  }
}

TEST(Abelian, Basic) {
  EXPECT_TRUE(is_abelian(build_group("Z(2)xZ(6)").group));
  EXPECT_TRUE(is_abelian(build_group("Z(3)xZ(3)xZ(3)").group));
  EXPECT_FALSE(is_abelian(build_group("Heis(3)").group));
  EXPECT_FALSE(is_abelian(build_group("S(3)").group));
}

TEST(FiniteGroup, InverseAndPower) {
  const auto g = build_group("S(4)").group;
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    const ElementId e(x);
    EXPECT_EQ(g.mul(e, g.inverse(e)), g.identity());
    EXPECT_EQ(g.power(e, element_order(g, e)), g.identity());
  }
}
