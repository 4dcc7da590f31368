#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>

#include "latgraph/catalog.hpp"
#include "latgraph/group_expr.hpp"

using namespace latgraph;
using Stats = std::map<std::uint64_t, std::uint64_t>;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidParameter;
}

ExprParseError parse_error(const std::string& text) {
  try {
    parse_group_expr(text);
  } catch (const ExprParseError& e) {
    return e;
  }
  ADD_FAILURE() << "'" << text << "' parsed";
  return ExprParseError(ParseDefect::Syntax, 0, "");
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("latgraph_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

GroupExprPtr random_expr(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 9 : 7);
  switch (pick(rng)) {
    case 0: return make_expr(expr::Cyclic{std::uniform_int_distribution<std::uint64_t>(1, 30)(rng)});
    case 1: return make_expr(expr::Dihedral{2 * std::uniform_int_distribution<std::uint64_t>(2, 20)(rng)});
    case 2: return make_expr(expr::GeneralizedQuaternion{8});
    case 3: return make_expr(expr::Semidihedral{16});
    case 4: return make_expr(expr::ModularGroup{2, 4});
    case 5: return make_expr(expr::Heisenberg{3});
    case 6: return make_expr(expr::Symmetric{std::uniform_int_distribution<std::uint64_t>(1, 5)(rng)});
    case 7: return make_expr(expr::Order16{std::uniform_int_distribution<std::uint64_t>(1, 14)(rng)});
    default: return make_expr(expr::DirectProduct{random_expr(rng, depth - 1), random_expr(rng, depth - 1)});
  }
}

}  // namespace

TEST(Parse, DirectProductOfCyclics) {
  const auto e = parse_group_expr("Z(2)xZ(6)");
  EXPECT_EQ(*e, *make_expr(expr::DirectProduct{make_expr(expr::Cyclic{2}), make_expr(expr::Cyclic{6})}));
}

TEST(Parse, ProductAssociatesLeftAndParenthesesGroup) {
  const auto z2 = make_expr(expr::Cyclic{2});
  const auto left = make_expr(expr::DirectProduct{make_expr(expr::DirectProduct{z2, z2}), z2});
  const auto right = make_expr(expr::DirectProduct{z2, make_expr(expr::DirectProduct{z2, z2})});
  EXPECT_EQ(*parse_group_expr("Z(2)xZ(2)xZ(2)"), *left);
  EXPECT_EQ(*parse_group_expr("Z(2) x (Z(2) x Z(2))"), *right);
  EXPECT_EQ(to_string(*right), "Z(2)x(Z(2)xZ(2))");
  EXPECT_EQ(to_string(*left), "Z(2)xZ(2)xZ(2)");
}

TEST(Parse, AllConstructors) {
  EXPECT_EQ(*parse_group_expr("M(2,4)"), *make_expr(expr::ModularGroup{2, 4}));
  EXPECT_EQ(*parse_group_expr("SD(16)"), *make_expr(expr::Semidihedral{16}));
  EXPECT_EQ(*parse_group_expr("Heis(3)"), *make_expr(expr::Heisenberg{3}));
  EXPECT_EQ(*parse_group_expr("G16(13)"), *make_expr(expr::Order16{13}));
  EXPECT_EQ(*parse_group_expr("cayley:/tmp/t.csv"), *make_expr(expr::FromCayleyFile{"/tmp/t.csv"}));
  EXPECT_EQ(*parse_group_expr("cayley:\"/tmp/a b.csv\" x Z(2)"),
            *make_expr(expr::DirectProduct{make_expr(expr::FromCayleyFile{"/tmp/a b.csv"}),
                                           make_expr(expr::Cyclic{2})}));
}

TEST(Parse, Errors) {
  auto e = parse_error("Z(");
  EXPECT_EQ(e.defect(), ParseDefect::Syntax);
  EXPECT_EQ(e.position(), 2u);
  EXPECT_EQ(e.kind(), ErrorKind::Syntax);

  e = parse_error("Foo(3)");
  EXPECT_EQ(e.defect(), ParseDefect::UnknownConstructor);
  EXPECT_EQ(e.position(), 0u);
  EXPECT_EQ(e.detail(), "Foo");

  e = parse_error("Z(2)xM(2)");
  EXPECT_EQ(e.defect(), ParseDefect::Arity);
  EXPECT_EQ(e.position(), 5u);

  EXPECT_EQ(parse_error("").defect(), ParseDefect::Syntax);
  EXPECT_EQ(parse_error("Z(2)x").defect(), ParseDefect::Syntax);
  EXPECT_EQ(parse_error("Z(2)Z(3)").position(), 4u);
  EXPECT_EQ(parse_error("(Z(2)").defect(), ParseDefect::Syntax);
  EXPECT_EQ(parse_error("Z(-1)").defect(), ParseDefect::Syntax);
}

TEST(Parse, TextRoundTripProperty) {
  std::mt19937 rng(20240611);
  for (int i = 0; i < 300; ++i) {
    const auto e = random_expr(rng, 3);
    const auto text = to_string(*e);
    EXPECT_EQ(*parse_group_expr(text), *e) << text;
  }
}

TEST(Build, RejectsBadParameters) {
  EXPECT_EQ(kind_of([] { build_group("Z(0)"); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { build_group("D(5)"); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { build_group("D(2)"); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { build_group("Q(12)"); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { build_group("SD(8)"); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { build_group("M(4,3)"); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { build_group("Heis(2)"); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { build_group("S(7)"); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { build_group("G16(15)"); }), ErrorKind::InvalidParameter);
}

TEST(Build, OrderCap) {
  EXPECT_EQ(kind_of([] { build_group("S(6)"); }), ErrorKind::TooLarge);
  EXPECT_EQ(kind_of([] { build_group("Z(600)"); }), ErrorKind::TooLarge);
  EXPECT_EQ(kind_of([] { build_group("Z(20)xZ(20)xZ(2)"); }), ErrorKind::TooLarge);
  EXPECT_EQ(kind_of([] { build_group("Z(20)", {10, 5000}); }), ErrorKind::TooLarge);
  EXPECT_EQ(build_group("S(6)", {720, 5000}).group.order(), 720u);
}

TEST(Build, ExpressionExamples) {
  EXPECT_EQ(order_statistics(build_group("Z(6)").group), (Stats{{1, 1}, {2, 1}, {3, 2}, {6, 2}}));
  const auto g = build_group("Z(2)xZ(6)");
  EXPECT_EQ(g.group.order(), 12u);
  EXPECT_EQ(order_statistics(g.group), (Stats{{1, 1}, {2, 3}, {3, 2}, {6, 6}}));
  EXPECT_EQ(g.name, "Z(2)xZ(6)");
}

TEST(Catalog, CyclicAndDihedral) {
  EXPECT_EQ(cyclic_group(1).group.order(), 1u);
  EXPECT_EQ(order_statistics(dihedral(10).group), (Stats{{1, 1}, {2, 5}, {5, 4}}));
  EXPECT_EQ(order_statistics(dihedral(4).group), (Stats{{1, 1}, {2, 3}}));
}

TEST(Catalog, Quaternion) {
  const auto q8 = generalized_quaternion(8).group;
  EXPECT_EQ(order_statistics(q8).at(2), 1u);
  std::size_t order4 = 0;
  for (const auto& c : cyclic_subgroups(q8)) order4 += c.order == 4;
  EXPECT_EQ(order4, 3u);
  EXPECT_EQ(order_statistics(generalized_quaternion(16).group), (Stats{{1, 1}, {2, 1}, {4, 10}, {8, 4}}));
}

TEST(Catalog, SemidihedralAndModular) {
  // a^i has the orders of Z8; (x a^i)^2 = a^(4i), so x a^i is an involution
  // for even i and has order 4 for odd i.
  EXPECT_EQ(order_statistics(semidihedral(16).group), (Stats{{1, 1}, {2, 5}, {4, 6}, {8, 4}}));
  const auto m = modular_group(2, 4).group;
  EXPECT_EQ(m.order(), 16u);
  EXPECT_FALSE(is_abelian(m));
  EXPECT_EQ(order_statistics(m), (Stats{{1, 1}, {2, 3}, {4, 4}, {8, 8}}));
  const auto m33 = modular_group(3, 3).group;
  EXPECT_FALSE(is_abelian(m33));
  EXPECT_EQ(order_statistics(m33), (Stats{{1, 1}, {3, 8}, {9, 18}}));
}

TEST(Catalog, Heisenberg) {
  const auto h = heisenberg(3).group;
  EXPECT_EQ(h.order(), 27u);
  EXPECT_FALSE(is_abelian(h));
  EXPECT_EQ(order_statistics(h), (Stats{{1, 1}, {3, 26}}));
  EXPECT_EQ(order_statistics(heisenberg(5).group), (Stats{{1, 1}, {5, 124}}));
}

TEST(Catalog, SymmetricAndAlternating) {
  EXPECT_EQ(symmetric(1).group.order(), 1u);
  EXPECT_EQ(symmetric(3).group.order(), 6u);
  EXPECT_EQ(symmetric(4).group.order(), 24u);
  EXPECT_EQ(symmetric(5).group.order(), 120u);
  EXPECT_EQ(alternating(4).group.order(), 12u);
  EXPECT_EQ(alternating(5).group.order(), 60u);
  EXPECT_EQ(order_statistics(alternating(5).group), (Stats{{1, 1}, {2, 15}, {3, 20}, {5, 24}}));
  EXPECT_EQ(symmetric(4).element_names.front(), "()");
  EXPECT_EQ(symmetric(4).element_names.at(1), "(1 2)");
}

TEST(Catalog, DirectProductLcmRule) {
  const auto g = dihedral(6), h = cyclic_group(5);
  const auto p = direct_product(g, h);
  ASSERT_EQ(p.group.order(), 30u);
  for (std::uint32_t a = 0; a < 6; ++a)
    for (std::uint32_t b = 0; b < 5; ++b)
      EXPECT_EQ(element_order(p.group, ElementId(a * 5 + b)),
                std::lcm(element_order(g.group, ElementId(a)), element_order(h.group, ElementId(b))));
}

TEST(Catalog, PermutationClosure) {
  PermGenerators gens{3, {{1, 0, 2}, {1, 2, 0}}};
  const auto s3 = from_permutations(gens);
  EXPECT_EQ(s3.group.order(), 6u);
  EXPECT_FALSE(is_abelian(s3.group));
  EXPECT_EQ(kind_of([&] { from_permutations(gens, {512, 4}); }), ErrorKind::TooLarge);
  EXPECT_EQ(kind_of([] { from_permutations({3, {{0, 0, 1}}}); }), ErrorKind::InvalidParameter);
  EXPECT_EQ(kind_of([] { from_permutations({3, {{0, 1}}}); }), ErrorKind::InvalidParameter);
}

TEST(Catalog, Order16Census) {
  const std::vector<Stats> expected = {
      {{1, 1}, {2, 1}, {4, 2}, {8, 4}, {16, 8}},  // 1
      {{1, 1}, {2, 3}, {4, 12}},                  // 2
      {{1, 1}, {2, 7}, {4, 8}},                   // 3
      {{1, 1}, {2, 3}, {4, 12}},                  // 4
      {{1, 1}, {2, 3}, {4, 4}, {8, 8}},           // 5
      {{1, 1}, {2, 3}, {4, 4}, {8, 8}},           // 6
      {{1, 1}, {2, 9}, {4, 2}, {8, 4}},           // 7
      {{1, 1}, {2, 5}, {4, 6}, {8, 4}},           // 8
      {{1, 1}, {2, 1}, {4, 10}, {8, 4}},          // 9
      {{1, 1}, {2, 7}, {4, 8}},                   // 10
      {{1, 1}, {2, 11}, {4, 4}},                  // 11
      {{1, 1}, {2, 3}, {4, 12}},                  // 12
      {{1, 1}, {2, 7}, {4, 8}},                   // 13
      {{1, 1}, {2, 15}},                          // 14
  };
  const std::set<std::size_t> abelian = {1, 2, 5, 10, 14};
  const auto cat = order16_catalog();
  ASSERT_EQ(cat.size(), 14u);

  // Distinguishing invariants: order statistics, abelianness, centre size
  // and number of squares.
  std::set<std::tuple<Stats, bool, std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < cat.size(); ++k) {
    const auto& g = cat[k].group;
    EXPECT_EQ(g.order(), 16u);
    EXPECT_EQ(order_statistics(g), expected[k]) << cat[k].name;
    EXPECT_EQ(is_abelian(g), abelian.count(k + 1) == 1) << cat[k].name;
    EXPECT_EQ(cat[k].name.rfind("G16(" + std::to_string(k + 1) + ") ", 0), 0u);
    std::size_t centre = 0;
    std::set<ElementId> squares;
    for (std::uint32_t x = 0; x < 16; ++x) {
      bool central = true;
      for (std::uint32_t y = 0; y < 16; ++y)
        central = central && g.mul(ElementId(x), ElementId(y)) == g.mul(ElementId(y), ElementId(x));
      centre += central;
      squares.insert(g.mul(ElementId(x), ElementId(x)));
    }
    EXPECT_TRUE(seen.emplace(order_statistics(g), is_abelian(g), centre, squares.size()).second) << cat[k].name;
  }
}

TEST(CayleyCsv, ReadsCommaAndWhitespaceSeparatedTables) {
  const auto path = temp_file("z3.csv", "0,1,2\n1, 2, 0\n\n2\t0 1\n");
  const auto g = from_cayley_csv(path);
  EXPECT_EQ(g.group.order(), 3u);
  EXPECT_EQ(build_group("cayley:" + path + " x Z(2)").group.order(), 6u);
}

TEST(CayleyCsv, Errors) {
  const auto bad_token = temp_file("bad_token.csv", "0,1\n1,x\n");
  try {
    from_cayley_csv(bad_token);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Syntax);
    EXPECT_NE(std::string(e.what()).find("row 2, col 2"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([] { from_cayley_csv("/nonexistent/table.csv"); }), ErrorKind::Io);
  const auto ragged = temp_file("ragged.csv", "0,1\n1\n");
  EXPECT_EQ(kind_of([&] { from_cayley_csv(ragged); }), ErrorKind::Syntax);
  const auto not_group = temp_file("not_group.csv", "0,0\n0,0\n");
  EXPECT_EQ(kind_of([&] { from_cayley_csv(not_group); }), ErrorKind::InvalidGroup);
  EXPECT_EQ(kind_of([&] { from_cayley_csv(not_group, {1, 5000}); }), ErrorKind::TooLarge);
}
