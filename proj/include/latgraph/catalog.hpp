#pragma once

// Concrete groups: cyclic, dihedral, generalized quaternion, semidihedral,
// modular, Heisenberg, symmetric and alternating groups, direct products,
// permutation closures, Cayley-table files, and the fourteen groups of
// order 16.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "latgraph/arith.hpp"
#include "latgraph/error.hpp"
#include "latgraph/group.hpp"

namespace latgraph {

struct BuildOptions {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t closure_cap = 5000;
};

// A group together with printable element names (index = ElementId).
struct NamedGroup {
  std::string name;
  FiniteGroup group;
  std::vector<std::string> element_names;
};

using Permutation = std::vector<std::uint32_t>;

struct PermGenerators {
  std::uint32_t degree = 0;
  std::vector<Permutation> generators;

  friend bool operator==(const PermGenerators&, const PermGenerators&) = default;
};

namespace detail {

inline void check_cap(std::uint64_t order, const BuildOptions& opt) {
  if (order > opt.max_order)
    fail(ErrorKind::TooLarge, "group order " + std::to_string(order) + " exceeds cap " +
                                  std::to_string(opt.max_order));
}

inline bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::string power_name(const std::string& sym, std::uint64_t k) {
  if (k == 0) return "";
  return k == 1 ? sym : sym + "^" + std::to_string(k);
}

// Groups a^i b^j (0 <= i < n, 0 <= j < m) with b^j a^k = a^(k r^j) and
// b^m = a^c. Element id is i + n*j. The caller guarantees the parameters
// define a group; validate_group confirms it.
inline NamedGroup metacyclic(std::string name, std::uint64_t n, std::uint64_t m,
                             std::int64_t r, std::uint64_t c, const std::string& a_sym,
                             const std::string& b_sym, const BuildOptions& opt) {
  const std::uint64_t order = n * m;
  check_cap(order, opt);
  const std::uint64_t rr = std::uint64_t(((r % std::int64_t(n)) + std::int64_t(n)) % std::int64_t(n));
  std::vector<std::uint64_t> rpow(m, 1 % n);
  for (std::uint64_t j = 1; j < m; ++j) rpow[j] = rpow[j - 1] * rr % n;

  std::vector<std::uint32_t> flat(order * order);
  for (std::uint64_t x = 0; x < order; ++x)
    for (std::uint64_t y = 0; y < order; ++y) {
      const std::uint64_t i = x % n, j = x / n, k = y % n, l = y / n;
      std::uint64_t a = i + k * rpow[j];
      std::uint64_t b = j + l;
      if (b >= m) {
        a += c;
        b -= m;
      }
      flat[x * order + y] = std::uint32_t(a % n + n * b);
    }

  NamedGroup out{std::move(name), validate_group(order, std::move(flat), opt.max_order), {}};
  for (std::uint64_t x = 0; x < order; ++x) {
    std::string s = power_name(a_sym, x % n) + power_name(b_sym, x / n);
    out.element_names.push_back(s.empty() ? "e" : s);
  }
  return out;
}

inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

// Cycle notation on points 1..degree.
inline std::string cycle_string(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !done[j]; j = p[j]) {
      if (j != i) out += " ";
      out += std::to_string(j + 1);
      done[j] = true;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

inline Permutation cycle_perm(std::uint32_t degree, const std::vector<std::uint32_t>& cycle) {
  Permutation p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
  for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

}  // namespace detail

inline NamedGroup cyclic_group(std::uint64_t n, const BuildOptions& opt = {}) {
  if (n == 0) fail(ErrorKind::InvalidParameter, "Z(n) needs n >= 1");
  detail::check_cap(n, opt);
  std::vector<std::uint32_t> flat(n * n);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) flat[i * n + j] = std::uint32_t((i + j) % n);
  NamedGroup out{"Z(" + std::to_string(n) + ")", validate_group(n, std::move(flat), opt.max_order), {}};
  for (std::uint64_t i = 0; i < n; ++i) out.element_names.push_back(std::to_string(i));
  return out;
}

// Dihedral group of the given order: <r, s | r^(order/2) = s^2 = 1, srs = r^-1>.
inline NamedGroup dihedral(std::uint64_t order, const BuildOptions& opt = {}) {
  if (order < 4 || order % 2 != 0)
    fail(ErrorKind::InvalidParameter, "D(order) needs an even order >= 4");
  return detail::metacyclic("D(" + std::to_string(order) + ")", order / 2, 2, -1, 0, "r", "s", opt);
}

// <a, b | a^(order/2) = 1, b^2 = a^(order/4), b a b^-1 = a^-1>.
inline NamedGroup generalized_quaternion(std::uint64_t order, const BuildOptions& opt = {}) {
  if (order < 8 || !detail::is_power_of_two(order))
    fail(ErrorKind::InvalidParameter, "Q(order) needs a power of two >= 8");
  return detail::metacyclic("Q(" + std::to_string(order) + ")", order / 2, 2, -1, order / 4, "a",
                            "b", opt);
}

// <x, a | x^2 = 1 = a^(order/2), x a x = a^(order/4 - 1)>.
inline NamedGroup semidihedral(std::uint64_t order, const BuildOptions& opt = {}) {
  if (order < 16 || !detail::is_power_of_two(order))
    fail(ErrorKind::InvalidParameter, "SD(order) needs a power of two >= 16");
  return detail::metacyclic("SD(" + std::to_string(order) + ")", order / 2, 2,
                            std::int64_t(order / 4) - 1, 0, "a", "x", opt);
}

// <x, a | x^p = 1 = a^(p^(n-1)), x^-1 a x = a^(1 + p^(n-2))>, order p^n.
inline NamedGroup modular_group(std::uint64_t p, std::uint64_t n, const BuildOptions& opt = {}) {
  if (!is_prime(p) || n < 3)
    fail(ErrorKind::InvalidParameter, "M(p,n) needs p prime and n >= 3");
  if (n > 20 || detail::ipow(p, n) > opt.max_order)
    fail(ErrorKind::TooLarge, "M(" + std::to_string(p) + "," + std::to_string(n) +
                                  ") exceeds order cap " + std::to_string(opt.max_order));
  const std::uint64_t a_order = detail::ipow(p, n - 1);
  const std::uint64_t s = 1 + detail::ipow(p, n - 2);
  // x a^k x^-1 = a^(k t) with t the inverse of s modulo the order of a
  std::uint64_t t = 1;
  while (t * s % a_order != 1) ++t;
  return detail::metacyclic("M(" + std::to_string(p) + "," + std::to_string(n) + ")", a_order, p,
                            std::int64_t(t), 0, "a", "x", opt);
}

// Upper unitriangular 3x3 matrices over Z/p; element [a,b,c] has id a + p b + p^2 c.
inline NamedGroup heisenberg(std::uint64_t p, const BuildOptions& opt = {}) {
  if (p == 2 || !is_prime(p))
    fail(ErrorKind::InvalidParameter, "Heis(p) needs an odd prime p");
  if (p > 1000) fail(ErrorKind::TooLarge, "Heis(p) exceeds order cap");
  const std::uint64_t n = p * p * p;
  detail::check_cap(n, opt);
  std::vector<std::uint32_t> flat(n * n);
  for (std::uint64_t x = 0; x < n; ++x)
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t a = x % p, b = x / p % p, c = x / (p * p);
      const std::uint64_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
      const std::uint64_t ra = (a + a2) % p, rb = (b + b2) % p, rc = (c + c2 + a * b2) % p;
      flat[x * n + y] = std::uint32_t(ra + p * rb + p * p * rc);
    }
  NamedGroup out{"Heis(" + std::to_string(p) + ")", validate_group(n, std::move(flat), opt.max_order), {}};
  for (std::uint64_t x = 0; x < n; ++x)
    out.element_names.push_back("[" + std::to_string(x % p) + "," + std::to_string(x / p % p) +
                                "," + std::to_string(x / (p * p)) + "]");
  return out;
}

// Breadth-first closure of the generators under composition. Elements are
// numbered in discovery order starting from the identity.
inline NamedGroup from_permutations(const PermGenerators& gens, const BuildOptions& opt = {},
                                    std::string name = "perm") {
  if (gens.degree == 0) fail(ErrorKind::InvalidParameter, "permutation degree must be positive");
  for (const auto& g : gens.generators) {
    if (g.size() != gens.degree)
      fail(ErrorKind::InvalidParameter, "generator length differs from degree");
    std::vector<bool> hit(gens.degree, false);
    for (auto v : g) {
      if (v >= gens.degree || hit[v]) fail(ErrorKind::InvalidParameter, "generator is not a bijection");
      hit[v] = true;
    }
  }

  Permutation id(gens.degree);
  for (std::uint32_t i = 0; i < gens.degree; ++i) id[i] = i;
  std::vector<Permutation> elems{id};
  std::map<Permutation, std::uint32_t> index{{id, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens.generators) {
      Permutation y = detail::compose(elems[head], g);
      if (index.count(y)) continue;
      if (elems.size() >= opt.closure_cap)
        fail(ErrorKind::TooLarge, "permutation closure exceeds cap " + std::to_string(opt.closure_cap));
      index.emplace(y, std::uint32_t(elems.size()));
      elems.push_back(std::move(y));
    }
  }
  const std::size_t n = elems.size();
  detail::check_cap(n, opt);
  std::vector<std::uint32_t> flat(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = index.at(detail::compose(elems[i], elems[j]));

  NamedGroup out{std::move(name), validate_group(n, std::move(flat), opt.max_order), {}};
  for (const auto& p : elems) out.element_names.push_back(detail::cycle_string(p));
  return out;
}

inline NamedGroup symmetric(std::uint64_t n, const BuildOptions& opt = {}) {
  if (n < 1 || n > 6) fail(ErrorKind::InvalidParameter, "S(n) supports 1 <= n <= 6");
  PermGenerators gens{std::uint32_t(n), {}};
  if (n >= 2) {
    gens.generators.push_back(detail::cycle_perm(std::uint32_t(n), {0, 1}));
    std::vector<std::uint32_t> full(n);
    for (std::uint32_t i = 0; i < n; ++i) full[i] = i;
    gens.generators.push_back(detail::cycle_perm(std::uint32_t(n), full));
  }
  return from_permutations(gens, opt, "S(" + std::to_string(n) + ")");
}

inline NamedGroup alternating(std::uint64_t n, const BuildOptions& opt = {}) {
  if (n < 2 || n > 6) fail(ErrorKind::InvalidParameter, "A(n) supports 2 <= n <= 6");
  PermGenerators gens{std::uint32_t(n), {}};
  for (std::uint32_t i = 2; i < n; ++i)
    gens.generators.push_back(detail::cycle_perm(std::uint32_t(n), {0, 1, i}));
  return from_permutations(gens, opt, "A(" + std::to_string(n) + ")");
}

// Element (g, h) has id g * |H| + h.
inline NamedGroup direct_product(const NamedGroup& g, const NamedGroup& h,
                                 const BuildOptions& opt = {}) {
  const std::size_t ng = g.group.order(), nh = h.group.order(), n = ng * nh;
  detail::check_cap(n, opt);
  std::vector<std::uint32_t> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto a = g.group.mul(ElementId(std::uint32_t(x / nh)), ElementId(std::uint32_t(y / nh)));
      const auto b = h.group.mul(ElementId(std::uint32_t(x % nh)), ElementId(std::uint32_t(y % nh)));
      flat[x * n + y] = std::uint32_t(a.value * nh + b.value);
    }
  NamedGroup out{g.name + "x" + h.name, validate_group(n, std::move(flat), opt.max_order), {}};
  for (std::size_t x = 0; x < n; ++x)
    out.element_names.push_back("(" + g.element_names[x / nh] + "," + h.element_names[x % nh] + ")");
  return out;
}

// Reads n lines of n integers separated by commas and/or whitespace. Blank
// lines are ignored.
inline NamedGroup from_cayley_csv(const std::string& path, const BuildOptions& opt = {}) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "'");
  std::vector<std::vector<std::int64_t>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    for (char& ch : line)
      if (ch == ',' || ch == '\t' || ch == '\r' || ch == ';') ch = ' ';
    std::istringstream ss(line);
    std::vector<std::int64_t> row;
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size())
        fail(ErrorKind::Syntax, "ParseError(row " + std::to_string(rows.size() + 1) + ", col " +
                                    std::to_string(row.size() + 1) + "): not an integer '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw GroupTableError(GroupDefect::EmptyTable, {});
  const std::size_t n = rows.size();
  if (n > opt.max_order)
    fail(ErrorKind::TooLarge, "table of order " + std::to_string(n) + " exceeds cap " +
                                  std::to_string(opt.max_order));
  for (std::size_t r = 0; r < n; ++r)
    if (rows[r].size() != n)
      fail(ErrorKind::Syntax, "ParseError(row " + std::to_string(r + 1) + ", col " +
                                  std::to_string(std::min(rows[r].size(), n) + 1) + "): expected " +
                                  std::to_string(n) + " entries, found " +
                                  std::to_string(rows[r].size()));
  NamedGroup out{"cayley:" + path, validate_group(rows, opt.max_order), {}};
  for (std::size_t i = 0; i < n; ++i) out.element_names.push_back(std::to_string(i));
  return out;
}

// One embedded permutation record.
struct PermRecord {
  std::string name;
  PermGenerators generators;
};

// Regular representations of the three order-16 groups that are neither
// direct products nor two-generator presentations above.
inline const std::vector<PermRecord>& order16_permutation_data() {
  static const std::vector<PermRecord> data = {
      {"(Z4xZ2):Z2",
       {16,
        {{1, 2, 3, 0, 5, 6, 7, 4, 9, 10, 11, 8, 13, 14, 15, 12},
         {4, 5, 6, 7, 0, 1, 2, 3, 12, 13, 14, 15, 8, 9, 10, 11},
         {8, 13, 10, 15, 12, 9, 14, 11, 0, 5, 2, 7, 4, 1, 6, 3}}}},
      {"Z4:Z4",
       {16,
        {{1, 2, 3, 0, 5, 6, 7, 4, 9, 10, 11, 8, 13, 14, 15, 12},
         {4, 7, 6, 5, 8, 11, 10, 9, 12, 15, 14, 13, 0, 3, 2, 1}}}},
      {"D8*Z4",
       {16,
        {{4, 5, 6, 7, 0, 1, 2, 3, 13, 14, 15, 12, 11, 8, 9, 10},
         {12, 13, 14, 15, 9, 10, 11, 8, 7, 4, 5, 6, 0, 1, 2, 3},
         {1, 2, 3, 0, 5, 6, 7, 4, 9, 10, 11, 8, 13, 14, 15, 12}}}},
  };
  return data;
}

inline constexpr std::size_t kOrder16Count = 14;

// The groups of order 16 in the standard small-group numbering (index k is
// the k-th group, 1-based).
inline NamedGroup order16_group(std::size_t k) {
  const auto z = [](std::uint64_t n) { return cyclic_group(n); };
  const auto perm = [](std::size_t i) {
    const auto& rec = order16_permutation_data().at(i);
    return from_permutations(rec.generators, {}, rec.name);
  };
  NamedGroup g = [&]() -> NamedGroup {
    switch (k) {
      case 1: return z(16);
      case 2: return direct_product(z(4), z(4));
      case 3: return perm(0);
      case 4: return perm(1);
      case 5: return direct_product(z(8), z(2));
      case 6: return modular_group(2, 4);
      case 7: return dihedral(16);
      case 8: return semidihedral(16);
      case 9: return generalized_quaternion(16);
      case 10: return direct_product(direct_product(z(4), z(2)), z(2));
      case 11: return direct_product(dihedral(8), z(2));
      case 12: return direct_product(generalized_quaternion(8), z(2));
      case 13: return perm(2);
      case 14: return direct_product(direct_product(direct_product(z(2), z(2)), z(2)), z(2));
      default: fail(ErrorKind::InvalidParameter, "G16(k) needs 1 <= k <= 14");
    }
  }();
  static const char* const names[] = {"Z16",   "Z4xZ4",   "(Z4xZ2):Z2", "Z4:Z4",    "Z8xZ2",
                                      "M16",   "D16",     "SD16",       "Q16",      "Z4xZ2xZ2",
                                      "D8xZ2", "Q8xZ2",   "D8*Z4",      "Z2^4"};
  g.name = "G16(" + std::to_string(k) + ") " + names[k - 1];
  return g;
}

inline std::vector<NamedGroup> order16_catalog() {
  std::vector<NamedGroup> out;
  for (std::size_t k = 1; k <= kOrder16Count; ++k) out.push_back(order16_group(k));
  return out;
}

}  // namespace latgraph
