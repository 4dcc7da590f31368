#pragma once

// Group expressions for the command line.
//
//   Expr := Term ('x' Term)*
//   Term := NAME '(' int (',' int)* ')' | 'cayley:' path | 'G16(' int ')' | '(' Expr ')'
//   NAME := Z | D | Q | SD | M | S | A | Heis
//
// 'x' is the direct product and associates to the left. Whitespace between
// tokens is ignored. A cayley path runs to the next whitespace or the end of
// the input; wrap it in double quotes to include spaces.

#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "latgraph/catalog.hpp"
#include "latgraph/error.hpp"

namespace latgraph {

struct GroupExpr;
using GroupExprPtr = std::shared_ptr<const GroupExpr>;

namespace expr {
struct Cyclic { std::uint64_t n; friend bool operator==(const Cyclic&, const Cyclic&) = default; };
struct Dihedral { std::uint64_t order; friend bool operator==(const Dihedral&, const Dihedral&) = default; };
struct GeneralizedQuaternion {
  std::uint64_t order;
  friend bool operator==(const GeneralizedQuaternion&, const GeneralizedQuaternion&) = default;
};
struct Semidihedral { std::uint64_t order; friend bool operator==(const Semidihedral&, const Semidihedral&) = default; };
struct ModularGroup {
  std::uint64_t p, n;
  friend bool operator==(const ModularGroup&, const ModularGroup&) = default;
};
struct Heisenberg { std::uint64_t p; friend bool operator==(const Heisenberg&, const Heisenberg&) = default; };
struct Symmetric { std::uint64_t n; friend bool operator==(const Symmetric&, const Symmetric&) = default; };
struct Alternating { std::uint64_t n; friend bool operator==(const Alternating&, const Alternating&) = default; };
struct DirectProduct {
  GroupExprPtr left, right;
  friend bool operator==(const DirectProduct& a, const DirectProduct& b);
};
struct FromCayleyFile { std::string path; friend bool operator==(const FromCayleyFile&, const FromCayleyFile&) = default; };
struct FromPermutations {
  PermGenerators gens;
  friend bool operator==(const FromPermutations&, const FromPermutations&) = default;
};
struct Order16 { std::uint64_t index; friend bool operator==(const Order16&, const Order16&) = default; };
}  // namespace expr

struct GroupExpr {
  std::variant<expr::Cyclic, expr::Dihedral, expr::GeneralizedQuaternion, expr::Semidihedral,
               expr::ModularGroup, expr::Heisenberg, expr::Symmetric, expr::Alternating,
               expr::DirectProduct, expr::FromCayleyFile, expr::FromPermutations, expr::Order16>
      node;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

namespace expr {
inline bool operator==(const DirectProduct& a, const DirectProduct& b) {
  return *a.left == *b.left && *a.right == *b.right;
}
}  // namespace expr

template <typename Node>
GroupExprPtr make_expr(Node node) {
  return std::make_shared<const GroupExpr>(GroupExpr{std::move(node)});
}

enum class ParseDefect { Syntax, UnknownConstructor, Arity };

class ExprParseError : public Error {
 public:
  ExprParseError(ParseDefect defect, std::size_t position, std::string detail)
      : Error(ErrorKind::Syntax, describe(defect, position, detail)),
        defect_(defect),
        position_(position),
        detail_(std::move(detail)) {}

  ParseDefect defect() const noexcept { return defect_; }
  std::size_t position() const noexcept { return position_; }
  // What was expected (Syntax) or the offending name (otherwise).
  const std::string& detail() const noexcept { return detail_; }

 private:
  static std::string describe(ParseDefect d, std::size_t pos, const std::string& detail) {
    switch (d) {
      case ParseDefect::Syntax:
        return "SyntaxError at position " + std::to_string(pos) + ": expected " + detail;
      case ParseDefect::UnknownConstructor:
        return "UnknownConstructor '" + detail + "' at position " + std::to_string(pos);
      case ParseDefect::Arity:
        return "ArityError at position " + std::to_string(pos) + ": " + detail;
    }
    return "parse error";
  }

  ParseDefect defect_;
  std::size_t position_;
  std::string detail_;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  GroupExprPtr parse() {
    GroupExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) syntax("'x' or end of input");
    return e;
  }

 private:
  [[noreturn]] void syntax(const std::string& expected) const {
    throw ExprParseError(ParseDefect::Syntax, pos_, expected);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) syntax(std::string("'") + c + "'");
  }

  GroupExprPtr parse_expr() {
    GroupExprPtr left = parse_term();
    while (accept('x')) left = make_expr(expr::DirectProduct{left, parse_term()});
    return left;
  }

  std::uint64_t parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + std::uint64_t(text_[pos_] - '0');
      if (v > 1'000'000'000) syntax("integer <= 1000000000");
      ++pos_;
    }
    if (pos_ == start) syntax("integer");
    return v;
  }

  GroupExprPtr parse_term() {
    skip_ws();
    if (pos_ >= text_.size()) syntax("Term");
    if (accept('(')) {
      GroupExprPtr inner = parse_expr();
      expect(')');
      return inner;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) syntax("Term");

    if (name == "cayley") {
      if (pos_ >= text_.size() || text_[pos_] != ':') syntax("':'");
      ++pos_;
      return make_expr(expr::FromCayleyFile{parse_path()});
    }

    static const std::vector<std::string> known = {"Z", "D", "Q", "SD", "M", "S", "A", "Heis", "G16"};
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw ExprParseError(ParseDefect::UnknownConstructor, start, name);

    expect('(');
    std::vector<std::uint64_t> args{parse_int()};
    while (accept(',')) args.push_back(parse_int());
    expect(')');

    const std::size_t want = name == "M" ? 2 : 1;
    if (args.size() != want)
      throw ExprParseError(ParseDefect::Arity, start,
                           name + " takes " + std::to_string(want) + " argument(s), got " +
                               std::to_string(args.size()));
    if (name == "Z") return make_expr(expr::Cyclic{args[0]});
    if (name == "D") return make_expr(expr::Dihedral{args[0]});
    if (name == "Q") return make_expr(expr::GeneralizedQuaternion{args[0]});
    if (name == "SD") return make_expr(expr::Semidihedral{args[0]});
    if (name == "M") return make_expr(expr::ModularGroup{args[0], args[1]});
    if (name == "S") return make_expr(expr::Symmetric{args[0]});
    if (name == "A") return make_expr(expr::Alternating{args[0]});
    if (name == "Heis") return make_expr(expr::Heisenberg{args[0]});
    return make_expr(expr::Order16{args[0]});
  }

  std::string parse_path() {
    std::string path;
    if (pos_ < text_.size() && text_[pos_] == '"') {
      const std::size_t close = text_.find('"', pos_ + 1);
      if (close == std::string_view::npos) {
        pos_ = text_.size();
        syntax("closing '\"'");
      }
      path = std::string(text_.substr(pos_ + 1, close - pos_ - 1));
      pos_ = close + 1;
    } else {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      path = std::string(text_.substr(start, pos_ - start));
    }
    if (path.empty()) syntax("path");
    return path;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline GroupExprPtr parse_group_expr(std::string_view text) {
  return detail::ExprParser(text).parse();
}

// Canonical text form; parse_group_expr(to_string(e)) reproduces e.
inline std::string to_string(const GroupExpr& e) {
  auto call = [](const char* name, std::uint64_t v) {
    return std::string(name) + "(" + std::to_string(v) + ")";
  };
  return std::visit(
      [&](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Cyclic>) return call("Z", n.n);
        else if constexpr (std::is_same_v<T, expr::Dihedral>) return call("D", n.order);
        else if constexpr (std::is_same_v<T, expr::GeneralizedQuaternion>) return call("Q", n.order);
        else if constexpr (std::is_same_v<T, expr::Semidihedral>) return call("SD", n.order);
        else if constexpr (std::is_same_v<T, expr::ModularGroup>)
          return "M(" + std::to_string(n.p) + "," + std::to_string(n.n) + ")";
        else if constexpr (std::is_same_v<T, expr::Heisenberg>) return call("Heis", n.p);
        else if constexpr (std::is_same_v<T, expr::Symmetric>) return call("S", n.n);
        else if constexpr (std::is_same_v<T, expr::Alternating>) return call("A", n.n);
        else if constexpr (std::is_same_v<T, expr::Order16>) return call("G16", n.index);
        else if constexpr (std::is_same_v<T, expr::FromCayleyFile>) {
          const bool quote = n.path.find_first_of(" \t\n") != std::string::npos;
          return "cayley:" + (quote ? "\"" + n.path + "\"" : n.path);
        } else if constexpr (std::is_same_v<T, expr::FromPermutations>) {
          std::string s = "<permutations degree=" + std::to_string(n.gens.degree) + ">";
          return s;
        } else {
          const bool wrap = std::holds_alternative<expr::DirectProduct>(n.right->node);
          const std::string right = to_string(*n.right);
          // a cayley path swallows everything up to whitespace
          const bool spaced = std::holds_alternative<expr::FromCayleyFile>(n.left->node);
          return to_string(*n.left) + (spaced ? " x " : "x") + (wrap ? "(" + right + ")" : right);
        }
      },
      e.node);
}

inline NamedGroup build_group(const GroupExpr& e, const BuildOptions& opt = {}) {
  return std::visit(
      [&](const auto& n) -> NamedGroup {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, expr::Cyclic>) return cyclic_group(n.n, opt);
        else if constexpr (std::is_same_v<T, expr::Dihedral>) return dihedral(n.order, opt);
        else if constexpr (std::is_same_v<T, expr::GeneralizedQuaternion>)
          return generalized_quaternion(n.order, opt);
        else if constexpr (std::is_same_v<T, expr::Semidihedral>) return semidihedral(n.order, opt);
        else if constexpr (std::is_same_v<T, expr::ModularGroup>) return modular_group(n.p, n.n, opt);
        else if constexpr (std::is_same_v<T, expr::Heisenberg>) return heisenberg(n.p, opt);
        else if constexpr (std::is_same_v<T, expr::Symmetric>) return symmetric(n.n, opt);
        else if constexpr (std::is_same_v<T, expr::Alternating>) return alternating(n.n, opt);
        else if constexpr (std::is_same_v<T, expr::Order16>) {
          if (n.index < 1 || n.index > kOrder16Count)
            fail(ErrorKind::InvalidParameter, "G16(k) needs 1 <= k <= 14");
          detail::check_cap(16, opt);
          return order16_group(n.index);
        } else if constexpr (std::is_same_v<T, expr::FromCayleyFile>)
          return from_cayley_csv(n.path, opt);
        else if constexpr (std::is_same_v<T, expr::FromPermutations>)
          return from_permutations(n.gens, opt);
        else {
          NamedGroup left = build_group(*n.left, opt);
          NamedGroup right = build_group(*n.right, opt);
          return direct_product(left, right, opt);
        }
      },
      e.node);
}

inline NamedGroup build_group(std::string_view text, const BuildOptions& opt = {}) {
  return build_group(*parse_group_expr(text), opt);
}

}  // namespace latgraph
