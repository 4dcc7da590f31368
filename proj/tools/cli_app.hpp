#pragma once

// The latgraph command line, callable in-process so tests can drive it
// without spawning a shell.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latgraph/latgraph.hpp"

namespace latgraph::cli {

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3, kInvalidMath = 4 };

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge:
    case ErrorKind::Timeout: return kResource;
    case ErrorKind::InvalidLattice:
    case ErrorKind::NotEnhancedPowerGraph: return kInvalidMath;
    default: return kUsage;
  }
}

struct Options {
  std::string group, group_a, group_b;
  std::string kind;
  std::string format = "summary";
  std::string from;
  std::string catalog;
  std::uint64_t budget = kDefaultIsoBudget;
  std::size_t max_order = 0;  // 0: take $LATGRAPH_MAX_ORDER or the default
  std::uint64_t seed = 0;  // accepted and ignored; nothing here is randomized
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {
    build_.max_order = o.max_order;
    iso_.budget = o.budget;
  }

  int graph() {
    const auto g = load_group();
    const auto& names = g.element_names;
    if (o_.kind == "epow" || o_.kind == "pow") {
      emit(o_.kind == "epow" ? epow_oracle(g.group) : pow_oracle(g.group), names);
    } else if (o_.kind == "dirpow") {
      emit(dirpow_oracle(g.group), names);
    } else if (o_.kind == "diff") {
      const auto d = diff_oracle(g.group);
      std::vector<std::string> labels;
      for (ElementId x : d.original)
        labels.push_back(names.empty() ? std::to_string(x.value) : names[x.value]);
      emit(d.graph, labels);
    } else {
      fail(ErrorKind::InvalidParameter, "--kind must be one of epow, pow, dirpow, diff");
    }
    return kOk;
  }

  int lattice() {
    emit(build_lattice(load_group().group).lattice);
    return kOk;
  }

  int reconstruct() {
    if (o_.from.empty()) fail(ErrorKind::InvalidParameter, "reconstruct needs --from FILE");
    const std::string text = read_file(o_.from);
    if (o_.kind == "lattice-from-epow") {
      const auto parsed = graph_from_json(text);
      if (!parsed.simple) fail(ErrorKind::InvalidParameter, "lattice-from-epow expects a simple graph");
      emit(lattice_from_epow(*parsed.simple, {true, iso_}));
      return kOk;
    }
    const auto l = lattice_from_json(text);
    require_valid(l);
    if (o_.kind == "epow-from-lattice")
      emit(epow_from_lattice(l));
    else if (o_.kind == "pow-from-lattice")
      emit(pow_from_lattice(l));
    else if (o_.kind == "dirpow-from-lattice")
      emit(dirpow_from_lattice(l));
    else if (o_.kind == "diff-from-lattice")
      emit(diff_from_lattice(l));
    else
      fail(ErrorKind::InvalidParameter,
           "--kind must be one of lattice-from-epow, epow-from-lattice, pow-from-lattice, "
           "dirpow-from-lattice, diff-from-lattice");
    return kOk;
  }

  int roundtrip() {
    if (!o_.catalog.empty()) {
      std::size_t failed = 0;
      const auto groups = named_catalog(o_.catalog, build_);
      for (const auto& g : groups) {
        const auto checks = roundtrip_checks(g.group, iso_);
        const auto passed = count_passed(checks);
        out_ << g.name << ": " << passed << "/" << checks.size() << (passed == checks.size() ? " PASS" : " FAIL")
             << "\n";
        for (const auto& c : checks)
          if (!c.passed) out_ << "  " << c.name << ": " << c.detail << "\n";
        failed += passed != checks.size();
      }
      out_ << "groups=" << groups.size() << " failed=" << failed << "\n";
      return failed ? kVerifyFailed : kOk;
    }
    const auto g = load_group();
    const auto checks = roundtrip_checks(g.group, iso_);
    for (const auto& c : checks) {
      out_ << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.passed) out_ << ": " << c.detail;
      out_ << "\n";
    }
    const auto passed = count_passed(checks);
    out_ << passed << "/" << checks.size() << (passed == checks.size() ? " PASS" : " FAIL") << "\n";
    return passed == checks.size() ? kOk : kVerifyFailed;
  }

  int compare() {
    if (o_.group_a.empty() || o_.group_b.empty())
      fail(ErrorKind::InvalidParameter, "compare needs --group-a and --group-b");
    const auto a = build_group(o_.group_a, build_), b = build_group(o_.group_b, build_);
    const auto p = compare_groups(a.group, b.group, iso_);
    out_ << "lattice_iso=" << to_string(p.lattice_iso) << "\n"
         << "dirpow_iso=" << to_string(p.dirpow_iso) << "\n"
         << "epow_iso=" << to_string(p.epow_iso) << "\n"
         << "pow_iso=" << to_string(p.pow_iso) << "\n";

    const bool ab_a = is_abelian(a.group), ab_b = is_abelian(b.group);
    const auto st_a = order_statistics(a.group), st_b = order_statistics(b.group);
    out_ << "abelian: " << (ab_a ? "yes" : "no") << " / " << (ab_b ? "yes" : "no") << "\n"
         << "order statistics: " << stats(st_a) << " / " << stats(st_b) << "\n";
    std::vector<std::string> differ;
    if (a.group.order() != b.group.order()) differ.push_back("order");
    if (ab_a != ab_b) differ.push_back("abelianness");
    if (st_a != st_b) differ.push_back("order statistics");
    if (!differ.empty()) {
      out_ << "groups differ:";
      for (std::size_t i = 0; i < differ.size(); ++i) out_ << (i ? ", " : " ") << differ[i];
      out_ << "\n";
    }

    if (p.any_timeout()) fail(ErrorKind::Timeout, "isomorphism budget exhausted");
    if (!p.all_equal()) {
      out_ << "mixed profile\n";
      return kVerifyFailed;
    }
    return kOk;
  }

  int census() {
    if (o_.catalog.empty()) fail(ErrorKind::InvalidParameter, "census needs --catalog NAME");
    const auto kind = parse_census_kind(o_.kind.empty() ? "pow" : o_.kind);
    if (!kind) fail(ErrorKind::InvalidParameter, "--kind must be one of pow, epow, dirpow, lattice, poset");
    const auto groups = named_catalog(o_.catalog, build_);
    const auto result = latgraph::census(groups, *kind, iso_);
    out_ << "classes=" << result.classes.size() << " groups=" << groups.size() << "\n";
    for (std::size_t c = 0; c < result.classes.size(); ++c) {
      out_ << "class " << c + 1 << ":";
      for (std::size_t i : result.classes[c]) out_ << " " << groups[i].name << ";";
      out_ << "\n";
    }
    return kOk;
  }

 private:
  NamedGroup load_group() const {
    if (!o_.group.empty() && !o_.from.empty()) fail(ErrorKind::InvalidParameter, "give --group or --from, not both");
    if (!o_.from.empty()) return from_cayley_csv(o_.from, build_);
    if (o_.group.empty()) fail(ErrorKind::InvalidParameter, "missing --group EXPR or --from FILE");
    return build_group(o_.group, build_);
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static std::size_t count_passed(const std::vector<CheckResult>& checks) {
    return std::size_t(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
  }

  static std::string stats(const std::map<std::uint64_t, std::uint64_t>& s) {
    std::string out = "{";
    for (const auto& [order, count] : s) out += (out.size() > 1 ? "," : "") + std::to_string(order) + ":" + std::to_string(count);
    return out + "}";
  }

  template <typename G>
  void emit(const G& g, const std::vector<std::string>& labels) {
    if (o_.format == "json")
      out_ << to_json(g, labels).dump(2) << "\n";
    else if (o_.format == "dot")
      out_ << to_dot(g, labels);
    else
      out_ << summary(g) << "\n";
  }

  template <typename Labeled>
  void emit(const Labeled& g) {
    std::vector<std::string> labels;
    for (const auto& l : g.labels) labels.push_back(to_string(l));
    emit(g.graph, labels);
  }

  void emit(const CyclicLattice& l) {
    if (o_.format == "json")
      out_ << to_json(l).dump(2) << "\n";
    else if (o_.format == "dot")
      out_ << to_dot(l);
    else
      out_ << "nodes=" << l.size() << " covers=" << l.covers().size() << "\n";
  }

  static std::string summary(const SimpleGraph& g) {
    return "vertices=" + std::to_string(g.vertex_count()) + " edges=" + std::to_string(g.edge_count());
  }
  static std::string summary(const Digraph& g) {
    return "vertices=" + std::to_string(g.vertex_count()) + " arcs=" + std::to_string(g.arc_count());
  }

  const Options& o_;
  std::ostream& out_;
  BuildOptions build_;
  IsoOptions iso_;
};

inline std::size_t env_max_order() {
  const char* v = std::getenv("LATGRAPH_MAX_ORDER");
  if (!v || !*v) return kDefaultMaxOrder;
  try {
    std::size_t used = 0;
    const auto n = std::stoull(v, &used);
    if (used == std::string(v).size() && n > 0) return n;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::InvalidParameter, std::string("LATGRAPH_MAX_ORDER must be a positive integer, got '") + v + "'");
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Power graphs, enhanced power graphs and cyclic subgroup lattices of finite groups", "latgraph"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"dot", "json", "summary"}))
        ->capture_default_str();
    sub->add_option("--budget", o.budget, "Node-expansion budget per isomorphism search")->capture_default_str();
    sub->add_option("--max-order", o.max_order, "Largest group order accepted (default: $LATGRAPH_MAX_ORDER or 512)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Accepted and ignored; all computations are deterministic");
  };

  auto* graph = app.add_subcommand("graph", "Print a power-type graph computed from the group");
  graph->add_option("--group", o.group, "Group expression, e.g. \"Z(2)xZ(6)\"");
  graph->add_option("--from", o.from, "Cayley table file (CSV)");
  graph->add_option("--kind", o.kind, "epow | pow | dirpow | diff")->required();
  common(graph);

  auto* lattice = app.add_subcommand("lattice", "Print the order-labeled cyclic subgroup lattice");
  lattice->add_option("--group", o.group, "Group expression");
  lattice->add_option("--from", o.from, "Cayley table file (CSV)");
  common(lattice);

  auto* reconstruct = app.add_subcommand("reconstruct", "Run a reconstruction on a JSON graph or lattice");
  reconstruct
      ->add_option("--kind", o.kind,
                   "lattice-from-epow | epow-from-lattice | pow-from-lattice | dirpow-from-lattice | "
                   "diff-from-lattice")
      ->required();
  reconstruct->add_option("--from", o.from, "Input JSON file")->required();
  common(reconstruct);

  auto* roundtrip = app.add_subcommand("roundtrip", "Check every reconstruction against the direct computation");
  roundtrip->add_option("--group", o.group, "Group expression");
  roundtrip->add_option("--from", o.from, "Cayley table file (CSV)");
  roundtrip->add_option("--catalog", o.catalog, "Check a whole catalog instead (order16, corpus)");
  common(roundtrip);

  auto* compare = app.add_subcommand("compare", "Compare two groups through lattice and power-type graphs");
  compare->add_option("--group-a", o.group_a, "First group expression")->required();
  compare->add_option("--group-b", o.group_b, "Second group expression")->required();
  common(compare);

  auto* census = app.add_subcommand("census", "Count isomorphism classes over a catalog");
  census->add_option("--catalog", o.catalog, "order16 | corpus")->required();
  census->add_option("--kind", o.kind, "pow | epow | dirpow | lattice | poset")->default_val("pow");
  common(census);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (o.max_order == 0) o.max_order = env_max_order();
    Runner r(o, out);
    if (*graph) return r.graph();
    if (*lattice) return r.lattice();
    if (*reconstruct) return r.reconstruct();
    if (*roundtrip) return r.roundtrip();
    if (*compare) return r.compare();
    return r.census();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace latgraph::cli
