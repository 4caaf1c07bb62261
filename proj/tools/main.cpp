// polyfold: analyze simple polyhedra, thicken them into 3-manifolds, and
// report which source manifolds admit special generic maps into 3-space.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "polyfold/codec.hpp"
#include "polyfold/complexes.hpp"
#include "polyfold/decisions.hpp"
#include "polyfold/model.hpp"
#include "polyfold/monodromy.hpp"
#include "polyfold/thicken.hpp"

using namespace polyfold;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 1;
constexpr int kExitHypothesisFailed = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerificationFailed = 4;

struct Options {
  std::string subcommand;
  std::string input;
  std::optional<int> dim;
  bool json = false;
  std::uint64_t seed = 0;
  int budget_steps = 10000;
  int restarts = 50;
  int exhaustive_max = 60;
  int simplify_budget = 100000;
  std::string output;
  std::string target = "point";
};

void usage(std::ostream& os) {
  os << "usage: polyfold <command> [args]\n"
        "\n"
        "commands:\n"
        "  validate <input>              check a polyhedron against the local models\n"
        "  analyze  <input> --dim <m>    homology, pi1, compatibility and verdicts\n"
        "  thicken  <input> [-o f.tri3]  build the 3-manifold thickening\n"
        "  collapse <input> [--target point|disc]  collapsibility search\n"
        "  examples [name]               list built-in examples or emit one\n"
        "\n"
        "inputs are .spoly files or catalog:<name>\n"
        "\n"
        "flags:\n"
        "  --dim <m>            source manifold dimension (analyze)\n"
        "  --json               JSON output\n"
        "  --seed <n>           random seed for search\n"
        "  --budget <n>         step budget for collapse / simplification\n"
        "  --exhaustive-max <n> full search threshold in simplices\n"
        "  -o <path>            output file\n";
}

int fail_usage(const std::string& msg) {
  std::cerr << "polyfold: " << msg << "\n";
  usage(std::cerr);
  return kExitInvalidInput;
}

std::optional<SimplePolyhedron> load_input(const std::string& input, int* exit_code) {
  const std::string prefix = "catalog:";
  if (input.rfind(prefix, 0) == 0) {
    try {
      return catalog(input.substr(prefix.size()));
    } catch (const Error& e) {
      std::cerr << "polyfold: " << e.what() << "\n";
      *exit_code = kExitInvalidInput;
      return std::nullopt;
    }
  }
  std::ifstream in(input, std::ios::binary);
  if (!in) {
    std::cerr << "polyfold: cannot open '" << input << "'\n";
    *exit_code = kExitInvalidInput;
    return std::nullopt;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  auto parsed = parse_spoly(buffer.str());
  if (!parsed.ok) {
    for (const auto& e : parsed.errors) {
      std::cerr << input << ":" << e.line << ":" << e.column << ": " << e.code << ": "
                << e.message << "\n";
    }
    for (const auto& v : parsed.validation) {
      std::cerr << input << ": " << v.code << " at " << v.location << ": " << v.message
                << "\n";
    }
    *exit_code = kExitInvalidInput;
    return std::nullopt;
  }
  return parsed.polyhedron;
}

int cmd_validate(const Options& opt) {
  int code = kExitOk;
  const std::string prefix = "catalog:";
  SimplePolyhedron p;
  if (opt.input.rfind(prefix, 0) == 0) {
    try {
      p = catalog(opt.input.substr(prefix.size()));
    } catch (const Error& e) {
      std::cerr << "polyfold: " << e.what() << "\n";
      return kExitInvalidInput;
    }
  } else {
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) {
      std::cerr << "polyfold: cannot open '" << opt.input << "'\n";
      return kExitInvalidInput;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    auto parsed = parse_spoly(buffer.str());
    if (!parsed.errors.empty()) {
      for (const auto& e : parsed.errors) {
        std::cout << opt.input << ":" << e.line << ":" << e.column << ": " << e.code
                  << ": " << e.message << "\n";
      }
      return kExitInvalidInput;
    }
    p = parsed.polyhedron;
  }
  auto rep = validate(p);
  if (opt.json) {
    std::cout << "{\"ok\": " << (rep.ok ? "true" : "false")
              << ", \"errors\": " << rep.errors.size()
              << ", \"warnings\": " << rep.warnings.size()
              << ", \"double_points\": " << rep.double_points
              << ", \"triple_edges\": " << rep.triple_edges
              << ", \"regions\": " << rep.region_count << "}\n";
  } else {
    std::cout << "polyhedron " << p.name << ": " << (rep.ok ? "valid" : "INVALID")
              << "\n";
    std::cout << "  double points: " << rep.double_points
              << "  triple edges: " << rep.triple_edges
              << "  regions: " << rep.region_count << "\n";
    for (const auto& e : rep.errors) {
      std::cout << "  error " << e.code << " at " << e.location << ": " << e.message
                << "\n";
    }
    for (const auto& w : rep.warnings) {
      std::cout << "  warning " << w.code << ": " << w.message << "\n";
    }
  }
  if (!rep.ok) code = kExitInvalidInput;
  return code;
}

int cmd_analyze(const Options& opt) {
  if (!opt.dim.has_value()) return fail_usage("analyze requires --dim <m>");
  int code = kExitOk;
  auto p = load_input(opt.input, &code);
  if (!p.has_value()) return code;
  AnalysisBundle bundle;
  try {
    bundle = analyze(*p, *opt.dim, opt.simplify_budget);
  } catch (const Error& e) {
    std::cerr << "polyfold: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  if (opt.json) {
    std::cout << emit_report_json(bundle);
    return kExitOk;
  }
  std::cout << "polyhedron " << bundle.polyhedron << " (source dimension " << *opt.dim
            << ")\n";
  std::cout << "  euler characteristic: " << bundle.euler << "\n";
  std::cout << "  homology: H0=" << bundle.homology.at(0).str()
            << " H1=" << bundle.homology.at(1).str()
            << " H2=" << bundle.homology.at(2).str() << "\n";
  std::cout << "  pi1: "
            << (bundle.pi1.status == Pi1Status::kTrivial
                    ? "trivial"
                    : (bundle.pi1.status == Pi1Status::kNontrivial ? "nontrivial"
                                                                   : "unknown"))
            << "\n";
  std::cout << "  compatible: " << (bundle.compatible ? "yes" : "no") << "\n";
  std::cout << "  double points: " << bundle.double_points << "\n";
  if (bundle.source.rank_h2_source.has_value()) {
    std::cout << "  rank H2 of the source manifold: "
              << *bundle.source.rank_h2_source << "\n";
  }
  std::cout << "  decisions:\n";
  for (const auto& c : bundle.decisions) {
    std::cout << "    [" << conclusion_str(c.conclusion) << "] " << c.statement << "\n";
    for (const auto& h : c.hypotheses) {
      std::cout << "        - " << h.name << ": " << verdict_str(h.verdict) << "\n";
    }
  }
  return kExitOk;
}

int cmd_thicken(const Options& opt) {
  int code = kExitOk;
  auto p = load_input(opt.input, &code);
  if (!p.has_value()) return code;
  Triangulation3 t;
  try {
    t = thicken(*p);
  } catch (const Error& e) {
    std::cerr << "polyfold: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kIncompatible: return kExitHypothesisFailed;
      case ErrorCode::kInvalidInput: return kExitInvalidInput;
      default: return kExitVerificationFailed;
    }
  }
  auto rep = verify_manifold(t);
  if (!rep.is_manifold || !rep.orientable || !rep.connected ||
      !rep.boundary_nonempty()) {
    std::cerr << "polyfold: internal verification failed:\n";
    for (const auto& f : rep.findings) std::cerr << "  " << f << "\n";
    if (!rep.orientable) std::cerr << "  output not orientable\n";
    return kExitVerificationFailed;
  }
  std::string text = emit_tri3(t);
  if (!opt.output.empty()) {
    std::ofstream out(opt.output, std::ios::binary);
    if (!out) {
      std::cerr << "polyfold: cannot write '" << opt.output << "'\n";
      return kExitInvalidInput;
    }
    out << text;
  } else {
    std::cout << text;
  }
  std::cerr << "thickening: " << t.tets.size() << " tetrahedra, orientable, "
            << rep.boundary.size() << " boundary component(s), euler "
            << euler3(t) << "\n";
  for (const auto& b : rep.boundary) {
    std::cerr << "  boundary: euler " << b.euler << ", "
              << (b.orientable ? "orientable" : "non-orientable") << ", "
              << b.triangles << " triangles\n";
  }
  return kExitOk;
}

int cmd_collapse(const Options& opt) {
  int code = kExitOk;
  auto p = load_input(opt.input, &code);
  if (!p.has_value()) return code;
  SimplicialComplex2 k;
  try {
    k = triangulate(*p);
  } catch (const Error& e) {
    std::cerr << "polyfold: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  CollapseBudget budget;
  budget.seed = opt.seed;
  budget.steps = opt.budget_steps;
  budget.restarts = opt.restarts;
  budget.exhaustive_max = opt.exhaustive_max;
  CollapseTarget target =
      opt.target == "disc" ? CollapseTarget::kDisc : CollapseTarget::kPoint;
  auto res = collapse_search(k, target, budget);
  const char* outcome = res.outcome == CollapseOutcome::kCollapsed
                            ? "collapsed"
                            : (res.outcome == CollapseOutcome::kProvenImpossible
                                   ? "proven-impossible"
                                   : "exhausted-budget");
  if (opt.json) {
    std::cout << "{\"outcome\": \"" << outcome << "\", \"moves\": "
              << res.sequence.size() << ", \"residual\": {\"vertices\": "
              << res.residual.vertices << ", \"edges\": " << res.residual.edges
              << ", \"triangles\": " << res.residual.triangles << "}"
              << (res.reason.empty() ? "" : ", \"reason\": \"" + res.reason + "\"")
              << "}\n";
  } else {
    std::cout << "collapse to " << opt.target << ": " << outcome << "\n";
    if (!res.reason.empty()) std::cout << "  " << res.reason << "\n";
    std::cout << "  residual: " << res.residual.vertices << " vertices, "
              << res.residual.edges << " edges, " << res.residual.triangles
              << " triangles\n";
  }
  return res.outcome == CollapseOutcome::kExhaustedBudget ? kExitBudget : kExitOk;
}

int cmd_examples(const Options& opt) {
  if (opt.input.empty()) {
    for (const auto& name : catalog_names()) std::cout << name << "\n";
    return kExitOk;
  }
  try {
    auto p = catalog(opt.input);
    std::string text = emit_spoly(p);
    if (!opt.output.empty()) {
      std::ofstream out(opt.output, std::ios::binary);
      if (!out) {
        std::cerr << "polyfold: cannot write '" << opt.output << "'\n";
        return kExitInvalidInput;
      }
      out << text;
    } else {
      std::cout << text;
    }
  } catch (const Error& e) {
    std::cerr << "polyfold: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  std::vector<std::string> positional;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    auto next = [&](const char* flag) -> std::optional<std::string> {
      if (i + 1 >= argc) {
        std::cerr << "polyfold: " << flag << " needs a value\n";
        return std::nullopt;
      }
      return std::string(argv[++i]);
    };
    if (arg == "--json") {
      opt.json = true;
    } else if (arg == "--dim") {
      auto v = next("--dim");
      if (!v.has_value()) return kExitInvalidInput;
      try {
        opt.dim = std::stoi(*v);
      } catch (...) {
        return fail_usage("--dim expects an integer");
      }
    } else if (arg == "--seed") {
      auto v = next("--seed");
      if (!v.has_value()) return kExitInvalidInput;
      try {
        opt.seed = std::stoull(*v);
      } catch (...) {
        return fail_usage("--seed expects an integer");
      }
    } else if (arg == "--budget") {
      auto v = next("--budget");
      if (!v.has_value()) return kExitInvalidInput;
      try {
        opt.budget_steps = std::stoi(*v);
        opt.simplify_budget = opt.budget_steps;
      } catch (...) {
        return fail_usage("--budget expects an integer");
      }
    } else if (arg == "--exhaustive-max") {
      auto v = next("--exhaustive-max");
      if (!v.has_value()) return kExitInvalidInput;
      try {
        opt.exhaustive_max = std::stoi(*v);
      } catch (...) {
        return fail_usage("--exhaustive-max expects an integer");
      }
    } else if (arg == "--target") {
      auto v = next("--target");
      if (!v.has_value()) return kExitInvalidInput;
      if (*v != "point" && *v != "disc") {
        return fail_usage("--target expects point or disc");
      }
      opt.target = *v;
    } else if (arg == "-o") {
      auto v = next("-o");
      if (!v.has_value()) return kExitInvalidInput;
      opt.output = *v;
    } else if (arg == "--help" || arg == "-h") {
      usage(std::cout);
      return kExitOk;
    } else if (!arg.empty() && arg[0] == '-') {
      return fail_usage("unknown flag '" + arg + "'");
    } else {
      positional.push_back(arg);
    }
  }
  if (positional.empty()) return fail_usage("missing command");
  opt.subcommand = positional[0];
  if (positional.size() >= 2) opt.input = positional[1];
  if (positional.size() > 2) return fail_usage("too many arguments");

  if (opt.subcommand == "examples") return cmd_examples(opt);
  if (opt.input.empty()) return fail_usage("missing input");
  if (opt.subcommand == "validate") return cmd_validate(opt);
  if (opt.subcommand == "analyze") return cmd_analyze(opt);
  if (opt.subcommand == "thicken") return cmd_thicken(opt);
  if (opt.subcommand == "collapse") return cmd_collapse(opt);
  return fail_usage("unknown command '" + opt.subcommand + "'");
}
