// factorkit command-line tool.
//
// Exit codes: 0 the command ran (the verdict may be true or false),
// 2 usage or input error, 3 enumeration cutoff exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "factorkit/all_factors.hpp"
#include "factorkit/conditions.hpp"
#include "factorkit/error.hpp"
#include "factorkit/extremal.hpp"
#include "factorkit/fractional.hpp"
#include "factorkit/graph_io.hpp"
#include "factorkit/report.hpp"

namespace fk = factorkit;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Common {
  bool json = false;
  std::size_t max_n = 0;  // 0: library default (FACTORKIT_MAX_N or 24)
  unsigned workers = 1;

  fk::EnumerationOptions enumeration() const {
    fk::EnumerationOptions o;
    if (max_n > 0) o.max_n = max_n;
    o.workers = workers;
    return o;
  }
};

// Splits `key=value` tokens; anything else is positional.
struct Params {
  std::vector<std::string> positional;
  std::map<std::string, std::string> named;

  explicit Params(const std::vector<std::string>& tokens) {
    for (const auto& t : tokens) {
      auto eq = t.find('=');
      if (eq == std::string::npos || eq == 0) {
        positional.push_back(t);
      } else if (!named.emplace(t.substr(0, eq), t.substr(eq + 1)).second) {
        throw fk::ParseError("parameter '" + t.substr(0, eq) + "' given twice");
      }
    }
  }

  bool has(const std::string& key) const { return named.count(key) != 0; }

  const std::string& get(const std::string& key) const {
    auto it = named.find(key);
    if (it == named.end()) throw fk::ParseError("missing parameter " + key + "=...");
    return it->second;
  }

  std::int64_t integer(const std::string& key) const {
    const auto& text = get(key);
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw fk::ParseError(key + " must be an integer, got '" + text + "'");
    return value;
  }

  double real(const std::string& key) const {
    const auto& text = get(key);
    std::size_t used = 0;
    double value = 0;
    try {
      value = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) throw fk::ParseError(key + " must be a number, got '" + text + "'");
    return value;
  }

  void allow(std::initializer_list<const char*> keys) const {
    for (const auto& [k, v] : named) {
      bool ok = false;
      for (const char* allowed : keys) ok = ok || k == allowed;
      if (!ok) throw fk::ParseError("unexpected parameter " + k + "=" + v);
    }
  }

  const std::string& single_positional(const char* what) const {
    if (positional.size() != 1) throw fk::ParseError(std::string("expected exactly one ") + what);
    return positional.front();
  }
};

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string join_labels(const fk::Json& list) {
  std::string out = "{";
  for (std::size_t i = 0; i < list.size(); ++i) out += (i ? ", " : "") + list[i].get<std::string>();
  return out + "}";
}

void print_text(const fk::Json& r) {
  std::cout << r["command"].get<std::string>() << ": n=" << r["n"] << " edges=" << r["edges"] << '\n';
  if (!r["verdict"].is_null()) std::cout << "verdict: " << (r["verdict"].get<bool>() ? "true" : "false") << '\n';
  if (!r["engine"].is_null()) std::cout << "engine: " << r["engine"].get<std::string>() << '\n';
  if (const auto& c = r["certificate"]; !c.is_null())
    std::cout << "certificate: S=" << join_labels(c["S"]) << " T=" << join_labels(c["T"])
              << " deficiency=" << c["deficiency"] << '\n';
  if (r.contains("failing_corner") && !r["failing_corner"].is_null())
    std::cout << "failing corner: S=" << join_labels(r["failing_corner"]) << '\n';
  if (r.contains("failing_prescription") && !r["failing_prescription"].is_null())
    std::cout << "failing prescription: " << r["failing_prescription"].dump() << '\n';
  if (const auto& h = r["indicator"]; !h.is_null()) {
    std::cout << "indicator (denominator " << h["denominator"] << "):\n";
    for (const auto& e : h["entries"])
      std::cout << "  " << e["u"].get<std::string>() << ' ' << e["v"].get<std::string>() << ' ' << e["numerator"]
                << '\n';
  }
  for (const auto& h : r["hypotheses"])
    std::cout << "hypothesis " << h["name"].get<std::string>() << ": " << h["lhs"] << ' '
              << h["relation"].get<std::string>() << ' ' << h["rhs"] << (h["vacuous"].get<bool>() ? " (vacuous)" : "")
              << " -> " << (h["holds"].get<bool>() ? "holds" : "fails") << '\n';
  if (r.contains("sharpness")) {
    const auto& s = r["sharpness"];
    std::cout << "sharpness " << s["family"].get<std::string>() << ' ' << s["parameters"].dump()
              << (s["verified"].get<bool>() ? " verified" : " NOT verified") << '\n';
    if (s.contains("inequalities"))
      for (const auto& q : s["inequalities"])
        std::cout << "  " << q["clause"].get<std::string>() << ": " << q["lhs"] << ' '
                  << q["relation"].get<std::string>() << ' ' << q["rhs"] << (q["holds"].get<bool>() ? "" : "  FAILED")
                  << '\n';
    if (s.contains("failed_clause")) std::cout << "  failed clause: " << s["failed_clause"].get<std::string>() << '\n';
  }
  if (r.contains("threshold")) std::cout << "threshold: " << r["threshold"] << '\n';
}

void emit(fk::Json& report, const Common& common, const Stopwatch& clock) {
  report["timing_ms"] = clock.elapsed_ms();
  if (common.json)
    std::cout << report.dump(2) << '\n';
  else
    print_text(report);
}

// ---------------------------------------------------------------------------

int cmd_check(const Params& p, const Common& common) {
  Stopwatch clock;
  p.allow({"g", "f"});
  const auto g = fk::load_graph(p.single_positional("graph file"));
  const auto lower = fk::parse_prescription_spec(p.get("g"), g);
  const auto upper = fk::parse_prescription_spec(p.get("f"), g);
  auto result = fk::fractional_gf_feasible(g.graph, lower, upper, common.enumeration());
  auto report = fk::report_skeleton("check", g);
  fk::fill_fractional(report, result, g);
  emit(report, common, clock);
  return 0;
}

int cmd_check_all(const Params& p, const Common& common, const std::string& oracle, bool no_fast_path) {
  Stopwatch clock;
  p.allow({"a", "b", "g", "f"});
  const auto g = fk::load_graph(p.single_positional("graph file"));
  const bool constant = p.has("a") || p.has("b");
  if (constant && (p.has("g") || p.has("f"))) throw fk::ParseError("give either a=/b= or g=/f=, not both");
  fk::DegreeFunc lower, upper;
  std::int64_t a = 0, b = 0;
  if (constant) {
    a = p.integer("a");
    b = p.integer("b");
    if (a <= 0 || a > b) throw fk::DomainError("check-all requires 1 <= a <= b");
    lower = fk::DegreeFunc::constant(g.graph.order(), a);
    upper = fk::DegreeFunc::constant(g.graph.order(), b);
  } else {
    lower = fk::parse_prescription_spec(p.get("g"), g);
    upper = fk::parse_prescription_spec(p.get("f"), g);
  }

  fk::AllFactorsVerdict verdict;
  if (oracle == "worst") {
    fk::AllFactorsOptions options{common.enumeration(), !no_fast_path};
    verdict = constant ? fk::has_all_fractional_ab(g.graph, a, b, options)
                       : fk::has_all_fractional(g.graph, lower, upper, options);
  } else {
    fk::OracleOptions options;
    options.enumeration = common.enumeration();
    verdict = oracle == "box" ? fk::box_oracle(g.graph, lower, upper, options)
                              : fk::corner_oracle(g.graph, lower, upper, options);
  }
  auto report = fk::report_skeleton("check-all", g);
  fk::fill_verdict(report, verdict, g);
  emit(report, common, clock);
  return 0;
}

int cmd_analyze(const Params& p, const Common& common) {
  Stopwatch clock;
  p.allow({"a", "b"});
  const auto g = fk::load_graph(p.single_positional("graph file"));
  const auto conditions = fk::lu3_hypotheses(g.graph, p.integer("a"), p.integer("b"));
  auto report = fk::report_skeleton("analyze", g);
  report["verdict"] = conditions.holds();
  report["engine"] = "sufficient-condition";
  report["hypotheses"] = fk::hypotheses_json(conditions);
  emit(report, common, clock);
  return 0;
}

int cmd_kano(const Params& p, const Common& common) {
  Stopwatch clock;
  p.allow({"a", "b", "f"});
  const auto g = fk::load_graph(p.single_positional("graph file"));
  const auto f = fk::parse_prescription_spec(p.get("f"), g);
  const auto conditions = fk::kano_hypotheses(g.graph, p.integer("a"), p.integer("b"), f);
  auto report = fk::report_skeleton("kano", g);
  report["verdict"] = conditions.holds();
  report["engine"] = "sufficient-condition";
  report["hypotheses"] = fk::hypotheses_json(conditions);
  emit(report, common, clock);
  return 0;
}

int cmd_niessen(const Params& p, const Common& common) {
  Stopwatch clock;
  p.allow({"g", "f"});
  const auto g = fk::load_graph(p.single_positional("graph file"));
  const auto lower = fk::parse_prescription_spec(p.get("g"), g);
  const auto upper = fk::parse_prescription_spec(p.get("f"), g);
  fk::NiessenOptions options;
  if (common.max_n > 0) options.max_n = common.max_n;
  const auto result = fk::niessen_all_integral(g.graph, lower, upper, options);
  auto report = fk::report_skeleton("niessen", g);
  fk::fill_niessen(report, result, g);
  emit(report, common, clock);
  return 0;
}

fk::Graph random_graph(std::int64_t n, double p, std::uint64_t seed) {
  if (n < 0 || n > (1 << 14)) throw fk::DomainError("random graph: n out of range");
  if (!(p >= 0.0 && p <= 1.0)) throw fk::DomainError("random graph: p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<fk::Edge> edges;
  for (fk::Vertex u = 0; u < n; ++u)
    for (fk::Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return fk::Graph(static_cast<std::size_t>(n), edges);
}

int cmd_generate(const Params& p, const Common& common, const std::string& out_file, std::uint64_t seed) {
  Stopwatch clock;
  const auto& family = p.single_positional("family");
  fk::Graph graph;
  bool seeded = false;
  if (family == "neighborhood") {
    p.allow({"a", "b", "m"});
    graph = fk::gen_neighborhood_sharp(p.integer("a"), p.integer("b"), p.integer("m"));
  } else if (family == "mindegree") {
    p.allow({"a", "b", "r"});
    graph = fk::gen_mindegree_sharp(p.integer("a"), p.integer("b"), p.integer("r"));
  } else if (family == "complete") {
    p.allow({"k"});
    const auto k = p.integer("k");
    if (k < 0 || k > (1 << 12)) throw fk::DomainError("complete: k out of range");
    graph = fk::complete_graph(static_cast<std::size_t>(k));
  } else if (family == "random") {
    p.allow({"n", "p"});
    graph = random_graph(p.integer("n"), p.real("p"), seed);
    seeded = true;
  } else {
    throw fk::ParseError("unknown family '" + family + "' (neighborhood, mindegree, complete, random)");
  }

  if (out_file.empty()) {
    fk::write_graph(std::cout, graph);
    return 0;
  }
  fk::save_graph(out_file, graph);
  const auto labeled = fk::with_default_labels(graph);
  auto report = fk::report_skeleton("generate", labeled);
  report["engine"] = "generator";
  report["family"] = family;
  report["output"] = out_file;
  if (seeded) report["seed"] = seed;
  emit(report, common, clock);
  return 0;
}

int cmd_sharpness(const Params& p, const Common& common, const std::string& graph_file) {
  Stopwatch clock;
  const auto family = fk::parse_family(p.single_positional("family"));
  fk::SharpnessInput input;
  input.family = family;
  if (family == fk::SharpnessFamily::Neighborhood) {
    p.allow({"a", "b", "m"});
    input.size = p.integer("m");
  } else {
    p.allow({"a", "b", "r"});
    input.size = p.integer("r");
  }
  input.a = p.integer("a");
  input.b = p.integer("b");

  const auto graph = graph_file.empty()
                         ? fk::with_default_labels(family == fk::SharpnessFamily::Neighborhood
                                                       ? fk::gen_neighborhood_sharp(input.a, input.b, input.size)
                                                       : fk::gen_mindegree_sharp(input.a, input.b, input.size))
                         : fk::load_graph(graph_file);
  auto report = fk::report_skeleton("sharpness", graph);
  try {
    const auto result = fk::verify_sharpness_on(graph.graph, input, common.enumeration());
    fk::fill_sharpness(report, result, graph);
    report["sharpness"]["verified"] = true;
  } catch (const fk::VerificationError& e) {
    fk::Json params{{"a", input.a}, {"b", input.b}};
    params[family == fk::SharpnessFamily::Neighborhood ? "m" : "r"] = input.size;
    report["sharpness"] = fk::Json{{"family", std::string(fk::family_name(family))},
                                   {"parameters", std::move(params)},
                                   {"verified", false},
                                   {"failed_clause", e.clause()},
                                   {"message", e.what()}};
  }
  emit(report, common, clock);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorkit: fractional (g,f)-factor feasibility, all-factors checks and sharpness constructions"};
  app.require_subcommand(1);

  Common common;
  std::vector<std::string> tokens;
  std::string oracle = "worst";
  bool no_fast_path = false;
  std::string out_file;
  std::string graph_file;
  std::uint64_t seed = 1;

  auto add_common = [&](CLI::App* sub, bool enumeration) {
    sub->add_option("args", tokens, "positional argument and key=value parameters")->required();
    sub->add_flag("--json", common.json, "print the JSON report");
    if (enumeration) {
      sub->add_option("--max-n", common.max_n, "enumeration cutoff on the graph order (default 24 or FACTORKIT_MAX_N)");
      sub->add_option("--workers", common.workers, "threads for exhaustive enumeration")->check(CLI::Range(1, 256));
    }
  };

  auto* check = app.add_subcommand("check", "fractional (g,f)-factor: GRAPH g=SPEC f=SPEC");
  add_common(check, true);
  auto* check_all = app.add_subcommand("check-all", "all fractional factors: GRAPH a=A b=B | g=SPEC f=SPEC");
  add_common(check_all, true);
  check_all->add_option("--oracle", oracle, "engine: worst, box or corner")
      ->check(CLI::IsMember({"worst", "box", "corner"}));
  check_all->add_flag("--no-fast-path", no_fast_path, "always enumerate, even when the sufficient condition holds");
  auto* analyze = app.add_subcommand("analyze", "minimum-degree / neighborhood-union hypotheses: GRAPH a=A b=B");
  add_common(analyze, false);
  auto* kano = app.add_subcommand("kano", "Kano-Tokushige f-factor hypotheses: GRAPH a=A b=B f=SPEC");
  add_common(kano, false);
  auto* niessen = app.add_subcommand("niessen", "integral all-(g,f)-factors criterion: GRAPH g=SPEC f=SPEC");
  add_common(niessen, true);
  auto* generate = app.add_subcommand("generate", "FAMILY params: neighborhood a b m | mindegree a b r | complete k | random n p");
  add_common(generate, false);
  generate->add_option("-o,--output", out_file, "write the graph here and print a report (default: graph to stdout)");
  generate->add_option("--seed", seed, "seed for the random family");
  auto* sharpness = app.add_subcommand("sharpness", "verify a sharpness construction: FAMILY a=A b=B m=M|r=R");
  add_common(sharpness, true);
  sharpness->add_option("--graph", graph_file, "verify this graph file instead of generating one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Params params(tokens);
    if (check->parsed()) return cmd_check(params, common);
    if (check_all->parsed()) return cmd_check_all(params, common, oracle, no_fast_path);
    if (analyze->parsed()) return cmd_analyze(params, common);
    if (kano->parsed()) return cmd_kano(params, common);
    if (niessen->parsed()) return cmd_niessen(params, common);
    if (generate->parsed()) return cmd_generate(params, common, out_file, seed);
    if (sharpness->parsed()) return cmd_sharpness(params, common, graph_file);
  } catch (const fk::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
