#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "cliquedyn/bounds.hpp"
#include "cliquedyn/census.hpp"
#include "cliquedyn/errors.hpp"
#include "cliquedyn/expression.hpp"
#include "cliquedyn/graph6.hpp"
#include "cliquedyn/report.hpp"

namespace fs = std::filesystem;
using namespace cliquedyn;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoHit = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimited = 3;

constexpr const char* kExpressionHelp = R"txt(Graph inputs:
  a file of graph6 lines, an edge-list file ("n m" then m lines "u v"),
  a graph6 string, or a constructor expression:
    cycle N | complete N | empty N | path N | octahedron M | bipartite A B | petersen
    union(E, E, ...) | join(E, E, ...) | complement(E)
  e.g. "complement(union(cycle 3, cycle 5))".)txt";

struct Common {
  BehaviorLimits limits;
  std::string format = "table";
  std::string out;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
};

void add_limits(CLI::App* app, Common& c) {
  app->add_option("--limit-iter", c.limits.max_iterations, "Maximum clique-graph iterations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--limit-vertices", c.limits.max_vertices, "Maximum order of an iterate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--limit-cliques", c.limits.max_cliques, "Maximum maximal-clique count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_output(CLI::App* app, Common& c) {
  app->add_option("--format", c.format, "Standard output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  app->add_option("--out", c.out, "Write the JSON report to this path");
}

void add_jobs(CLI::App* app, Common& c) {
  app->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

void emit_json(const Common& c, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (!c.out.empty()) write_file(c.out, text);
  if (c.format == "json") std::cout << text;
}

// Every graph named by `input`: file contents, expression, or graph6 string.
std::vector<Graph> load_graphs(const std::string& input) {
  if (fs::is_regular_file(input)) {
    std::ifstream f(input);
    std::stringstream buf;
    buf << f.rdbuf();
    const std::string text = buf.str();
    std::istringstream lines(text);
    std::string first;
    while (std::getline(lines, first) && first.find_first_not_of(" \t\r") == std::string::npos) {
    }
    const bool edge_list =
        first.find_first_not_of("0123456789 \t\r") == std::string::npos &&
        first.find_first_of("0123456789") != std::string::npos;
    if (edge_list) return {parse_edge_list(text)};
    std::vector<Graph> out;
    std::istringstream again(text);
    std::string line;
    while (std::getline(again, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      out.push_back(parse_graph6(line));
    }
    if (out.empty()) throw ParseError("no graphs in " + input, 0);
    return out;
  }
  try {
    return {parse_expression(input)};
  } catch (const ParseError& expr_error) {
    try {
      return {parse_graph6(input)};
    } catch (const ParseError&) {
      throw expr_error;
    }
  }
}

std::string join_members(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string describe(const BehaviorResult& b) {
  std::ostringstream os;
  os << b.status_name();
  if (const auto* c = std::get_if<Convergent>(&b.status)) {
    os << " (tail " << c->tail << ", period " << c->period << ")";
  } else if (const auto* d = std::get_if<Divergent>(&b.status)) {
    os << " (" << to_string(d->certificate.kind) << " " << d->certificate.parameter
       << " at iterate " << d->detected_at << ")";
  } else {
    const auto& u = std::get<Unknown>(b.status);
    os << " (" << to_string(u.limit) << " after " << u.iterations_done
       << " iterations, largest order " << u.max_order_seen << ")";
  }
  return os.str();
}

void print_analysis(const Analysis& a) {
  const auto [lo, hi] = std::minmax_element(a.degrees.begin(), a.degrees.end());
  std::cout << "graph6:    " << a.graph6 << "\n"
            << "order:     " << a.order << "\n"
            << "edges:     " << a.edges << "\n";
  if (!a.degrees.empty()) {
    if (*lo == *hi) std::cout << "degrees:   " << *lo << "-regular\n";
    else std::cout << "degrees:   " << *lo << ".." << *hi << "\n";
  }
  std::cout << "cliques:   "
            << (a.clique_count ? std::to_string(*a.clique_count) : std::string("over cap")) << "\n"
            << "helly:     " << (a.helly.is_helly ? "yes" : "no");
  if (a.helly.witness) std::cout << " (witness triangle " << join_members(a.helly.witness->members()) << ")";
  std::cout << "\nbehavior:  " << describe(a.behavior) << "\n"
            << "orders:   ";
  for (const auto& t : a.behavior.trace) std::cout << " " << t.order;
  std::cout << "\n";
}

int cmd_analyze(const std::string& input, const Common& c) {
  const std::vector<Graph> graphs = load_graphs(input);
  Json all = Json::array();
  bool limited = false;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Analysis a = analyze(graphs[i], c.limits);
    limited = limited || a.behavior.unknown();
    if (c.format == "table") {
      if (i) std::cout << "\n";
      print_analysis(a);
    }
    all.push_back(to_json(a));
  }
  emit_json(c, graphs.size() == 1 ? all[0] : all);
  return limited ? kExitLimited : kExitOk;
}

struct GenOptions {
  std::size_t k = 3;
  std::size_t n = 0;
  std::string mode = "exhaustive";
  std::size_t count = 100;
  std::uint64_t seed = 0;
  bool connected = false;
  std::size_t ceiling = 0;
};

void add_gen_options(CLI::App* app, GenOptions& g) {
  app->add_option("-k,--degree", g.k, "Vertex degree")->required();
  app->add_option("-n,--order", g.n, "Number of vertices")->required();
  app->add_option("--mode", g.mode, "Generation mode")
      ->check(CLI::IsMember({"exhaustive", "random"}))
      ->capture_default_str();
  app->add_option("--count", g.count, "Samples in random mode")->capture_default_str();
  app->add_option("--seed", g.seed, "Seed for random mode")->capture_default_str();
  app->add_flag("--connected", g.connected, "Connected graphs only");
  app->add_option("--ceiling", g.ceiling, "Override the exhaustive order ceiling");
}

RegularGenSpec to_spec(const GenOptions& g) {
  RegularGenSpec s;
  s.k = g.k;
  s.n = g.n;
  s.mode = g.mode == "random" ? GenMode::Random : GenMode::Exhaustive;
  s.count = g.count;
  s.seed = g.seed;
  s.connectivity = g.connected ? Connectivity::ConnectedOnly : Connectivity::Any;
  return s;
}

void warn(const std::string& w) { std::cerr << "warning: " << w << "\n"; }

int cmd_census(const GenOptions& g, const std::vector<std::string>& check_names, bool runtime,
               const Common& c) {
  std::set<Check> checks;
  for (const auto& name : check_names) {
    if (name == "all") {
      checks = all_checks();
      continue;
    }
    auto check = parse_check(name);
    if (!check) throw DomainError("unknown check '" + name + "'");
    checks.insert(*check);
  }
  if (checks.empty()) checks.insert(Check::Helly);
  CensusOptions options;
  options.jobs = c.jobs;
  if (g.ceiling) options.ceiling = g.ceiling;
  options.record_runtime = runtime;
  const CensusReport r = run_census(to_spec(g), checks, c.limits, options);
  for (const auto& w : r.warnings) warn(w);

  if (c.format == "table") {
    std::cout << "census k=" << g.k << " n=" << g.n << " (" << g.mode << ")\n"
              << "  graphs                        " << r.graphs << "\n"
              << "  connected                     " << r.connected << "\n";
    for (const auto& [key, value] : r.counts) {
      std::string pad(std::max<int>(1, 30 - static_cast<int>(key.size())), ' ');
      std::cout << "  " << key << pad << value << "\n";
    }
    for (const auto& [category, list] : r.exemplars) {
      std::cout << "  exemplars " << category << ": " << list.size() << "\n";
      for (std::size_t i = 0; i < std::min<std::size_t>(list.size(), 5); ++i)
        std::cout << "    " << list[i] << "\n";
      if (list.size() > 5) std::cout << "    ...\n";
    }
    if (r.runtime_seconds) std::cout << "  runtime                       " << *r.runtime_seconds << " s\n";
  }
  emit_json(c, to_json(r));
  if (!c.out.empty()) {
    const fs::path base(c.out);
    for (const auto& [category, list] : r.exemplars) {
      std::string lines;
      for (const auto& g6 : list) lines += g6 + "\n";
      fs::path p = base;
      p.replace_extension("." + category + ".g6");
      write_file(p.string(), lines);
    }
  }
  return r.any_unknown() ? kExitLimited : kExitOk;
}

int cmd_search(const GenOptions& g, const std::string& target, std::size_t budget,
               std::size_t max_hits, const Common& c) {
  SearchSpec s;
  s.k = g.k;
  s.n = g.n;
  s.target = *parse_search_target(target);
  s.mode = g.mode == "random" ? GenMode::Random : GenMode::Exhaustive;
  s.connectivity = g.connected ? Connectivity::ConnectedOnly : Connectivity::Any;
  s.budget = budget;
  s.seed = g.seed;
  s.max_hits = max_hits;
  s.limits = c.limits;
  if (g.ceiling) s.ceiling = g.ceiling;
  const SearchReport r = search(s, c.jobs);
  if (c.format == "table") {
    std::cout << "search k=" << g.k << " n=" << g.n << " target=" << target << "\n"
              << "  examined " << r.examined << ", unknown " << r.unknown << ", hits "
              << r.hits.size() << "\n";
    for (const auto& h : r.hits) {
      std::cout << "  " << h.graph6;
      if (h.complement_behavior) std::cout << "  " << describe(*h.complement_behavior);
      if (h.revalidated) std::cout << (*h.revalidated ? "  revalidated" : "  REVALIDATION FAILED");
      std::cout << "\n";
    }
  }
  emit_json(c, to_json(r));
  if (!c.out.empty()) {
    std::string lines;
    for (const auto& h : r.hits) lines += h.graph6 + "\n";
    fs::path p(c.out);
    p.replace_extension(".g6");
    write_file(p.string(), lines);
  }
  return r.hits.empty() ? kExitNoHit : kExitOk;
}

int cmd_bound(std::size_t k_max, std::size_t single_n, std::size_t single_k, const Common& c) {
  Json rows = Json::array();
  if (single_n) {
    rows.push_back(to_json(bound_report(static_cast<std::int64_t>(single_n),
                                        static_cast<std::int64_t>(single_k))));
  } else {
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(k_max); ++k)
      rows.push_back(to_json(bound_report(helly_threshold(k), k)));
  }
  if (c.format == "table") {
    std::cout << "   k     N   a(N,k)  a(N-1,k)      C(N,k)   T(N,k)  contradiction\n";
    for (const auto& row : rows) {
      const auto k = row["k"].get<std::int64_t>();
      const auto n = row["n"].get<std::int64_t>();
      char line[160];
      std::snprintf(line, sizeof line, "%4lld %5lld %8lld %9lld %11s %8s  %s\n",
                    static_cast<long long>(k), static_cast<long long>(n),
                    static_cast<long long>(row["a"].get<std::int64_t>()),
                    static_cast<long long>(a_poly(n - 1, k)),
                    row["cnk"].get<std::string>().c_str(),
                    row["tnk"].is_null() ? "-" : std::to_string(row["tnk"].get<std::int64_t>()).c_str(),
                    row["contradiction"].get<bool>() ? "yes" : "no");
      std::cout << line;
    }
  }
  emit_json(c, single_n ? rows[0] : rows);
  return kExitOk;
}

int cmd_gen(const GenOptions& g, const Common& c) {
  EnumerationOptions options;
  options.warn = warn;
  if (g.ceiling) options.ceiling = g.ceiling;
  const auto graphs = generate_regular(to_spec(g), options);
  std::string lines;
  for (const auto& graph : graphs) lines += to_graph6(graph) + "\n";
  if (!c.out.empty()) write_file(c.out, lines);
  else std::cout << lines;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clique-graph dynamics toolkit"};
  app.footer(kExpressionHelp);
  app.require_subcommand(1);

  Common common;
  std::string input;
  auto* analyze_cmd = app.add_subcommand("analyze", "Helly test and clique-graph behavior of a graph");
  analyze_cmd->add_option("input", input, "File, graph6 string or expression")->required();
  add_limits(analyze_cmd, common);
  add_output(analyze_cmd, common);

  GenOptions gen;
  std::vector<std::string> checks;
  bool runtime = false;
  auto* census_cmd = app.add_subcommand("census", "Check every k-regular graph of order n");
  add_gen_options(census_cmd, gen);
  census_cmd
      ->add_option("--check", checks,
                   "helly, behavior, lorden, vertex-cap, cover or all (repeatable; default helly)")
      ->delimiter(',');
  census_cmd->add_flag("--runtime", runtime, "Include wall time in the report");
  add_limits(census_cmd, common);
  add_output(census_cmd, common);
  add_jobs(census_cmd, common);

  std::string target = "convergent-nonhelly-complement";
  std::size_t budget = 1000, max_hits = 0;
  auto* search_cmd = app.add_subcommand("search", "Look for k-regular graphs with a given complement");
  add_gen_options(search_cmd, gen);
  search_cmd->add_option("--target", target, "Predicate on the complement")
      ->check(CLI::IsMember({"convergent-nonhelly-complement", "helly-complement",
                             "divergent-complement"}))
      ->capture_default_str();
  search_cmd->add_option("--budget", budget, "Maximum candidates examined")->capture_default_str();
  search_cmd->add_option("--max-hits", max_hits, "Stop after this many hits (0 = all)");
  add_limits(search_cmd, common);
  add_output(search_cmd, common);
  add_jobs(search_cmd, common);

  std::size_t k_max = 10, single_n = 0, single_k = 0;
  auto* bound_cmd = app.add_subcommand("bound", "Threshold table for the non-Helly bound");
  bound_cmd->add_option("--k-max", k_max, "Last degree in the table")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* n_opt = bound_cmd->add_option("-n,--order", single_n, "Report a single order instead");
  bound_cmd->add_option("-k,--degree", single_k, "Degree for --order")->needs(n_opt);
  add_output(bound_cmd, common);

  GenOptions gen_only;
  auto* gen_cmd = app.add_subcommand("gen", "Print k-regular graphs as graph6 lines");
  add_gen_options(gen_cmd, gen_only);
  gen_cmd->add_option("--out", common.out, "Write to this path instead of standard output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(input, common);
    if (*census_cmd) return cmd_census(gen, checks, runtime, common);
    if (*search_cmd) return cmd_search(gen, target, budget, max_hits, common);
    if (*bound_cmd) return cmd_bound(k_max, single_n, single_k, common);
    if (*gen_cmd) return cmd_gen(gen_only, common);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitLimited;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
