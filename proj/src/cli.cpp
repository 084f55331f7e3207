#include "convlab/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "convlab/bounds.hpp"
#include "convlab/catalog.hpp"
#include "convlab/conversion.hpp"
#include "convlab/error.hpp"
#include "convlab/io.hpp"
#include "convlab/recipe.hpp"
#include "convlab/solver.hpp"
#include "convlab/structure.hpp"
#include "convlab/verify.hpp"

namespace convlab {

using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kError = 2;

// "-" reads stdin, "catalog:<name>" and "recipe:<json>" build in memory,
// anything else is a graph6 or edge-list file.
Graph load_graph(const std::string& source) {
  if (source == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_graph(text);
  }
  if (source.rfind("catalog:", 0) == 0) return catalog(source.substr(8));
  if (source.rfind("recipe:", 0) == 0) return build(parse_recipe(source.substr(7)));
  return read_graph_file(source);
}

json to_json(const VertexSet& s) { return s.members(); }

json edges_json(const std::vector<Edge>& es) {
  json out = json::array();
  for (auto [u, v] : es) out.push_back({u, v});
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string emit_graph(const Graph& g, const std::string& format) {
  if (format == "edges") return to_edge_list(g);
  return to_graph6(g) + "\n";
}

json trace_json(const ConversionTrace& t) {
  json layers = json::array();
  for (const auto& l : t.layers) layers.push_back(to_json(l));
  return {{"k", t.threshold}, {"layers", layers}, {"complete", t.complete}, {"time", t.time},
          {"converted", t.converted.size()}};
}

const char* side_name(BoundSide s) {
  switch (s) {
    case BoundSide::Lower: return "lower";
    case BoundSide::Upper: return "upper";
    case BoundSide::Exact: return "exact";
  }
  return "?";
}

json bounds_json(const BoundReport& rep) {
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"name", e.name},
                       {"side", side_name(e.side)},
                       {"value", e.value.to_string()},
                       {"integer", e.integer_value},
                       {"applicable", e.applicable},
                       {"citation", e.citation}});
  return {{"k", rep.k}, {"entries", entries}};
}

void print_bounds_table(std::ostream& out, const BoundReport& rep) {
  std::size_t width = 4;
  for (const auto& e : rep.entries) width = std::max(width, e.name.size());
  out << std::left << std::setw(static_cast<int>(width)) << "name" << "  side   value      int  applies  statement\n";
  for (const auto& e : rep.entries) {
    out << std::left << std::setw(static_cast<int>(width)) << e.name << "  " << std::setw(5) << side_name(e.side) << "  "
        << std::setw(9) << e.value.to_string() << "  " << std::setw(3) << e.integer_value << "  "
        << std::setw(7) << yes_no(e.applicable) << "  " << e.citation << "\n";
  }
}

json structure_json(const StructureReport& r) {
  json j = {{"order", r.order},
            {"edges", r.edge_count},
            {"connected", r.connected},
            {"bridges", edges_json(r.bridge_list)},
            {"vertex_connectivity", r.vertex_connectivity},
            {"edge_connectivity", r.edge_connectivity},
            {"triangle_free", r.triangle_free}};
  j["regular_degree"] = r.regular_degree ? json(*r.regular_degree) : json(nullptr);
  j["girth"] = r.girth ? json(*r.girth) : json(nullptr);
  j["cyclically_4_connected"] = r.cyclically_4_connected ? json(*r.cyclically_4_connected) : json(nullptr);
  j["chromatic_class"] = r.chromatic_class ? json(to_string(*r.chromatic_class)) : json(nullptr);
  return j;
}

json outcome_json(const VerificationOutcome& o, bool all_instances) {
  json inst = json::array();
  for (const auto& i : o.instances)
    if (all_instances || !i.pass)
      inst.push_back({{"recipe", i.recipe}, {"expected", i.expected}, {"observed", i.observed}, {"pass", i.pass}});
  return {{"id", o.id},
          {"statement", o.statement},
          {"size_limit", o.size_limit},
          {"pass", o.pass()},
          {"checked", o.instances.size()},
          {"failures", o.failures()},
          {"runtime_s", o.runtime.count()},
          {"instances", inst}};
}

void print_outcome(std::ostream& out, const VerificationOutcome& o, bool verbose) {
  out << (o.pass() ? "PASS " : "FAIL ") << std::left << std::setw(28) << o.id << std::right << std::setw(5)
      << o.instances.size() << " checks  " << std::fixed << std::setprecision(2) << o.runtime.count() << "s  "
      << o.statement << "\n";
  for (const auto& i : o.instances) {
    if (i.pass && !verbose) continue;
    out << "    " << (i.pass ? "ok   " : "FAIL ") << i.recipe << "\n"
        << "         expected: " << i.expected << "\n"
        << "         observed: " << i.observed << "\n";
  }
}

struct Options {
  std::string graph;
  std::string seed_set;
  int k = 2;
  bool json = false;
  bool certify = false;
  bool list = false;
  bool verbose = false;
  std::string name;
  std::string format = "graph6";
  std::string recipe;
  std::string kind;
  std::vector<std::string> params;
  std::string suite = "all";
  int size_limit = 0;
  int threads = 0;
};

// "key=value" flags for construct; values parse as JSON when possible so
// integers and nested recipes keep their type, otherwise stay strings.
Recipe recipe_from_flags(const std::string& kind, const std::vector<std::string>& params) {
  json spec = {{"kind", kind}};
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected key=value, got '" + p + "'");
    const std::string key = p.substr(0, eq), value = p.substr(eq + 1);
    json v = json::parse(value, nullptr, false);
    spec[key] = v.is_discarded() ? json(value) : v;
  }
  return parse_recipe(spec);
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const auto tr = run_process(g, parse_vertex_list(g.order(), o.seed_set), o.k);
  if (o.json) {
    out << trace_json(tr).dump() << "\n";
  } else {
    out << trace_to_text(tr);
    out << "converted " << tr.converted.size() << "/" << g.order() << (tr.complete ? " (complete)" : " (stalled)")
        << "\n";
  }
  return kPass;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const VertexSet s = parse_vertex_list(g.order(), o.seed_set);
  const auto rep = characterization_check(g, s, o.k);
  const bool agree = !rep.complement_rule || *rep.complement_rule == rep.simulated;
  if (o.json) {
    json j = {{"k", o.k}, {"size", s.size()}, {"converts", rep.simulated}};
    if (rep.complement_rule) j["complement_rule"] = {{"rule", rep.rule}, {"r", *rep.r}, {"holds", *rep.complement_rule}};
    if (!rep.simulated) j["residual_core"] = to_json(residual_core(g, s.complement(), o.k));
    out << j.dump() << "\n";
  } else {
    out << "k-conversion set: " << yes_no(rep.simulated) << " (|S| = " << s.size() << ", k = " << o.k << ")\n";
    if (rep.complement_rule) out << rep.rule << " (r = " << *rep.r << "): " << yes_no(*rep.complement_rule) << "\n";
    if (!rep.simulated) out << "residual immune core: {" << residual_core(g, s.complement(), o.k).to_string() << "}\n";
  }
  if (!agree) return kError;
  return rep.simulated ? kPass : kFail;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const auto res = ck_exact(g, o.k);
  json j = {{"k", o.k},
            {"value", res.value},
            {"witness", to_json(res.witness)},
            {"method", to_string(res.method)},
            {"nodes", res.nodes_explored},
            {"elapsed_s", res.elapsed.count()}};
  bool ok = true;
  if (o.certify) {
    const bool converts = is_conversion_set(g, res.witness, o.k);
    ok = converts && res.witness.size() == res.value;
    j["certify"] = {{"witness_converts", converts}};
    const SolverOptions guard;
    if (g.order() <= guard.oracle_max_order) {
      const int oracle = ck_oracle(g, o.k).value;
      j["certify"]["oracle_value"] = oracle;
      ok = ok && oracle == res.value;
    } else {
      j["certify"]["oracle_value"] = nullptr;
    }
    j["certify"]["ok"] = ok;
  }
  if (o.json) {
    out << j.dump() << "\n";
  } else {
    out << "c_" << o.k << " = " << res.value << "\n"
        << "witness: {" << res.witness.to_string() << "}\n"
        << "method: " << to_string(res.method) << ", nodes " << res.nodes_explored << ", " << std::fixed
        << std::setprecision(3) << res.elapsed.count() << "s\n";
    if (o.certify) {
      out << "witness converts: " << yes_no(j["certify"]["witness_converts"]) << "\n";
      if (j["certify"]["oracle_value"].is_null())
        out << "minimality: not checked (order above oracle guard)\n";
      else
        out << "oracle value: " << j["certify"]["oracle_value"].get<int>() << "\n";
      out << "certificate: " << (ok ? "ok" : "FAILED") << "\n";
    }
  }
  return ok ? kPass : kFail;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.graph);
  const auto low = lower_bounds(g, o.k);
  const bool cubic = is_cubic(g) && g.order() > 4 && o.k == 2;
  if (o.json) {
    json j = {{"lower", bounds_json(low)}};
    if (cubic) j["upper"] = bounds_json(upper_bounds_cubic(g));
    out << j.dump() << "\n";
    return kPass;
  }
  out << "lower bounds on c_" << o.k << " (n = " << g.order() << ")\n";
  print_bounds_table(out, low);
  if (cubic) {
    out << "\nupper bounds on c_2 (cubic)\n";
    print_bounds_table(out, upper_bounds_cubic(g));
  }
  return kPass;
}

int cmd_construct(const Options& o, std::ostream& out) {
  if (o.recipe.empty() == o.kind.empty()) throw ParseError("construct needs exactly one of --recipe or --kind");
  const Recipe r = o.recipe.empty() ? recipe_from_flags(o.kind, o.params) : parse_recipe(o.recipe);
  const Graph g = build(r);
  if (o.json)
    out << json{{"recipe", r.spec}, {"order", g.order()}, {"edges", g.edge_count()}, {"graph6", to_graph6(g)}}.dump()
        << "\n";
  else
    out << emit_graph(g, o.format);
  return kPass;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  if (o.list || o.name.empty()) {
    json list = json::array();
    for (const auto& e : catalog_entries()) {
      const Graph g = catalog(e.name);
      if (o.json)
        list.push_back({{"name", e.name}, {"order", g.order()}, {"description", e.description}});
      else
        out << std::left << std::setw(14) << e.name << std::right << std::setw(4) << g.order() << "  " << e.description
            << "\n";
    }
    if (o.json) out << list.dump() << "\n";
    else out << "families: empty-N complete-N cycle-N path-N matching-N star-N\n";
    return kPass;
  }
  const Graph g = catalog(o.name);
  if (o.json)
    out << json{{"name", o.name}, {"order", g.order()}, {"edges", g.edge_count()}, {"graph6", to_graph6(g)}}.dump() << "\n";
  else
    out << emit_graph(g, o.format);
  return kPass;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto rep = classify(load_graph(o.graph));
  if (o.json) {
    out << structure_json(rep).dump() << "\n";
    return kPass;
  }
  auto opt = [](const auto& v, auto f) { return v ? f(*v) : std::string("-"); };
  out << "order                " << rep.order << "\n"
      << "edges                " << rep.edge_count << "\n"
      << "regular degree       " << opt(rep.regular_degree, [](int d) { return std::to_string(d); }) << "\n"
      << "girth                " << opt(rep.girth, [](int d) { return std::to_string(d); }) << "\n"
      << "connected            " << yes_no(rep.connected) << "\n"
      << "bridges              " << rep.bridge_list.size() << "\n"
      << "vertex connectivity  " << rep.vertex_connectivity << "\n"
      << "edge connectivity    " << rep.edge_connectivity << "\n"
      << "cyclically 4-conn    " << opt(rep.cyclically_4_connected, [](bool b) { return yes_no(b); }) << "\n"
      << "chromatic class      "
      << opt(rep.chromatic_class, [](ChromaticClass c) { return std::string(to_string(c)); }) << "\n"
      << "triangle-free        " << yes_no(rep.triangle_free) << "\n";
  return kPass;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<VerificationOutcome> results;
  if (o.suite == "all") results = verify_all(o.size_limit, o.threads);
  else results.push_back(verify_proposition(o.suite, o.size_limit));
  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass();
  if (o.json) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(outcome_json(r, o.verbose));
    out << json{{"pass", pass}, {"suites", arr}}.dump() << "\n";
  } else {
    for (const auto& r : results) print_outcome(out, r, o.verbose);
    if (results.size() > 1) {
      int failed = 0;
      for (const auto& r : results) failed += r.pass() ? 0 : 1;
      out << (pass ? "all " + std::to_string(results.size()) + " suites pass"
                   : std::to_string(failed) + " of " + std::to_string(results.size()) + " suites fail")
          << "\n";
    }
  }
  return pass ? kPass : kFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"convlab: irreversible k-threshold conversion on graphs"};
  app.require_subcommand(1);
  Options o;

  auto graph_opt = [&](CLI::App* sub) {
    sub->add_option("--graph,-g", o.graph, "graph6 / edge-list file, '-' for stdin, catalog:<name> or recipe:<json>")
        ->required();
  };
  auto k_opt = [&](CLI::App* sub) { sub->add_option("-k", o.k, "threshold")->check(CLI::PositiveNumber); };
  auto json_opt = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };

  auto* simulate = app.add_subcommand("simulate", "run the threshold process and print its layers");
  graph_opt(simulate);
  simulate->add_option("--seed-set,-s", o.seed_set, "comma-separated seed vertices")->required();
  k_opt(simulate);
  json_opt(simulate);

  auto* check = app.add_subcommand("check", "test whether a seed set converts the graph");
  graph_opt(check);
  check->add_option("--seed-set,-s", o.seed_set, "comma-separated seed vertices")->required();
  k_opt(check);
  json_opt(check);

  auto* solve = app.add_subcommand("solve", "exact c_k with a lexicographically least witness");
  graph_opt(solve);
  k_opt(solve);
  solve->add_flag("--certify", o.certify, "re-check the witness by simulation and minimality by exhaustive search");
  json_opt(solve);

  auto* bounds = app.add_subcommand("bounds", "evaluate every applicable bound");
  graph_opt(bounds);
  k_opt(bounds);
  json_opt(bounds);

  auto* construct = app.add_subcommand("construct", "build a graph from a recipe");
  construct->add_option("--recipe,-r", o.recipe, "recipe JSON");
  construct->add_option("--kind", o.kind, "recipe kind, with --param key=value");
  construct->add_option("--param,-p", o.params, "recipe field key=value");
  construct->add_option("--format,-f", o.format, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));
  json_opt(construct);

  auto* cat = app.add_subcommand("catalog", "named graphs");
  cat->add_flag("--list,-l", o.list, "list names and orders");
  cat->add_option("name", o.name, "entry to print");
  cat->add_option("--format,-f", o.format, "graph6 or edges")->check(CLI::IsMember({"graph6", "edges"}));
  json_opt(cat);

  auto* cls = app.add_subcommand("classify", "structural report");
  graph_opt(cls);
  json_opt(cls);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", o.suite, "suite id or 'all'");
  verify->add_option("--size-limit", o.size_limit, "largest order solved exactly (0 = suite default)");
  verify->add_option("--threads", o.threads, "worker count (default CONVLAB_THREADS or hardware)");
  verify->add_flag("--verbose,-v", o.verbose, "list passing instances too");
  verify->add_flag("--list", o.list, "list suite ids");
  json_opt(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kError;
  }

  try {
    if (*simulate) return cmd_simulate(o, out);
    if (*check) return cmd_check(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*construct) return cmd_construct(o, out);
    if (*cat) return cmd_catalog(o, out);
    if (*cls) return cmd_classify(o, out);
    if (*verify) {
      if (o.list) {
        for (const auto& s : verification_suites())
          out << std::left << std::setw(28) << s.id << std::right << std::setw(4) << s.default_size_limit << "  "
              << s.statement << "\n";
        return kPass;
      }
      return cmd_verify(o, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"convlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace convlab
