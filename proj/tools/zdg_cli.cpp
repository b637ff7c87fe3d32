#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "zdg/clique.hpp"
#include "zdg/enumerator.hpp"
#include "zdg/equations.hpp"
#include "zdg/io.hpp"
#include "zdg/recognizer.hpp"

using namespace zdg;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string json_path;
  std::uint64_t seed = 0;
  bool seed_given = false;
  unsigned max_n = kMaxPowersetN;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

void emit_json(const Common& c, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (c.json_path.empty())
    std::cout << text;
  else
    write_text(c.json_path, text);
}

CayleySemigroup load_semigroup(const std::string& text) {
  auto r = parse_cayley_table(text);
  if (!r) {
    std::ostringstream msg;
    msg << "invalid table:";
    for (const auto& v : r.violations) msg << "\n  " << v.describe();
    throw InputError(msg.str());
  }
  return std::move(*r.semigroup);
}

Graph load_graph(const std::string& path) {
  const std::string text = slurp(path);
  if (looks_like_cayley_table(text)) return zero_divisor_graph(load_semigroup(text)).graph;
  return parse_edge_list(text);
}

int cmd_powerset(const Common& c, unsigned n, const std::string& table_path,
                 const std::string& edges_path) {
  if (n < 1 || n > c.max_n)
    throw InputError("n must be in 1.." + std::to_string(c.max_n));
  const auto s = powerset_semigroup(n);
  const Graph g = powerset_graph(n);
  const bool table_to_stdout = table_path.empty() && edges_path.empty() && c.json_path.empty();
  if (table_to_stdout || !table_path.empty()) {
    if (s.order() > kMaxTableOrder) throw InputError("table too large to print; use --edges");
    std::ostringstream t;
    write_cayley_table(t, s);
    if (table_to_stdout)
      std::cout << t.str();
    else
      write_text(table_path, t.str());
  }
  if (!edges_path.empty()) {
    std::ostringstream e;
    write_edge_list(e, g);
    write_text(edges_path, e.str());
  }
  if (!c.json_path.empty()) {
    Json j;
    j["n"] = n;
    j["order"] = s.order();
    j["vertices"] = g.size();
    j["edges"] = g.edge_count();
    emit_json(c, j);
  }
  return kOk;
}

int cmd_check(const Common& c, const std::string& path) {
  auto r = parse_cayley_table(slurp(path));
  Json j;
  j["valid"] = static_cast<bool>(r);
  if (!r) {
    j["violations"] = violations_json(r.violations);
    emit_json(c, j);
    for (const auto& v : r.violations) std::cerr << v.describe() << '\n';
    return kInputError;
  }
  const auto& s = *r.semigroup;
  j["order"] = s.order();
  if (s.identity())
    j["identity"] = s.label(*s.identity());
  else
    j["identity"] = nullptr;
  j["zero_divisors"] = zero_divisor_set(s).count();
  j["idempotent"] = all_idempotent(s);
  emit_json(c, j);
  return kOk;
}

int cmd_recognize(const Common& c, const std::string& path) {
  const Graph g = load_graph(path);
  const auto r = recognize(g);
  if (r.omega > c.max_n) throw InputError("clique number exceeds --max-n");
  emit_json(c, recognition_json(g, r));
  return r.diagnosis.accepted() ? kOk : kFail;
}

int cmd_enumerate(const Common& c, std::size_t order, const std::string& mode, std::size_t count,
                  bool idempotent, bool unity, const std::string& out_path,
                  const std::string& tables_path) {
  EnumerationConfig cfg;
  cfg.order = order;
  cfg.mode = mode == "sample" ? EnumerationMode::RandomSample : EnumerationMode::Exhaustive;
  cfg.count = count;
  if (c.seed_given) cfg.seed = c.seed;
  cfg.require_idempotent = idempotent;
  cfg.require_unity = unity;
  try {
    check_config(cfg);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }

  std::ostringstream lines, tables;
  std::size_t total = 0, failures = 0;
  enumerate(cfg, [&](const CayleySemigroup& s) {
    const auto rep = property_suite(s);
    ++total;
    if (!rep.all_passed()) ++failures;
    Json j;
    j["hash"] = canonical_hash(s);
    j["order"] = s.order();
    j["zero_divisors"] = zero_divisor_set(s).count();
    j["suite"] = property_json(rep);
    lines << j.dump() << '\n';
    if (!tables_path.empty()) write_cayley_table(tables, s);
  });
  if (out_path.empty())
    std::cout << lines.str();
  else
    write_text(out_path, lines.str());
  if (!tables_path.empty()) write_text(tables_path, tables.str());
  if (!c.json_path.empty()) {
    Json j;
    j["order"] = order;
    j["mode"] = mode;
    j["emitted"] = total;
    j["failures"] = failures;
    emit_json(c, j);
  }
  return failures == 0 ? kOk : kFail;
}

int cmd_export_dot(const Common& c, const std::string& path, bool layers,
                   const std::string& out_path) {
  const Graph g = load_graph(path);
  std::optional<Recognition> r;
  if (layers) {
    r = recognize(g);
    if (!r->diagnosis.accepted())
      std::cerr << "not recognized (" << r->diagnosis.failed_check << "); layers omitted\n";
  }
  std::ostringstream dot;
  write_dot(dot, g, r && r->partition ? &*r->partition : nullptr);
  if (out_path.empty())
    std::cout << dot.str();
  else
    write_text(out_path, dot.str());
  if (!c.json_path.empty() && r) emit_json(c, recognition_json(g, *r));
  return !r || r->diagnosis.accepted() ? kOk : kFail;
}

int cmd_equations(const Common& c, const std::string& path) {
  const auto s = load_semigroup(slurp(path));
  const auto zg = zero_divisor_graph(s);
  const auto r = recognize(zg.graph);
  Json j;
  if (!r.diagnosis.accepted()) {
    j = recognition_json(zg.graph, r);
    emit_json(c, j);
    return kFail;
  }
  const auto report = equation_suite(s, frame_from_partition(zg, *r.partition));
  j["n"] = r.omega;
  j["all_passed"] = report.all_passed();
  j["checks"] = equations_json(report);
  emit_json(c, j);
  return report.all_passed() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-divisor graphs of finite commutative semigroups"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  Common common;
  app.add_option("--json", common.json_path, "Write the JSON report to this path");
  auto* seed_opt = app.add_option("--seed", common.seed, "Random seed");
  app.add_option("--max-n", common.max_n, "Largest n accepted")->check(CLI::Range(1U, 64U));

  auto* powerset = app.add_subcommand("powerset", "Emit P(n) and G(P(n))");
  unsigned n = 0;
  std::string table_path, edges_path;
  powerset->add_option("n", n)->required();
  powerset->add_option("--table", table_path, "Write the Cayley table here");
  powerset->add_option("--edges", edges_path, "Write the edge list of G(P(n)) here");

  auto* check = app.add_subcommand("check", "Validate a Cayley table");
  std::string check_path;
  check->add_option("table", check_path)->required()->check(CLI::ExistingFile);

  auto* recog = app.add_subcommand("recognize", "Recognize G(P(n)) from an edge list or table");
  std::string recog_path;
  recog->add_option("input", recog_path)->required()->check(CLI::ExistingFile);

  auto* enumer = app.add_subcommand("enumerate", "Enumerate semigroups and test G(S)");
  std::size_t order = 0, count = 0;
  std::string mode = "exhaustive", out_path, tables_path;
  bool idempotent = false, unity = false;
  enumer->add_option("--order", order)->required();
  enumer->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sample"}));
  enumer->add_option("--count", count, "Samples to draw");
  enumer->add_flag("--idempotent", idempotent);
  enumer->add_flag("--unity", unity);
  enumer->add_option("--out", out_path, "Write JSON lines here");
  enumer->add_option("--tables", tables_path, "Write the emitted tables here");

  auto* dot = app.add_subcommand("export-dot", "Write a graph as DOT");
  std::string dot_path, dot_out;
  bool layers = false;
  dot->add_option("input", dot_path)->required()->check(CLI::ExistingFile);
  dot->add_flag("--layers", layers, "Color vertices by layer");
  dot->add_option("--out", dot_out);

  auto* eqs = app.add_subcommand("equations", "Check the structural equations on a table");
  std::string eq_path;
  eqs->add_option("table", eq_path)->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  common.seed_given = seed_opt->count() > 0;

  try {
    if (*powerset) return cmd_powerset(common, n, table_path, edges_path);
    if (*check) return cmd_check(common, check_path);
    if (*recog) return cmd_recognize(common, recog_path);
    if (*enumer)
      return cmd_enumerate(common, order, mode, count, idempotent, unity, out_path, tables_path);
    if (*dot) return cmd_export_dot(common, dot_path, layers, dot_out);
    if (*eqs) return cmd_equations(common, eq_path);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
