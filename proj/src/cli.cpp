#include "factorspec/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "factorspec/conditions.hpp"
#include "factorspec/error.hpp"
#include "factorspec/extremal.hpp"
#include "factorspec/graph.hpp"
#include "factorspec/harness.hpp"
#include "factorspec/spectral.hpp"

namespace factorspec {

namespace {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Input helpers

std::string read_text(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<long long> read_integers(const std::string &path) {
  std::istringstream in(read_text(path));
  std::vector<long long> out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(token, &used));
      if (used != token.size())
        throw InputError("");
    } catch (const std::exception &) {
      throw InputError("'" + path + "': '" + token + "' is not an integer");
    }
  }
  return out;
}

// Edge files hold the vertex count followed by whitespace-separated pairs.
Graph read_edge_file(const std::string &path) {
  const auto values = read_integers(path);
  if (values.empty() || values[0] < 0)
    throw InputError("'" + path + "': expected the vertex count first");
  if ((values.size() - 1) % 2 != 0)
    throw InputError("'" + path + "': odd number of edge endpoints");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < values.size(); i += 2) {
    if (values[i] < 0 || values[i + 1] < 0)
      throw InputError("'" + path + "': negative vertex");
    edges.emplace_back(static_cast<Vertex>(values[i]),
                       static_cast<Vertex>(values[i + 1]));
  }
  return from_edge_list(static_cast<std::size_t>(values[0]), edges);
}

std::vector<int> read_function(const std::string &path) {
  std::vector<int> out;
  for (auto v : read_integers(path))
    out.push_back(static_cast<int>(v));
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string &text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(static_cast<std::size_t>(std::stoull(item)));
    } catch (const std::exception &) {
      throw InputError("'" + text + "' is not a comma-separated list of integers");
    }
  }
  return out;
}

std::vector<DegreeBounds> parse_grid(const std::string &text) {
  std::vector<DegreeBounds> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto pair = parse_size_list(item);
    if (pair.size() != 2)
      throw InputError("grid entries are 'a,b' separated by ';' (got '" + item + "')");
    grid.push_back({static_cast<int>(pair[0]), static_cast<int>(pair[1])});
  }
  return grid;
}

std::string braces(const VertexSet &s) {
  std::string out = "{";
  bool first = true;
  for (auto v : s.members()) {
    out += (first ? "" : ",") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

json comparison_json(Comparison c) {
  if (c == Comparison::inconclusive)
    return "inconclusive";
  return c == Comparison::holds;
}

void emit(std::ostream &out, const json &doc) { out << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
  std::string g6;
  std::string edges;
  int a = 0;
  int b = 0;
  std::string mode = "integer";
  std::string g_file;
  std::string f_file;
  std::size_t cap = 0;
  bool json = false;
};

int run_check(const CheckArgs &args, std::ostream &out) {
  if (args.g6.empty() == args.edges.empty())
    throw InputError("check: give exactly one of --g6 or --edges");
  const Graph g = args.g6.empty() ? read_edge_file(args.edges) : parse_graph6(args.g6);
  DeciderLimits limits;
  if (args.cap > 0)
    limits.pair_cap = limits.subset_cap = args.cap;

  json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = "check";
  doc["mode"] = args.mode;
  doc["graph6"] = to_graph6(g);
  doc["n"] = g.order();

  ConditionReport report;
  std::string functional;
  if (args.mode == "gf") {
    DegreeFunctions funcs;
    if (!args.g_file.empty() || !args.f_file.empty()) {
      if (args.g_file.empty() || args.f_file.empty())
        throw InputError("check --mode gf: give both --g and --f");
      funcs = {read_function(args.g_file), read_function(args.f_file)};
    } else {
      funcs = DegreeFunctions::constant(g.order(), args.a, args.b);
    }
    funcs.validate(g.order());
    report = has_all_gf_factors(g, funcs, limits);
    const auto single = has_gf_factor(g, funcs, limits);
    doc["single_factor"] = to_json(single);
    functional = "all-(g,f) functional over (D,S)";
  } else {
    const DegreeBounds bounds{args.a, args.b};
    doc["a"] = args.a;
    doc["b"] = args.b;
    const auto mode = parse_factor_mode(args.mode);
    if (mode == FactorMode::integer) {
      report = has_all_ab_factors(g, bounds, limits);
      functional = "delta(S,T)";
    } else {
      report = has_all_fractional_ab_factors(g, bounds, limits);
      functional = "theta(S)";
    }
  }
  doc["report"] = to_json(report);

  if (args.json) {
    emit(out, doc);
  } else {
    out << "graph6:     " << to_graph6(g) << '\n'
        << "mode:       " << args.mode << '\n'
        << "verdict:    " << (report.verdict ? "true" : "false") << '\n'
        << "functional: " << functional << '\n'
        << "min value:  " << report.min_value << " (threshold "
        << report.threshold << ")\n"
        << "witness S:  " << braces(report.witness_s) << '\n';
    if (report.witness_t)
      out << "witness T:  " << braces(*report.witness_t) << '\n';
    out << "examined:   " << report.pairs_examined << '\n';
  }
  return report.verdict ? kExitHolds : kExitFails;
}

// ---------------------------------------------------------------------------
// rho

struct RhoArgs {
  std::string g6;
  std::string hnb;
  double tol = kDefaultSpectralTol;
  bool json = false;
};

int run_rho(const RhoArgs &args, std::ostream &out) {
  if (args.g6.empty() == args.hnb.empty())
    throw InputError("rho: give exactly one of --g6 or --hnb");
  json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = "rho";
  std::size_t n = 0;
  double rho = 0.0;
  if (!args.hnb.empty()) {
    const auto nb = parse_size_list(args.hnb);
    if (nb.size() != 2)
      throw InputError("rho --hnb expects n,b");
    n = nb[0];
    rho = rho_hnb(nb[0], nb[1]);
    doc["b"] = nb[1];
    doc["method"] = std::string(to_string(SpectralMethod::quotient_3x3));
  } else {
    const auto g = parse_graph6(args.g6);
    n = g.order();
    const auto r = spectral_radius(g, args.tol);
    rho = r.rho;
    doc["graph6"] = to_graph6(g);
    doc["method"] = std::string(to_string(r.method));
    doc["residual"] = round_report_real(r.residual);
    doc["iterations"] = r.iterations;
  }
  const auto n_minus_2 = static_cast<long long>(n) - 2;
  const auto exceeds =
      strictly_less(static_cast<double>(n_minus_2), rho, args.tol);
  doc["n"] = n;
  doc["rho"] = round_report_real(rho);
  doc["n_minus_2"] = n_minus_2;
  doc["exceeds"] = comparison_json(exceeds);
  if (args.json) {
    emit(out, doc);
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", rho);
    out << "rho:     " << buf << '\n'
        << "n - 2:   " << n_minus_2 << '\n'
        << "exceeds: " << to_string(exceeds) << '\n';
  }
  return kExitHolds;
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
  std::string kind;
  std::size_t n = 0;
  int a = 1;
  int b = 0;
  std::size_t r = 0;
  bool json = false;
};

int run_construct(const ConstructArgs &args, std::ostream &out) {
  ExtremalGraph eg;
  if (args.kind == "hnb")
    eg = build_hnb(args.n, static_cast<std::size_t>(std::max(args.b, 0)));
  else if (args.kind == "g1")
    eg = build_g1(args.a, args.b, args.n);
  else if (args.kind == "g2")
    eg = build_g2(args.b, args.n);
  else if (args.kind == "k1join")
    eg = build_k1_join(args.n, args.r);
  else
    throw InputError("construct: unknown graph '" + args.kind +
                     "' (expected hnb, g1, g2 or k1join)");
  const auto code = to_graph6(eg.graph);
  if (args.json) {
    json parts = json::array();
    for (const auto &p : eg.parts)
      parts.push_back(p.size());
    emit(out, {{"schema", kReportSchema},
               {"command", "construct"},
               {"kind", args.kind},
               {"graph6", code},
               {"n", eg.graph.order()},
               {"edges", eg.graph.size()},
               {"part_sizes", parts}});
  } else {
    out << code << '\n';
  }
  return kExitHolds;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string check;
  int amax = 5;
  int bmax = 5;
  std::size_t nmax = 40;
  std::string input;
  std::string ns;
  std::string bs = "2,3,5";
  double tol = kDefaultSpectralTol;
  bool json = false;
};

struct VerifyOutcome {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string &what) {
    ++cases;
    if (!ok)
      failures.push_back(what);
  }
};

VerifyOutcome verify_g1g2(const VerifyArgs &args) {
  VerifyOutcome v;
  for (int b = 1; b <= args.bmax; ++b) {
    for (int a = 1; a <= std::min(b, args.amax); ++a) {
      const auto n = g1g2_order(a, b);
      const auto c = g1g2_check(a, b, n, args.tol);
      const auto tag = "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                       " n=" + std::to_string(n);
      v.expect(c.f_n_minus_2 > 0, tag + ": f(n-2) > 0");
      v.expect(c.f_n_minus_2 == c.f_n_minus_2_closed, tag + ": f(n-2) closed form");
      v.expect(c.f_n_minus_3 < 0 && c.f_n_minus_3 == c.f_n_minus_3_closed,
               tag + ": f(n-3) = -2(c+2b-4)^2 < 0");
      const double bound = static_cast<double>(n - 2) - 1e-6;
      v.expect(c.rho_g1 < bound, tag + ": rho(G1) < n-2");
      v.expect(c.rho_g2 < bound, tag + ": rho(G2) < n-2");
    }
  }
  return v;
}

VerifyOutcome verify_hnb_witness(const VerifyArgs &args) {
  VerifyOutcome v;
  for (std::size_t n = 4; n <= args.nmax; ++n) {
    for (int b = 3; static_cast<std::size_t>(b) < n; ++b) {
      const auto tag = "n=" + std::to_string(n) + " b=" + std::to_string(b);
      const auto ri = lemma24_witness(n, b, FactorMode::integer);
      v.expect(ri.min_value == -2 && !ri.verdict, tag + ": delta = -2");
      if (static_cast<std::size_t>(b) + 2 <= n) {
        const auto rf = lemma24_witness(n, b, FactorMode::fractional);
        v.expect(rf.min_value == -1 && !rf.verdict, tag + ": theta = -1");
      }
    }
  }
  return v;
}

VerifyOutcome verify_hong(const VerifyArgs &args) {
  if (args.input.empty())
    throw InputError("verify hong: --input FILE.g6 is required");
  VerifyOutcome v;
  for (const auto &g : read_catalog_file(args.input)) {
    if (!is_connected(g))
      continue;
    const double rho = spectral_radius(g, args.tol).rho;
    v.expect(rho <= hong_bound(g) + 1e-9, to_graph6(g) + ": rho <= sqrt(2m-n+1)");
  }
  return v;
}

VerifyOutcome verify_quotient(const VerifyArgs &args) {
  VerifyOutcome v;
  const auto ns = parse_size_list(args.ns.empty() ? "10,100,1000" : args.ns);
  for (auto n : ns) {
    for (auto b : parse_size_list(args.bs)) {
      const auto tag = "n=" + std::to_string(n) + " b=" + std::to_string(b);
      const auto h = build_hnb(n, b);
      const double quotient = leading_eigenvalue(quotient_matrix(h.graph, h.parts));
      const double dense = spectral_radius(h.graph, args.tol).rho;
      v.expect(std::abs(quotient - dense) <= 1e-8, tag + ": quotient = dense");
      const double nd = static_cast<double>(n);
      v.expect(nd - 2 < quotient && quotient < nd - 1, tag + ": n-2 < rho < n-1");
    }
  }
  return v;
}

VerifyOutcome verify_k1join(const VerifyArgs &args) {
  VerifyOutcome v;
  for (auto n : parse_size_list(args.ns.empty() ? "10,20,50,100" : args.ns)) {
    for (std::size_t r = 2; r + 3 <= n; ++r) {
      const double rho = spectral_radius(build_k1_join(n, r).graph, args.tol).rho;
      v.expect(rho < static_cast<double>(n) - 2 - 1e-6,
               "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                   ": rho < n-2");
    }
  }
  return v;
}

int run_verify(const VerifyArgs &args, std::ostream &out) {
  VerifyOutcome v;
  if (args.check == "lemma23")
    v = verify_g1g2(args);
  else if (args.check == "lemma24")
    v = verify_hnb_witness(args);
  else if (args.check == "hong")
    v = verify_hong(args);
  else if (args.check == "quotient")
    v = verify_quotient(args);
  else if (args.check == "k1join")
    v = verify_k1join(args);
  else
    throw InputError("verify: unknown check '" + args.check +
                     "' (expected lemma23, lemma24, hong, quotient or k1join)");
  const bool passed = v.failures.empty();
  if (args.json) {
    emit(out, {{"schema", kReportSchema},
               {"command", "verify"},
               {"check", args.check},
               {"cases", v.cases},
               {"failures", v.failures},
               {"passed", passed}});
  } else {
    for (const auto &f : v.failures)
      out << "FAIL " << f << '\n';
    out << args.check << ": " << v.cases - v.failures.size() << "/" << v.cases
        << " checks passed\n";
  }
  return passed ? kExitHolds : kExitFails;
}

// ---------------------------------------------------------------------------
// mine / suite

struct MineArgs {
  std::string input;
  int a = 0;
  int b = 0;
  std::string mode = "integer";
  bool lenient = false;
  bool timing = false;
  bool json = false;
};

int run_mine(const MineArgs &args, std::ostream &out) {
  std::ifstream in(args.input);
  if (!in)
    throw InputError("cannot open catalog file '" + args.input + "'");
  Graph6Reader reader(in, args.lenient);
  const auto report =
      mine_extremal(reader, {args.a, args.b}, parse_factor_mode(args.mode));
  if (args.json) {
    auto doc = to_json(report, args.timing);
    doc["skipped_records"] = reader.skipped();
    emit(out, doc);
  } else {
    out << "graphs examined: " << report.graphs_examined << '\n'
        << "failing:         " << report.failing_count << '\n';
    if (report.argmax_graph) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g", *report.max_rho_failing);
      out << "max rho failing: " << buf << " (" << *report.argmax_graph << ")\n";
    }
    if (report.rho_hnb_reference) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g", *report.rho_hnb_reference);
      out << "rho(H_{n,b}):    " << buf << '\n';
    }
    out << "H_{n,b} argmax:  " << (report.hnb_is_argmax ? "yes" : "no") << '\n';
    if (args.timing)
      out << "elapsed:         " << report.elapsed << " s\n";
  }
  return report.failing_count == 0 ? kExitHolds : kExitFails;
}

struct SuiteArgs {
  std::string input;
  std::size_t nmax = 7;
  std::string grid = "1,2;1,3;2,3";
  std::string mode = "integer";
  bool timing = false;
  bool json = false;
};

int run_suite(const SuiteArgs &args, std::ostream &out) {
  const auto catalog = read_catalog_file(args.input);
  SuiteOptions options;
  options.n_max = args.nmax;
  options.grid = parse_grid(args.grid);
  options.mode = parse_suite_mode(args.mode);
  const auto report = equivalence_suite(catalog, options);
  if (args.json) {
    emit(out, to_json(report, args.timing));
  } else {
    for (const auto &m : report.mismatches)
      out << "MISMATCH " << m.graph6 << " a=" << m.bounds.a << " b=" << m.bounds.b
          << " decider=" << m.decider << " oracle=" << m.oracle << '\n';
    out << report.suite << ": " << report.cases_run << " cases over "
        << report.graphs_run << " graphs, " << report.mismatches.size()
        << " mismatches\n";
    if (args.timing)
      out << "elapsed: " << report.elapsed << " s\n";
  }
  return report.passed() ? kExitHolds : kExitFails;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"Exact deciders and spectral checks for all (fractional) "
               "[a,b]-factors",
               "factorspec"};
  app.require_subcommand(1);

  CheckArgs check;
  auto *c = app.add_subcommand("check", "Decide all (fractional) [a,b]- or (g,f)-factors");
  c->add_option("--g6", check.g6, "Graph as a graph6 record");
  c->add_option("--edges", check.edges, "Edge-list file: n then vertex pairs");
  c->add_option("--a", check.a, "Lower degree bound");
  c->add_option("--b", check.b, "Upper degree bound");
  c->add_option("--mode", check.mode, "integer | fractional | gf")
      ->check(CLI::IsMember({"integer", "fractional", "gf"}));
  c->add_option("--g", check.g_file, "File with g(v) per vertex (gf mode)");
  c->add_option("--f", check.f_file, "File with f(v) per vertex (gf mode)");
  c->add_option("--cap", check.cap, "Override the exhaustive enumeration cap");
  c->add_flag("--json", check.json, "Emit a JSON report");

  RhoArgs rho;
  auto *r = app.add_subcommand("rho", "Spectral radius of a graph or of H_{n,b}");
  r->add_option("--g6", rho.g6, "Graph as a graph6 record");
  r->add_option("--hnb", rho.hnb, "n,b for H_{n,b}");
  r->add_option("--tol", rho.tol, "Residual tolerance");
  r->add_flag("--json", rho.json, "Emit a JSON report");

  ConstructArgs construct;
  auto *k = app.add_subcommand("construct", "Emit a named graph as graph6");
  k->add_option("kind", construct.kind, "hnb | g1 | g2 | k1join")->required();
  k->add_option("--n", construct.n, "Order")->required();
  k->add_option("--a", construct.a, "a (g1)");
  k->add_option("--b", construct.b, "b (hnb, g1, g2)");
  k->add_option("--r", construct.r, "Clique size r (k1join)");
  k->add_flag("--json", construct.json, "Emit a JSON document");

  VerifyArgs verify;
  auto *v = app.add_subcommand("verify", "Run a numerical verification grid");
  v->add_option("check", verify.check, "lemma23 | lemma24 | hong | quotient | k1join")
      ->required();
  v->add_option("--amax", verify.amax, "Largest a (lemma23)");
  v->add_option("--bmax", verify.bmax, "Largest b (lemma23)");
  v->add_option("--nmax", verify.nmax, "Largest n (lemma24)");
  v->add_option("--input", verify.input, "graph6 catalog (hong)");
  v->add_option("--n", verify.ns, "Comma-separated orders (quotient, k1join)");
  v->add_option("--b", verify.bs, "Comma-separated b values (quotient)");
  v->add_option("--tol", verify.tol, "Residual tolerance");
  v->add_flag("--json", verify.json, "Emit a JSON report");

  MineArgs mine;
  auto *m = app.add_subcommand("mine", "Largest spectral radius among failing graphs");
  m->add_option("--input", mine.input, "graph6 catalog")->required();
  m->add_option("--a", mine.a, "Lower degree bound")->required();
  m->add_option("--b", mine.b, "Upper degree bound")->required();
  m->add_option("--mode", mine.mode, "integer | fractional")
      ->check(CLI::IsMember({"integer", "fractional"}));
  m->add_flag("--lenient", mine.lenient, "Skip malformed records");
  m->add_flag("--timing", mine.timing, "Report elapsed time");
  m->add_flag("--json", mine.json, "Emit a JSON report");

  SuiteArgs suite;
  auto *s = app.add_subcommand("suite", "Decider vs. oracle equivalence suite");
  s->add_option("--input", suite.input, "graph6 catalog")->required();
  s->add_option("--nmax", suite.nmax, "Largest order to test");
  s->add_option("--grid", suite.grid, "Parameter pairs 'a,b;a,b;...'");
  s->add_option("--mode", suite.mode, "integer | fractional | gf | lu")
      ->check(CLI::IsMember({"integer", "fractional", "gf", "lu"}));
  s->add_flag("--timing", suite.timing, "Report elapsed time");
  s->add_flag("--json", suite.json, "Emit a JSON report");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kExitHolds;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitHolds;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (c->parsed())
      return run_check(check, out);
    if (r->parsed())
      return run_rho(rho, out);
    if (k->parsed())
      return run_construct(construct, out);
    if (v->parsed())
      return run_verify(verify, out);
    if (m->parsed())
      return run_mine(mine, out);
    if (s->parsed())
      return run_suite(suite, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

} // namespace factorspec
