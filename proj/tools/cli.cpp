#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qgr/braiding.hpp"
#include "qgr/cat_o.hpp"
#include "qgr/checks.hpp"
#include "qgr/double.hpp"
#include "qgr/error.hpp"
#include "qgr/morphisms.hpp"
#include "qgr/serialize.hpp"

namespace qgr {

namespace {

struct Options {
  int n = 2;
  std::string kind = "gl";
  int depth = 3;
  std::optional<int> budget;
  unsigned long long seed = 1;
  std::optional<std::string> u0, v0;
  std::string out;
  std::optional<int> max_height;
  std::optional<int> random;
  int length = 3;
  std::string zeta, lambda, mu, nu;
  std::string which = "sl2";
  int bound = 3;
};

std::vector<int> parse_ints(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int x = 0;
    try {
      x = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw Error(flag + " expects comma-separated integers, got '" + text + "'");
    out.push_back(x);
  }
  if (out.empty()) throw Error(flag + " is empty");
  return out;
}

mpq_class parse_rational(const std::string& text, const std::string& flag) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) throw Error(flag + " expects a rational number, got '" + text + "'");
  q.canonicalize();
  return q;
}

Params params_of(const Options& o) {
  if (o.u0.has_value() != o.v0.has_value()) throw Error("--u0 and --v0 go together");
  if (!o.u0) return Params::generic();
  return Params::at(parse_rational(*o.u0, "--u0"), parse_rational(*o.v0, "--v0"));
}

Weight weight_of(const Options& o, const std::string& text, const std::string& flag) {
  if (text.empty()) throw Error(flag + " is required");
  Weight w{parse_ints(text, flag)};
  if (static_cast<int>(w.eps.size()) != o.n) throw Error(flag + " needs " + std::to_string(o.n) + " coordinates");
  return w;
}

int budget_of(const Options& o) {
  const int b = o.budget.value_or(o.depth - 2);
  if (b < 0) throw Error("budget must be nonnegative (depth at least 2)");
  if (b > o.depth - 2) throw Error("budget must be at most depth - 2");
  return b;
}

void append(Report& into, const Report& from) {
  into.entries.insert(into.entries.end(), from.entries.begin(), from.entries.end());
}

/// Everything a run needs: the algebra, its pairing, and modules built on
/// demand.
struct Session {
  explicit Session(const Options& o) : alg(o.n, parse_kind(o.kind), params_of(o)), ctx(alg), th(ctx) {}

  const ModuleActions& module(const Weight& lambda, int depth) {
    for (const auto& [m, a] : modules)
      if (m->highest_weight().eps == lambda.eps && m->depth() == depth) return *a;
    auto m = std::make_unique<WeightModule>(ctx, lambda, depth);
    auto a = std::make_unique<ModuleActions>(*m);
    modules.emplace_back(std::move(m), std::move(a));
    return *modules.back().second;
  }

  Algebra alg;
  PairingContext ctx;
  ThetaOperator th;
  std::vector<std::pair<std::unique_ptr<WeightModule>, std::unique_ptr<ModuleActions>>> modules;
};

std::vector<const ModuleActions*> three_modules(Session& s, const Options& o) {
  return {&s.module(weight_of(o, o.lambda, "--lambda"), o.depth), &s.module(weight_of(o, o.mu, "--mu"), o.depth),
          &s.module(weight_of(o, o.nu, "--nu"), o.depth)};
}

ReportDocument run_command(const std::string& command, const Options& o) {
  if (o.n < 2) throw Error("n must be at least 2");
  if (o.depth < 1) throw Error("depth must be at least 1");
  ReportDocument doc;
  Report& rep = doc.report;
  if (command == "iso-check") {
    if (o.which == "sl2") {
      rep = sl2_iso_check(o.random.value_or(5), o.seed);
    } else if (o.which == "chm") {
      rep = chm_relation_transport(o.n);
    } else {
      throw Error("--which must be sl2 or chm");
    }
    return doc;
  }
  Session s(o);
  if (command == "relations") {
    rep = relations_check(s.ctx, o.max_height.value_or(4));
  } else if (command == "hopf-axioms") {
    rep = hopf_axioms_check(s.alg, o.random.value_or(100), o.seed, o.length);
  } else if (command == "pairing-table") {
    const int h = o.max_height.value_or(3);
    rep = pairing_routes_check(s.ctx, h);
    doc.artifacts["table"] = to_json(pairing_table(s.ctx, h));
  } else if (command == "dual-basis") {
    if (o.zeta.empty()) throw Error("--zeta is required");
    const Content zeta = parse_ints(o.zeta, "--zeta");
    rep = dual_basis_check(s.ctx, zeta);
    doc.artifacts["dual_pair"] = to_json(s.ctx.dual_bases(zeta));
    doc.artifacts["graded_basis"] = to_json(*s.ctx.graded_basis(zeta));
  } else if (command == "verify-double") {
    rep = verify_double_iso(s.ctx, o.random.value_or(0), o.seed);
  } else if (command == "verma") {
    const ModuleActions& m = s.module(weight_of(o, o.lambda, "--lambda"), o.depth);
    rep = module_relation_audit(m.module());
    doc.artifacts["module"] = to_json(m.module());
  } else if (command == "rmatrix") {
    const int b = budget_of(o);
    const ModuleActions& mp = s.module(weight_of(o, o.lambda, "--lambda"), o.depth);
    const ModuleActions& m = s.module(weight_of(o, o.mu, "--mu"), o.depth);
    rep = intertwining_check(s.th, mp, m, b);
    const BraidMap r = build_R(s.th, mp, m, b);
    append(rep, unitriangularity_check(r));
    doc.artifacts["R"] = to_json(r);
  } else if (command == "qybe") {
    rep = qybe_check(s.th, three_modules(s, o), budget_of(o));
  } else if (command == "hexagon") {
    rep = hexagon_check(s.th, three_modules(s, o), budget_of(o));
  } else if (command == "casimir") {
    rep = casimir_check(s.th, s.module(weight_of(o, o.lambda, "--lambda"), o.depth), budget_of(o));
  } else if (command == "prop35") {
    if (o.bound < 0) throw Error("--bound must be nonnegative");
    rep = character_injectivity_check(s.alg, o.bound);
  } else {
    throw Error("unknown command " + command);
  }
  return doc;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "rank parameter n (algebra of n x n type)");
  sub->add_option("--kind", o.kind, "gl or sl")->check(CLI::IsMember({"gl", "sl"}));
  sub->add_option("--depth", o.depth, "truncation depth of the modules");
  sub->add_option("--budget", o.budget, "depth budget of the checked vectors (default depth - 2)");
  sub->add_option("--seed", o.seed, "seed for randomized checks");
  sub->add_option("--u0", o.u0, "specialize u (r = u^2) to this rational");
  sub->add_option("--v0", o.v0, "specialize v (s = v^2) to this rational");
  sub->add_option("--out", o.out, "write the JSON report to this file");
  sub->add_option("--max-height", o.max_height, "largest height checked");
  sub->add_option("--random", o.random, "number of random samples");
}

bool has_key(const Report& rep, const std::string& key) {
  for (const auto& [k, v] : rep.config)
    if (k == key) return true;
  return false;
}

/// The report carries the subcommand name and enough of the configuration
/// to rerun it.
void complete_config(Report& rep, const std::string& command, const Options& o) {
  rep.command = command;
  const bool algebra = !(command == "iso-check" && o.which == "sl2");
  if (algebra && !has_key(rep, "n")) rep.config.emplace_back("n", std::to_string(o.n));
  if (algebra && command != "iso-check" && !has_key(rep, "kind")) rep.config.emplace_back("kind", o.kind);
  if (algebra && command != "iso-check" && !has_key(rep, "params")) rep.config.emplace_back("params", params_of(o).describe());
  const bool seeded = command == "hopf-axioms" || command == "verify-double" || (command == "iso-check" && o.which == "sl2");
  if (seeded && !has_key(rep, "seed")) rep.config.emplace_back("seed", std::to_string(o.seed));
  if (command == "iso-check") rep.config.emplace_back("which", o.which);
}

void summarize(const Report& rep, std::ostream& os) {
  os << rep.command << ": " << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.entries.size() << " checks, "
     << rep.residual_count() << " failing)\n";
  for (const auto& e : rep.entries)
    if (!e.pass) os << "  FAIL " << e.label << ": " << e.residual.substr(0, 300) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for two-parameter quantum groups"};
  app.name(args.empty() ? "qgr" : args.front());
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"relations", "defining relations; Serre residuals pair to zero"},
      {"hopf-axioms", "coassociativity, counit and antipode"},
      {"pairing-table", "pairing of equal-content words by all four recursions"},
      {"dual-basis", "dual bases of U^+ and U^- in one degree"},
      {"verify-double", "the double of the Borel parts against the algebra"},
      {"verma", "truncated Verma module and its relation audit"},
      {"rmatrix", "R-matrix on two truncated Vermas and its intertwining property"},
      {"qybe", "quantum Yang-Baxter equation on three truncated Vermas"},
      {"hexagon", "hexagon identities on three truncated Vermas"},
      {"casimir", "Casimir operator on a truncated Verma"},
      {"iso-check", "rank-one isomorphism or the multiparameter map"},
      {"prop35", "injectivity of weight characters on the root lattice"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    if (name == "hopf-axioms") sub->add_option("--length", o.length, "maximal word length of random elements");
    if (name == "dual-basis") sub->add_option("--zeta", o.zeta, "degree as comma-separated root coordinates")->required();
    if (name == "verma" || name == "rmatrix" || name == "qybe" || name == "hexagon" || name == "casimir")
      sub->add_option("--lambda", o.lambda, "highest weight, comma-separated eps-coordinates")->required();
    if (name == "rmatrix" || name == "qybe" || name == "hexagon")
      sub->add_option("--mu", o.mu, "second highest weight")->required();
    if (name == "qybe" || name == "hexagon") sub->add_option("--nu", o.nu, "third highest weight")->required();
    if (name == "iso-check") sub->add_option("--which", o.which, "sl2 or chm")->check(CLI::IsMember({"sl2", "chm"}));
    if (name == "prop35") sub->add_option("--bound", o.bound, "coordinate bound");
  }

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (const char* t = std::getenv("QGR_THREADS")) {
    char* end = nullptr;
    const long k = std::strtol(t, &end, 10);
    if (end == t || *end != '\0' || k < 1) {
      err << "error: QGR_THREADS must be a positive integer\n";
      return 2;
    }
  }
  const std::string command = app.get_subcommands().front()->get_name();
  ReportDocument doc;
  try {
    doc = run_command(command, o);
    complete_config(doc.report, command, o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const std::string text = dump_json(to_json(doc));
  if (o.out.empty()) {
    out << text;
    summarize(doc.report, err);
  } else {
    std::ofstream file(o.out, std::ios::binary);
    file << text;
    if (!file) {
      err << "error: cannot write " << o.out << "\n";
      return 2;
    }
    summarize(doc.report, out);
  }
  return doc.report.pass() ? 0 : 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  return run_cli(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace qgr
