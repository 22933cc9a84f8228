// Command-line front end: fixture loading, validation, Hilbert/relations
// computation, derivation chains, ql-datum handling, representation checks,
// and dimension bounds. Every run that reaches a verdict prints one JSON
// report on standard output:
//
//   {"command": ..., "inputs": ..., "results": ..., "timing": ..., "version": ...}
//
// Exit codes: 0 success/valid, 1 validation failure, 2 usage error (including
// malformed fixture files). Reports are emitted on 0 and 1 only.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nforge/builtins.hpp"
#include "nforge/deriv.hpp"
#include "nforge/io_json.hpp"
#include "nforge/lifting.hpp"
#include "nforge/modules.hpp"
#include "nforge/nichols.hpp"
#include "nforge/quadratic.hpp"

using namespace nforge;

namespace {

// Raised for inputs that parse but fail a semantic check severe enough that
// the requested computation cannot run (e.g. a rack file violating the rack
// axioms handed to `hilbert`). Mapped to exit 1 with the report attached.
struct ValidationFailure : std::runtime_error {
  Json report;
  ValidationFailure(std::string msg, Json rep)
      : std::runtime_error(std::move(msg)), report(std::move(rep)) {}
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

int emit(const std::string& command, Json inputs, Json results, double seconds,
         int code) {
  Json rep{{"command", command},
           {"inputs", std::move(inputs)},
           {"results", std::move(results)},
           {"timing", Json{{"seconds", seconds}}},
           {"version", kVersion}};
  std::cout << rep.dump(2) << "\n";
  return code;
}

// ---------------------------------------------------------------------------
// fixture resolution

struct FixtureArgs {
  std::string builtin, rack_file, cocycle_file;
};

void add_fixture_options(CLI::App* cmd, FixtureArgs& a, bool need_cocycle) {
  cmd->add_option("--builtin", a.builtin,
                  "built-in fixture name (see `rack --list`)");
  cmd->add_option("--rack", a.rack_file, "rack JSON file");
  if (need_cocycle)
    cmd->add_option("--cocycle", a.cocycle_file,
                    "cocycle JSON file (embeds its rack)");
}

Json fixture_inputs(const FixtureArgs& a) {
  Json j = Json::object();
  if (!a.builtin.empty()) j["builtin"] = a.builtin;
  if (!a.rack_file.empty()) j["rack"] = a.rack_file;
  if (!a.cocycle_file.empty()) j["cocycle"] = a.cocycle_file;
  return j;
}

// Loads rack and cocycle from --builtin or from files. The rack is checked
// against the rack axioms and the cocycle for nonzero values; failures raise
// ValidationFailure since no later computation is meaningful on them.
struct ResolvedFixture {
  Rack X;
  Cocycle q;
};

ResolvedFixture resolve_fixture(const FixtureArgs& a, bool need_cocycle) {
  if (!a.builtin.empty()) {
    if (!a.rack_file.empty() || !a.cocycle_file.empty())
      throw FixtureError("--builtin excludes --rack/--cocycle");
    BuiltinFixture f = builtin_fixture(a.builtin);  // throws on unknown name
    return {f.X.rack, f.q};
  }
  ResolvedFixture out;
  if (need_cocycle) {
    if (a.cocycle_file.empty())
      throw FixtureError("need --builtin or --cocycle");
    CocycleFile cf = cocycle_from_json(load_json_file(a.cocycle_file));
    if (!a.rack_file.empty()) {
      Rack X = rack_from_json(load_json_file(a.rack_file));
      if (X.table != cf.rack.table || X.labels != cf.rack.labels)
        throw FixtureError("cocycle file embeds a different rack than --rack");
      out.X = std::move(X);
    } else {
      out.X = std::move(cf.rack);
    }
    out.q = std::move(cf.q);
  } else {
    if (a.rack_file.empty()) throw FixtureError("need --builtin or --rack");
    out.X = rack_from_json(load_json_file(a.rack_file));
  }
  RackReport rr = check_rack_axioms(out.X);
  if (!rr.ok())
    throw ValidationFailure("rack axioms fail",
                            Json{{"rack", rack_report_to_json(rr)}});
  out.X.finalize();
  if (need_cocycle)
    for (const auto& row : out.q.q)
      for (const GaussRational& v : row)
        if (v.is_zero())
          throw ValidationFailure(
              "cocycle has zero values",
              Json{{"cocycle", Json{{"values_nonzero", false}}}});
  return out;
}

// ---------------------------------------------------------------------------
// token helpers

// Letter tokens for words and chains: exact rack labels, with single-letter
// shorthand for transposition racks (a=(12), b=(13), c=(14), d=(23), e=(24),
// f=(34), g=(15), h=(25), k=(35), m=(45)).
std::vector<std::string> resolve_letter_tokens(const Rack& X,
                                               const std::string& text) {
  static const std::vector<std::pair<char, const char*>> kAliases = {
      {'a', "(12)"}, {'b', "(13)"}, {'c', "(14)"}, {'d', "(23)"}, {'e', "(24)"},
      {'f', "(34)"}, {'g', "(15)"}, {'h', "(25)"}, {'k', "(35)"}, {'m', "(45)"}};
  auto has_label = [&](const std::string& s) {
    for (const std::string& l : X.labels)
      if (l == s) return true;
    return false;
  };
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (has_label(tok)) {
      out.push_back(tok);
      continue;
    }
    bool resolved = false;
    if (tok.size() == 1)
      for (const auto& [ch, label] : kAliases)
        if (tok[0] == ch && has_label(label)) {
          out.push_back(label);
          resolved = true;
          break;
        }
    if (!resolved) throw FixtureError("unknown letter token: " + tok);
  }
  if (out.empty()) throw FixtureError("empty letter sequence");
  return out;
}

std::pair<GaussRational, GaussRational> parse_params(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw FixtureError("--params must be two comma-separated scalars");
  try {
    return {gauss_from_string(s.substr(0, comma)),
            gauss_from_string(s.substr(comma + 1))};
  } catch (const std::invalid_argument& e) {
    throw FixtureError(std::string("bad --params: ") + e.what());
  }
}

GaussRational parse_scalar(const std::string& s) {
  try {
    return gauss_from_string(s);
  } catch (const std::invalid_argument& e) {
    throw FixtureError(std::string("bad scalar: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// shared computations

// Graded dimensions with the optional on-disk cache (NICHOLS_FORGE_CACHE).
GradedDims graded_dims_cached(const Rack& X, const Cocycle& q, int max_degree,
                              int threads, bool* cache_hit) {
  if (cache_hit) *cache_hit = false;
  const char* dir = std::getenv("NICHOLS_FORGE_CACHE");
  if (!dir || !*dir) return graded_dims(X, q, max_degree, threads);
  std::string key = gb_cache_key(X, q, max_degree);
  if (auto hit = gb_cache_load(dir, key)) {
    if (cache_hit) *cache_hit = true;
    return std::move(*hit);
  }
  GradedDims gd = graded_dims(X, q, max_degree, threads);
  gb_cache_store(dir, key, gd);
  return gd;
}

// Computations on ten-letter racks past modest degrees take hours to days;
// they are refused unless the caller opts in.
void gate_long_running(const Rack& X, int max_degree, bool long_running) {
  if (X.size >= 10 && max_degree > 14 && !long_running)
    throw CLI::ValidationError(
        "gate", "this computation is not desk-scale; pass --long-running");
}

struct FamilyArgs {
  std::string family;
  int n = 4;
  std::string params;  // "Lambda,Gamma" for two-parameter families
  std::string lambda;  // single parameter for the chi family
};

void add_family_options(CLI::App* cmd, FamilyArgs& a, bool with_n = true) {
  cmd->add_option("--family", a.family, "Qminus | Qchi | D")
      ->required()
      ->check(CLI::IsMember({"Qminus", "Qchi", "D"}));
  if (with_n)
    cmd->add_option("--n", a.n, "symmetric group degree (4 or 5)")
        ->check(CLI::IsMember({3, 4, 5}));
  cmd->add_option("--params", a.params, "two-parameter point \"Lambda,Gamma\"");
  cmd->add_option("--lambda", a.lambda, "single parameter (Qchi family)");
}

Json family_inputs(const FamilyArgs& a) {
  Json j{{"family", a.family}, {"n", a.n}};
  if (!a.params.empty()) j["params"] = a.params;
  if (!a.lambda.empty()) j["lambda"] = a.lambda;
  return j;
}

// Builds the requested ql-datum; formal parameters unless a point is given.
QlDatum build_family(const FamilyArgs& a) {
  if (a.family == "Qchi") {
    ParamScalar lam = a.lambda.empty() ? ParamScalar::lambda()
                                       : ParamScalar(parse_scalar(a.lambda));
    return family_Q_chi(a.n, lam);
  }
  ParamScalar L = ParamScalar::lambda(), G = ParamScalar::gamma();
  if (!a.params.empty()) {
    auto [l, g] = parse_params(a.params);
    L = ParamScalar(l);
    G = ParamScalar(g);
  }
  if (a.family == "D") return family_D(L, G);
  return family_Q_minus(a.n, L, G);
}

Json ql_report_to_json(const QlReport& rep) {
  return Json{{"classes_cover", rep.classes_cover},
              {"products_avoid_letters", rep.products_avoid_letters},
              {"normalized", rep.normalized},
              {"transport_consistent", rep.transport_consistent},
              {"character_orbits_consistent", rep.character_orbits_consistent},
              {"k_transitive_on_sizes", rep.k_transitive_on_sizes},
              {"ok", rep.ok()},
              {"failures", rep.failures}};
}

Json presentation_to_json(const Presentation& p) {
  const Rack& X = p.real.X.rack;
  Json rels = Json::array();
  for (const auto& rel : p.relations) {
    Json terms = Json::array();
    for (const auto& [eta, pair] : rel.terms)
      terms.push_back(Json::array(
          {to_string(eta), X.labels[pair.first], X.labels[pair.second]}));
    Json seq = Json::array();
    for (int t : rel.cls.seq) seq.push_back(X.labels[t]);
    auto [i2, i1] = canonical_pair(rel.cls);
    rels.push_back(Json{{"label",
                         "b[" + X.labels[i2] + "," + X.labels[i1] + "]"},
                        {"class", std::move(seq)},
                        {"terms", std::move(terms)},
                        {"lambda", param_to_json(rel.lambda)},
                        {"g_c", p.real.group[rel.g_c].cycle_string()}});
  }
  return Json{{"group_order", p.real.group.size()},
              {"relations", std::move(rels)}};
}

Json canon_results(const FamilyArgs& a) {
  if (a.family == "Qchi") {
    if (a.lambda.empty()) throw FixtureError("canon for Qchi needs --lambda");
    return Json{{"canonical", to_string(canonical_parameter(parse_scalar(a.lambda)))}};
  }
  if (a.params.empty()) throw FixtureError("canon needs --params");
  auto [l, g] = parse_params(a.params);
  auto [cl, cg] = canonical_parameter(l, g);
  return Json{{"canonical", Json::array({to_string(cl), to_string(cg)})}};
}

// ---------------------------------------------------------------------------
// subcommand bodies; each returns the process exit code

int run_rack(const FixtureArgs& fa, bool list_names) {
  Timer t;
  if (list_names) {
    Json names = Json::array();
    for (const std::string& n : builtin_names()) names.push_back(n);
    return emit("rack", Json::object(), Json{{"builtins", names}}, t.seconds(), 0);
  }
  Rack X;
  if (!fa.builtin.empty()) {
    X = builtin_fixture(fa.builtin).X.rack;
  } else {
    if (fa.rack_file.empty()) throw FixtureError("need --builtin or --rack");
    X = rack_from_json(load_json_file(fa.rack_file));
  }
  RackReport rep = check_rack_axioms(X);
  Json results{{"size", X.size}, {"axioms", rack_report_to_json(rep)}};
  if (rep.ok()) {
    X.finalize();
    results["faithful"] = is_faithful(X);
    results["indecomposable"] = is_indecomposable(X);
  }
  return emit("rack", fixture_inputs(fa), std::move(results), t.seconds(),
              rep.ok() ? 0 : 1);
}

int run_cocycle_check(const FixtureArgs& fa) {
  Timer t;
  ResolvedFixture f = resolve_fixture(fa, true);
  CocycleReport rep = check_cocycle(f.X, f.q);
  bool braid_ok = rep.ok() && check_braid_equation(f.X, f.q);
  Json results{{"cocycle", cocycle_report_to_json(rep)},
               {"braid_equation", braid_ok}};
  bool ok = rep.ok() && braid_ok;
  return emit("cocycle-check", fixture_inputs(fa), std::move(results),
              t.seconds(), ok ? 0 : 1);
}

int run_relations(const FixtureArgs& fa) {
  Timer t;
  ResolvedFixture f = resolve_fixture(fa, true);
  Json results{{"relations", relations_to_json(f.X, quadratic_basis(f.X, f.q))}};
  return emit("relations", fixture_inputs(fa), std::move(results), t.seconds(), 0);
}

int run_hilbert(const FixtureArgs& fa, int max_degree, int threads,
                bool long_running) {
  Timer t;
  ResolvedFixture f = resolve_fixture(fa, true);
  gate_long_running(f.X, max_degree, long_running);
  bool cache_hit = false;
  GradedDims gd = graded_dims_cached(f.X, f.q, max_degree, threads, &cache_hit);
  Json inputs = fixture_inputs(fa);
  inputs["max_degree"] = max_degree;
  inputs["threads"] = threads;
  inputs["cache_hit"] = cache_hit;
  return emit("hilbert", std::move(inputs),
              hilbert_to_json(gd.dims, gd.gb.elems.size()), t.seconds(), 0);
}

int run_derive(const FixtureArgs& fa, const std::string& word_text,
               const std::string& chain_text, unsigned long long term_cap,
               bool long_running) {
  Timer t;
  ResolvedFixture f = resolve_fixture(fa, true);
  Word w = word_from_labels(f.X, resolve_letter_tokens(f.X, word_text));
  std::vector<int> ops =
      letters_from_labels(f.X, resolve_letter_tokens(f.X, chain_text));
  if (ops.size() != w.size())
    throw FixtureError("chain length must match word length");
  if (f.X.size >= 10 && w.size() > 20 && !long_running)
    throw CLI::ValidationError(
        "gate", "this evaluation is not desk-scale; pass --long-running");
  Json inputs = fixture_inputs(fa);
  inputs["word"] = word_text;
  inputs["chain"] = chain_text;
  inputs["term_cap"] = term_cap;
  NCPoly start;
  poly_add_term(start, w, GaussRational(1));
  try {
    NCPoly val = derivation_chain(f.X, f.q, ops, std::move(start), term_cap);
    GaussRational s = constant_term(val);
    Json results{{"scalar", to_string(s)}, {"nonzero", !s.is_zero()}};
    return emit("derive", std::move(inputs), std::move(results), t.seconds(),
                s.is_zero() ? 1 : 0);
  } catch (const TermCapExceeded& e) {
    Json results{{"error", e.what()}, {"nonzero", false}, {"inconclusive", true}};
    return emit("derive", std::move(inputs), std::move(results), t.seconds(), 1);
  }
}

int run_ql(const std::string& mode, const FamilyArgs& fa) {
  Timer t;
  if (mode == "canon")
    return emit("ql canon", family_inputs(fa), canon_results(fa), t.seconds(), 0);
  QlDatum d = build_family(fa);
  if (mode == "validate") {
    QlReport rep = validate_ql_datum(d);
    return emit("ql validate", family_inputs(fa), ql_report_to_json(rep),
                t.seconds(), rep.ok() ? 0 : 1);
  }
  // present
  try {
    Presentation p = presentation(d);
    return emit("ql present", family_inputs(fa), presentation_to_json(p),
                t.seconds(), 0);
  } catch (const std::invalid_argument& e) {
    return emit("ql present", family_inputs(fa), Json{{"error", e.what()}},
                t.seconds(), 1);
  }
}

int run_verify_rep(const FamilyArgs& fa) {
  Timer t;
  RepModule m;
  Presentation pres;
  std::vector<std::pair<std::string, std::pair<GaussRational, GaussRational>>>
      points;
  if (fa.family == "Qchi") {
    GaussRational lam =
        fa.lambda.empty() ? GaussRational(-1) : parse_scalar(fa.lambda);
    m = build_U(fa.n, lam);
    pres = presentation(family_Q_chi(fa.n, ParamScalar(lam)));
    points = {{"lambda=" + to_string(lam), {GaussRational(0), GaussRational(0)}}};
  } else {
    m = fa.family == "D" ? build_V() : build_W(fa.n);
    pres = presentation(fa.family == "D"
                            ? family_D(ParamScalar::lambda(), ParamScalar::gamma())
                            : family_Q_minus(fa.n, ParamScalar::lambda(),
                                             ParamScalar::gamma()));
    if (fa.params.empty()) {
      points = {{"1,0", {GaussRational(1), GaussRational(0)}},
                {"0,1", {GaussRational(0), GaussRational(1)}},
                {"1,1", {GaussRational(1), GaussRational(1)}}};
    } else {
      auto [l, g] = parse_params(fa.params);
      points = {{fa.params, {l, g}}};
    }
  }
  VerifyReport vr = verify_presentation(m, pres);
  LiftingConditions lc = check_lifting_conditions(m);
  Json irr = Json::array();
  for (const auto& [label, pt] : points)
    if (is_irreducible(m, pt.first, pt.second)) irr.push_back(label);
  Json results{{"presentation_ok", vr.ok()},
               {"conditions", Json{{"i", lc.group_faithful},
                                   {"ii", lc.generator_outside_span},
                                   {"iii", lc.letters_separated}}},
               {"irreducible_at", std::move(irr)},
               {"dim", m.dim}};
  if (!vr.ok()) results["presentation_failures"] = vr.failures;
  bool ok = vr.ok() && lc.ok();
  return emit("verify-rep", family_inputs(fa), std::move(results), t.seconds(),
              ok ? 0 : 1);
}

int run_bound(const FixtureArgs& fa, int max_degree, long group_order,
              int threads, bool long_running) {
  Timer t;
  ResolvedFixture f = resolve_fixture(fa, true);
  gate_long_running(f.X, max_degree, long_running);
  bool cache_hit = false;
  GradedDims gd = graded_dims_cached(f.X, f.q, max_degree, threads, &cache_hit);
  DimensionBound b = dimension_bound(gd.dims, mpz_class(group_order));
  Json inputs = fixture_inputs(fa);
  inputs["max_degree"] = max_degree;
  inputs["group_order"] = group_order;
  inputs["cache_hit"] = cache_hit;
  Json results{{"total", b.total.get_str()},
               {"bound", b.bound.get_str()},
               {"top_degree", b.top_degree},
               {"terminated", b.terminated}};
  return emit("bound", std::move(inputs), std::move(results), t.seconds(), 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations for rack-cocycle quadratic algebras"};
  app.require_subcommand(1);

  FixtureArgs rack_fa;
  bool rack_list = false;
  CLI::App* rack_cmd = app.add_subcommand("rack", "validate a rack");
  add_fixture_options(rack_cmd, rack_fa, false);
  rack_cmd->add_flag("--list", rack_list, "list built-in fixture names");

  FixtureArgs cc_fa;
  CLI::App* cc_cmd =
      app.add_subcommand("cocycle-check", "validate a cocycle and its braiding");
  add_fixture_options(cc_cmd, cc_fa, true);

  FixtureArgs rel_fa;
  CLI::App* rel_cmd =
      app.add_subcommand("relations", "emit the quadratic relation list");
  add_fixture_options(rel_cmd, rel_fa, true);

  FixtureArgs hil_fa;
  int hil_degree = 13, hil_threads = 1;
  bool hil_long = false;
  CLI::App* hil_cmd =
      app.add_subcommand("hilbert", "graded dimensions of the quadratic quotient");
  add_fixture_options(hil_cmd, hil_fa, true);
  hil_cmd->add_option("--max-degree", hil_degree, "degree ceiling")
      ->check(CLI::PositiveNumber);
  hil_cmd->add_option("--threads", hil_threads, "completion threads")
      ->check(CLI::PositiveNumber);
  hil_cmd->add_flag("--long-running", hil_long, "allow non-desk-scale runs");

  FixtureArgs der_fa;
  std::string der_word, der_chain;
  unsigned long long der_cap = 10000000ULL;
  bool der_long = false;
  CLI::App* der_cmd =
      app.add_subcommand("derive", "evaluate a derivation chain on a word");
  add_fixture_options(der_cmd, der_fa, true);
  der_cmd->add_option("--word", der_word, "space-separated letters")->required();
  der_cmd->add_option("--chain", der_chain, "outermost-first derivation letters")
      ->required();
  der_cmd->add_option("--term-cap", der_cap, "abort past this many terms");
  der_cmd->add_flag("--long-running", der_long, "allow non-desk-scale runs");

  CLI::App* ql_cmd = app.add_subcommand("ql", "ql-datum handling");
  ql_cmd->require_subcommand(1);
  FamilyArgs ql_fa[3];
  CLI::App* ql_modes[3] = {
      ql_cmd->add_subcommand("validate", "check the datum conditions"),
      ql_cmd->add_subcommand("present", "emit the lifting presentation"),
      ql_cmd->add_subcommand("canon", "canonical parameter representative")};
  for (int k = 0; k < 3; ++k) add_family_options(ql_modes[k], ql_fa[k]);

  FamilyArgs vr_fa;
  CLI::App* vr_cmd = app.add_subcommand(
      "verify-rep", "verify a module against its family presentation");
  add_family_options(vr_cmd, vr_fa);

  FixtureArgs bnd_fa;
  int bnd_degree = 13, bnd_threads = 1;
  long bnd_order = 0;
  bool bnd_long = false;
  CLI::App* bnd_cmd =
      app.add_subcommand("bound", "dimension bound from graded dims and group order");
  add_fixture_options(bnd_cmd, bnd_fa, true);
  bnd_cmd->add_option("--max-degree", bnd_degree, "degree ceiling")
      ->check(CLI::PositiveNumber);
  bnd_cmd->add_option("--group-order", bnd_order, "order of the realizing group")
      ->required()
      ->check(CLI::PositiveNumber);
  bnd_cmd->add_option("--threads", bnd_threads, "completion threads")
      ->check(CLI::PositiveNumber);
  bnd_cmd->add_flag("--long-running", bnd_long, "allow non-desk-scale runs");

  FamilyArgs canon_fa;
  CLI::App* canon_cmd = app.add_subcommand(
      "canon", "canonical parameter representative (alias of `ql canon`)");
  add_family_options(canon_cmd, canon_fa);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (rack_cmd->parsed()) return run_rack(rack_fa, rack_list);
    if (cc_cmd->parsed()) return run_cocycle_check(cc_fa);
    if (rel_cmd->parsed()) return run_relations(rel_fa);
    if (hil_cmd->parsed())
      return run_hilbert(hil_fa, hil_degree, hil_threads, hil_long);
    if (der_cmd->parsed())
      return run_derive(der_fa, der_word, der_chain, der_cap, der_long);
    if (ql_cmd->parsed()) {
      static const char* names[3] = {"validate", "present", "canon"};
      for (int k = 0; k < 3; ++k)
        if (ql_modes[k]->parsed()) return run_ql(names[k], ql_fa[k]);
    }
    if (vr_cmd->parsed()) return run_verify_rep(vr_fa);
    if (bnd_cmd->parsed())
      return run_bound(bnd_fa, bnd_degree, bnd_order, bnd_threads, bnd_long);
    if (canon_cmd->parsed())
      return emit("canon", family_inputs(canon_fa), canon_results(canon_fa), 0.0, 0);
  } catch (const ValidationFailure& e) {
    Json results = e.report;
    results["error"] = e.what();
    return emit(app.get_subcommands().front()->get_name(), Json::object(),
                std::move(results), 0.0, 1);
  } catch (const FixtureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
