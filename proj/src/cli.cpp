#include "crepant/cli.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "CLI11.hpp"
#include "crepant/cech.hpp"
#include "crepant/geometry.hpp"
#include "crepant/jacobi.hpp"
#include "crepant/kadeishvili.hpp"
#include "crepant/necklace.hpp"
#include "crepant/resolution.hpp"
#include "json.hpp"

namespace crepant::cli {

using nlohmann::json;

namespace {

// Raised for bad input that is not a config-file syntax problem.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json class_json(const CohomologyClass& c) {
  static const char* kLetters[] = {"1", "xy", "XY", "s"};
  json out = json::object();
  if (c.degree < 0 || c.degree > 3) return out;
  for (std::size_t i = 0; i < c.coords.size(); ++i)
    out[std::string(1, kLetters[c.degree][i])] = to_string(c.coords[i]);
  return out;
}

json lambdas_json(const LambdaTable& t) {
  json arr = json::array();
  for (const auto& [key, v] : t.entries()) arr.push_back({{"j", key.first}, {"k", key.second}, {"value", to_string(v)}});
  return arr;
}

json report_json(const TruncatedAlgebraReport& r) {
  return {{"truncation_degree", r.truncation_degree},
          {"per_degree_dims", r.per_degree_dims},
          {"cumulative_dim", r.cumulative_dim},
          {"stabilized", r.stabilized}};
}

std::string join_dims(const std::vector<long>& v) {
  std::string s;
  for (long d : v) s += (s.empty() ? "" : " ") + std::to_string(d);
  return s;
}

const char* choice_name(TransferStep::Choice c) {
  switch (c) {
    case TransferStep::Choice::ClosedFormula: return "closed_form";
    case TransferStep::Choice::Decomposition: return "decomposition";
    case TransferStep::Choice::ZeroConvention: return "zero";
  }
  return "?";
}

void require_setup(const LambdaTable& lambdas) {
  ValidationReport rep = validate(lambdas, true);
  if (!rep.ok()) throw SetupError(rep.summary());
}


void print_checks(std::ostream& out, const std::vector<Check>& checks, bool as_json, json extra = json::object()) {
  long failed = std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.ok; });
  if (as_json) {
    json arr = json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    extra["checks"] = arr;
    extra["total"] = checks.size();
    extra["failed"] = failed;
    out << extra.dump(2) << "\n";
    return;
  }
  for (const auto& c : checks) {
    out << (c.ok ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << checks.size() << " checks, " << failed << " failed\n";
}

bool all_ok(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
}

}  // namespace

std::vector<Check> golden_checks() {
  std::vector<Check> out;
  auto add = [&](std::string name, bool ok, std::string detail = "") {
    out.push_back({std::move(name), ok, std::move(detail)});
  };

  FreePoly n42 = necklace_poly(4, 2);
  add("necklace N(4,2)", to_text(n42) == "x^4*y^2 + x^3*y*x*y + 1/2*x^2*y*x^2*y", to_text(n42));
  CommPoly ab = abelianize(n42);
  add("abelianised N(4,2)", ab == CommPoly::monomial(4, 2, frac(5, 2)), to_text(ab));
  add("trace expansion (1,1)", to_text(trace_expansion(1, 1)) == "2*x*y", to_text(trace_expansion(1, 1)));
  add("trace expansion (4,2)", trace_expansion(4, 2) == necklace_poly(4, 2) * Rational(6), to_text(trace_expansion(4, 2)));

  LambdaTable flop{{{3, 0}, Rational(3)}};
  add("potential of l30=3", to_text(potential(flop)) == "x^3", to_text(potential(flop)));
  GeometryInvariants inv = invariants(flop);
  add("classify l30=3", classify_normal_bundle(flop) == NormalBundle::Minus3Plus1 && inv.t == 3 && inv.r == 0 && inv.s == 3,
      "t=" + std::to_string(inv.t) + " r=" + std::to_string(inv.r) + " s=" + std::to_string(inv.s));
  add("classify l11=1", classify_normal_bundle(LambdaTable{{{1, 1}, Rational(1)}}) == NormalBundle::Minus1Minus1);
  add("classify l20=1", classify_normal_bundle(LambdaTable{{{2, 0}, Rational(1)}}) == NormalBundle::Minus2Zero);

  long zero_dim = nc_quotient_dims(LambdaTable{}, 4).cumulative_dim;
  add("jacobi dim, zero table, d=4", zero_dim == 31, std::to_string(zero_dim));
  long flop_dim = nc_quotient_dims(flop, 4).cumulative_dim;
  add("jacobi dim, l30=3, d=4", flop_dim == 19, std::to_string(flop_dim));
  return out;
}

std::vector<Check> table_checks(const LambdaTable& lambdas, const Limits& limits) {
  std::vector<Check> out;
  ValidationReport rep = validate(lambdas, true);
  out.push_back({"setup (-3,1)", rep.ok(), rep.summary()});
  if (!rep.ok()) return out;

  for (const auto& c : check_overlap_identities(lambdas)) out.push_back({"overlap: " + c.name, c.ok, c.detail});

  CechAlgebra alg(lambdas);
  for (const auto& c : check_resolution(alg.model(), alg.resolution()))
    out.push_back({"resolution: " + c.name, c.ok, c.detail});
  auto mutations = run_mutation_corpus(alg.model(), alg.resolution());
  long caught = std::count_if(mutations.begin(), mutations.end(), [](const MutationOutcome& m) { return m.detected(); });
  out.push_back({"resolution: mutation corpus detected", caught == static_cast<long>(mutations.size()),
                 std::to_string(caught) + "/" + std::to_string(mutations.size())});

  for (const auto& r : verify_generators(alg, limits.max_index))
    out.push_back({"dg: " + r.name, r.ok(),
                   std::to_string(r.instances) + " instances" + (r.ok() ? "" : "; " + r.first_failure)});

  AInfinityTable table = minimal_model(alg, limits.max_arity);
  out.push_back({"ainfty: closed formula agreement", table.closed_form_failed == 0 && table.closed_form_checked > 0,
                 std::to_string(table.closed_form_checked) + " tuples, " + std::to_string(table.closed_form_failed) +
                     " disagree"});
  StasheffReport st = check_stasheff(table, limits.max_arity);
  out.push_back({"ainfty: Stasheff identities", st.ok(),
                 std::to_string(st.identities) + " identities" +
                     (st.ok() ? "" : "; first: " + st.first_failures.front())});

  try {
    Relations rel = relations(lambdas);
    out.push_back({"jacobi: relations cross-check", true, ""});
    TruncatedAlgebraReport nc = nc_quotient_dims(lambdas, std::min(limits.truncate, 6));
    long sum = 0;
    for (long d : nc.per_degree_dims) sum += d;
    bool ok = sum == nc.cumulative_dim && nc.per_degree_dims.size() >= 2 && nc.per_degree_dims[0] == 1 &&
              nc.per_degree_dims[1] == 2;
    out.push_back({"jacobi: truncated dims well formed", ok, join_dims(nc.per_degree_dims)});
  } catch (const std::logic_error& e) {
    out.push_back({"jacobi: relations cross-check", false, e.what()});
  }
  return out;
}

namespace {

struct Common {
  std::string config_path;
  bool as_json = false;
};

LambdaTable load_lambdas(const Common& c, Config* cfg_out = nullptr) {
  if (c.config_path.empty()) throw UsageError("--config is required");
  Config cfg = load_config(c.config_path);
  if (cfg_out) *cfg_out = cfg;
  return cfg.lambdas;
}

int cmd_classify(const Common& c, std::ostream& out) {
  LambdaTable l = load_lambdas(c);
  NormalBundle nb = classify_normal_bundle(l);
  json j = {{"lambdas", lambdas_json(l)}, {"normal_bundle", to_string(nb)}};
  std::optional<GeometryInvariants> inv;
  if (nb == NormalBundle::Minus3Plus1 && validate(l, true).ok()) inv = invariants(l);
  if (inv) j["invariants"] = {{"t", inv->t}, {"r", inv->r}, {"s", inv->s}};
  if (c.as_json) {
    out << j.dump(2) << "\n";
  } else {
    out << "normal bundle: " << to_string(nb) << "\n";
    if (inv) out << "(t,r,s) = (" << inv->t << "," << inv->r << "," << inv->s << ")\n";
  }
  return kOk;
}

int cmd_necklace(int j, int k, bool abelian, bool orbits, int cap, bool as_json, std::ostream& out) {
  if (j < 0 || k < 0 || j + k == 0) throw UsageError("necklace needs j, k >= 0 with j + k >= 1");
  if (j + k > cap) throw UsageError("j + k = " + std::to_string(j + k) + " exceeds the cap " + std::to_string(cap));
  FreePoly p = necklace_poly(j, k);
  json doc = {{"j", j}, {"k", k}, {"necklace", to_json(p)}, {"text", to_text(p)}};
  if (abelian) doc["abelian"] = {{"terms", to_json(abelianize(p))}, {"text", to_text(abelianize(p))}};
  if (orbits) {
    json arr = json::array();
    for (const auto& o : enumerate_orbits(j, k).orbits) arr.push_back({{"representative", o.representative}, {"size", o.size}});
    doc["orbits"] = arr;
  }
  if (as_json) {
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << to_text(p) << "\n";
  if (abelian) out << "abelian: " << to_text(abelianize(p)) << "\n";
  if (orbits)
    for (const auto& o : enumerate_orbits(j, k).orbits) out << "orbit " << o.representative << "  size " << o.size << "\n";
  return kOk;
}

int cmd_potential(const Common& c, bool abelian, std::ostream& out) {
  LambdaTable l = load_lambdas(c);
  FreePoly w = potential(l);
  Relations rel = relations(l);
  json doc = {{"potential", to_json(w)}, {"text", to_text(w)}, {"dx", to_json(rel.dx)}, {"dy", to_json(rel.dy)}};
  if (abelian) doc["abelian"] = {{"terms", to_json(commutative_potential(l))}, {"text", to_text(commutative_potential(l))}};
  if (c.as_json) {
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "W = " << to_text(w) << "\n";
  out << "dx W = " << to_text(rel.dx) << "\n";
  out << "dy W = " << to_text(rel.dy) << "\n";
  if (abelian) out << "W^ab = " << to_text(commutative_potential(l)) << "\n";
  return kOk;
}

int cmd_jacobi(const Common& c, std::optional<int> truncate, bool abelian, std::ostream& out) {
  Config cfg;
  LambdaTable l = load_lambdas(c, &cfg);
  int d = truncate.value_or(effective_limits(cfg).truncate);
  if (d < 0) throw UsageError("--truncate must be nonnegative");
  TruncatedAlgebraReport r = abelian ? comm_quotient_dims(l, d) : nc_quotient_dims(l, d);
  json doc = report_json(r);
  doc["mode"] = abelian ? "commutative" : "noncommutative";
  if (c.as_json) {
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << (abelian ? "commutative" : "noncommutative") << " quotient truncated at degree " << d << "\n";
  out << "per-degree dims: " << join_dims(r.per_degree_dims) << "\n";
  out << "cumulative dim: " << r.cumulative_dim << (r.stabilized ? " (stabilized)" : "") << "\n";
  return kOk;
}

int cmd_probe(const Common& c, std::optional<int> dmax, std::ostream& out) {
  Config cfg;
  LambdaTable l = load_lambdas(c, &cfg);
  int d = dmax.value_or(effective_limits(cfg).truncate);
  if (d < 1) throw UsageError("--dmax must be positive");
  ProbeResult p = finiteness_probe(l, d);
  json doc = {{"verdict", to_string(p.verdict)}, {"report", report_json(p.report)}};
  if (p.verdict == Verdict::EvidenceFinite) doc["dimension"] = p.dimension;
  if (c.as_json) {
    out << doc.dump(2) << "\n";
    return kOk;
  }
  out << "verdict: " << to_string(p.verdict);
  if (p.verdict == Verdict::EvidenceFinite) out << " (dimension " << p.dimension << ")";
  out << "\nper-degree dims: " << join_dims(p.report.per_degree_dims) << "\n";
  out << "heuristic evidence only, not a proof\n";
  return kOk;
}

int cmd_resolution(const Common& c, bool check, bool show, std::ostream& out) {
  LambdaTable l = load_lambdas(c);
  require_setup(l);
  Model model(l);
  ResolutionComplex res = build_resolution(model);
  json doc = json::object();
  json twists = json::array();
  for (const auto& e : res.E) twists.push_back(e);
  doc["twists"] = twists;
  if (show) {
    json mats = json::object();
    for (int n = 1; n <= 3; ++n)
      mats["d" + std::to_string(n)] = {{"U1", res.d[n].u1.to_text(Chart::U1)}, {"U2", res.d[n].u2.to_text(Chart::U2)}};
    doc["differentials"] = mats;
  }
  std::vector<Check> checks;
  if (check) {
    for (const auto& r : check_resolution(model, res)) checks.push_back({r.name, r.ok, r.detail});
    auto mutations = run_mutation_corpus(model, res);
    long caught =
        std::count_if(mutations.begin(), mutations.end(), [](const MutationOutcome& m) { return m.detected(); });
    checks.push_back({"mutation corpus detected", caught == static_cast<long>(mutations.size()),
                      std::to_string(caught) + "/" + std::to_string(mutations.size())});
  }
  if (c.as_json) {
    if (check) {
      print_checks(out, checks, true, doc);
    } else {
      out << doc.dump(2) << "\n";
    }
    return all_ok(checks) ? kOk : kCheckFailed;
  }
  const char* names[] = {"E0", "E1", "E2", "E3"};
  for (int n = 0; n < 4; ++n) {
    out << names[n] << " = ";
    for (std::size_t i = 0; i < res.E[n].size(); ++i) out << (i ? " + " : "") << "O(" << res.E[n][i] << ")";
    out << "\n";
  }
  if (show)
    for (int n = 1; n <= 3; ++n)
      out << "d" << n << " on U1:\n" << res.d[n].u1.to_text(Chart::U1) << "\nd" << n << " on U2:\n"
          << res.d[n].u2.to_text(Chart::U2) << "\n";
  if (check) print_checks(out, checks, false);
  return all_ok(checks) ? kOk : kCheckFailed;
}

int cmd_verify_dg(const Common& c, std::optional<int> max_index, std::ostream& out) {
  Config cfg;
  LambdaTable l = load_lambdas(c, &cfg);
  require_setup(l);
  int n = max_index.value_or(effective_limits(cfg).max_index);
  if (n < 1) throw UsageError("--max-index must be positive");
  CechAlgebra alg(l);
  std::vector<Check> checks;
  for (const auto& r : verify_generators(alg, n))
    checks.push_back({r.name, r.ok(), std::to_string(r.instances) + " instances" + (r.ok() ? "" : "; " + r.first_failure)});
  json doc = {{"max_index", n}, {"t", alg.t()}, {"r", alg.r()}, {"s", alg.s()}};
  print_checks(out, checks, c.as_json, doc);
  return all_ok(checks) ? kOk : kCheckFailed;
}

int cmd_ainfty(const Common& c, std::optional<int> max_arity, bool stasheff, bool closed_form, bool all,
               std::ostream& out) {
  Config cfg;
  LambdaTable l = load_lambdas(c, &cfg);
  require_setup(l);
  int n = max_arity.value_or(effective_limits(cfg).max_arity);
  if (n < 2 || n > 12) throw UsageError("--max-arity must lie in [2, 12]");
  AInfinityTable table = minimal_model(l, n);
  std::vector<Check> checks;
  if (closed_form)
    checks.push_back({"closed formula agreement", table.closed_form_failed == 0,
                      std::to_string(table.closed_form_checked) + " tuples, " +
                          std::to_string(table.closed_form_failed) + " disagree"});
  if (stasheff) {
    StasheffReport st = check_stasheff(table, n);
    checks.push_back({"Stasheff identities", st.ok(),
                      std::to_string(st.identities) + " identities" +
                          (st.ok() ? "" : "; first: " + st.first_failures.front())});
  }
  if (c.as_json) {
    json products = json::object();
    for (const auto& [tuple, cls] : table.products)
      if (all || !cls.is_zero()) products[tuple] = class_json(cls);
    json provenance = json::object();
    for (const auto& [tuple, choice] : table.provenance) {
      std::string key = choice_name(choice);
      provenance[key] = provenance.value(key, 0) + 1;
    }
    json doc = {{"max_arity", n},   {"lambdas", lambdas_json(l)}, {"products", products},
                {"notes", table.notes}, {"f_choice_counts", provenance}};
    if (checks.empty()) {
      out << doc.dump(2) << "\n";
    } else {
      print_checks(out, checks, true, doc);
    }
    return all_ok(checks) ? kOk : kCheckFailed;
  }
  for (const auto& [tuple, cls] : table.nonzero())
    out << "m" << tuple.size() << "(" << display_inputs(tuple) << ") = " << class_to_text(cls) << "\n";
  for (const auto& note : table.notes) out << "note: " << note << "\n";
  if (!checks.empty()) print_checks(out, checks, false);
  return all_ok(checks) ? kOk : kCheckFailed;
}

int cmd_selftest(const Common& c, std::ostream& out) {
  LambdaTable l{{{3, 0}, Rational(3)}};
  Limits lim = default_limits_from_env();
  if (!c.config_path.empty()) {
    Config cfg = load_config(c.config_path);
    l = cfg.lambdas;
    lim = effective_limits(cfg);
  }
  auto t0 = std::chrono::steady_clock::now();
  std::vector<Check> checks = golden_checks();
  for (auto& ch : table_checks(l, lim)) checks.push_back(std::move(ch));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream elapsed;
  elapsed.precision(2);
  elapsed << std::fixed << secs;
  json doc = {{"lambdas", lambdas_json(l)},
              {"limits", {{"max_arity", lim.max_arity}, {"truncate", lim.truncate}, {"max_index", lim.max_index}}}};
  print_checks(out, checks, c.as_json, doc);
  if (!c.as_json) out << "elapsed " << elapsed.str() << " s\n";
  return all_ok(checks) ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for (-3,1) curves: necklaces, Cech DG-algebra, A-infinity minimal model"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub, bool with_config) {
    sub->add_flag("--json", common.as_json, "Machine-readable output");
    if (with_config) sub->add_option("--config", common.config_path, "Config file (JSON or TOML subset)");
  };

  auto* classify = app.add_subcommand("classify", "Normal bundle type and (t,r,s)");
  add_common(classify, true);

  int nj = 0, nk = 0, cap = 20;
  bool abelian = false, orbits = false;
  auto* necklace = app.add_subcommand("necklace", "Free necklace polynomial N(j,k)");
  add_common(necklace, false);
  necklace->add_option("--j", nj, "Shaded beads")->required();
  necklace->add_option("--k", nk, "Unshaded beads")->required();
  necklace->add_flag("--abelian", abelian, "Also print the abelianisation");
  necklace->add_flag("--orbits", orbits, "List the rotation orbits");
  necklace->add_option("--max-length", cap, "Refuse j+k above this")->capture_default_str();

  auto* pot = app.add_subcommand("potential", "Superpotential and its cyclic derivatives");
  add_common(pot, true);
  pot->add_flag("--abelian", abelian, "Also print the commutative potential");

  std::optional<int> truncate, dmax, max_index, max_arity;
  auto* jac = app.add_subcommand("jacobi-dim", "Truncated Jacobi algebra dimensions");
  add_common(jac, true);
  jac->add_option("--truncate", truncate, "Truncation degree");
  jac->add_flag("--abelian", abelian, "Commutative quotient");

  auto* probe = app.add_subcommand("probe", "Finiteness probe over truncations");
  add_common(probe, true);
  probe->add_option("--dmax", dmax, "Largest truncation degree");

  bool check = false, show = false;
  auto* res = app.add_subcommand("resolution", "Locally free resolution of the curve");
  add_common(res, true);
  res->add_flag("--check", check, "Run d^2 = 0, gluing and mutation checks");
  res->add_flag("--show", show, "Print the differential matrices");

  auto* dg = app.add_subcommand("verify-dg", "DG axioms and the named homotopy identities");
  add_common(dg, true);
  dg->add_option("--max-index", max_index, "Largest homotopy index");

  bool stasheff = false, closed_form = false, all_products = false;
  auto* ainfty = app.add_subcommand("ainfty", "A-infinity minimal model via the transfer recursion");
  add_common(ainfty, true);
  ainfty->add_option("--max-arity", max_arity, "Largest arity");
  ainfty->add_flag("--verify-stasheff", stasheff, "Check the Stasheff identities");
  ainfty->add_flag("--verify-closed-form", closed_form, "Compare with the closed formulas");
  ainfty->add_flag("--all", all_products, "Include zero products in JSON output");

  auto* selftest = app.add_subcommand("selftest", "Golden values plus the full suite on one table");
  add_common(selftest, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(common, out);
    if (*necklace) return cmd_necklace(nj, nk, abelian, orbits, cap, common.as_json, out);
    if (*pot) return cmd_potential(common, abelian, out);
    if (*jac) return cmd_jacobi(common, truncate, abelian, out);
    if (*probe) return cmd_probe(common, dmax, out);
    if (*res) return cmd_resolution(common, check, show, out);
    if (*dg) return cmd_verify_dg(common, max_index, out);
    if (*ainfty) return cmd_ainfty(common, max_arity, stasheff, closed_form, all_products, out);
    if (*selftest) return cmd_selftest(common, out);
  } catch (const ConfigError& e) {
    err << "error: " << (common.config_path.empty() ? "" : common.config_path + ":");
    if (e.line() > 0) err << e.line() << ": ";
    else if (!common.config_path.empty()) err << " ";
    err << e.message() << "\n";
    return kUsage;
  } catch (const SetupError& e) {
    err << "error: table violates the setup: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace crepant::cli
