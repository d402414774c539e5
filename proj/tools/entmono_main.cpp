/* Command-line front end: compute monotones on operator files, sweep the
 * named state families against their closed forms, run verification suites,
 * and apply named conversion maps. Exit codes: 0 success (result flags may
 * still be set), 2 input error, 3 resource cap exceeded, 4 suite failure. */

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entmono/channels.hpp"
#include "entmono/closed_forms.hpp"
#include "entmono/cones.hpp"
#include "entmono/eig.hpp"
#include "entmono/io.hpp"
#include "entmono/monotones.hpp"
#include "entmono/rng.hpp"
#include "entmono/states.hpp"

using namespace entmono;
using nlohmann::json;

namespace {

struct FamilyOpts {
  std::string family;
  int d = 2;
  double eta = -1.0;
  double mu = -1.0;
  std::vector<double> p;
  std::vector<double> schmidt;
  int dim_a = 2, dim_b = 2;
  int terms = 0;
  uint64_t seed = 0;
};

void add_family_flags(CLI::App* cmd, FamilyOpts& fam) {
  cmd->add_option("--family", fam.family,
                  "State family: isotropic|werner|antisym_werner|bell_diagonal|max_entangled|"
                  "pure_schmidt|random_separable|random_state");
  cmd->add_option("--d", fam.d, "Local dimension for d (x) d families");
  cmd->add_option("--eta", fam.eta, "Isotropic parameter");
  cmd->add_option("--mu", fam.mu, "Werner parameter");
  cmd->add_option("--p", fam.p, "Bell-diagonal weights (4 values)")->expected(4);
  cmd->add_option("--schmidt", fam.schmidt, "Schmidt coefficients for pure_schmidt");
  cmd->add_option("--dim-a", fam.dim_a, "Subsystem A dimension for random families");
  cmd->add_option("--dim-b", fam.dim_b, "Subsystem B dimension for random families");
  cmd->add_option("--terms", fam.terms, "Mixture terms for random_separable (0 = default)");
}

HermitianOperator build_family(const FamilyOpts& fam) {
  if (fam.family == "isotropic") {
    if (fam.eta < 0.0) throw std::invalid_argument("isotropic family needs --eta");
    return isotropic(fam.d, fam.eta).state;
  }
  if (fam.family == "werner") {
    if (fam.mu < 0.0) throw std::invalid_argument("werner family needs --mu");
    return werner(fam.d, fam.mu).state;
  }
  if (fam.family == "antisym_werner") return werner(fam.d, 1.0).state;
  if (fam.family == "bell_diagonal") {
    if (fam.p.size() != 4) throw std::invalid_argument("bell_diagonal family needs --p w0 w1 w2 w3");
    return bell_diagonal({fam.p[0], fam.p[1], fam.p[2], fam.p[3]}).state;
  }
  if (fam.family == "max_entangled") return max_entangled(fam.d);
  if (fam.family == "pure_schmidt") {
    if (fam.schmidt.empty()) throw std::invalid_argument("pure_schmidt family needs --schmidt");
    return pure_schmidt(fam.schmidt);
  }
  if (fam.family == "random_separable")
    return random_separable(fam.dim_a, fam.dim_b, fam.terms, fam.seed);
  if (fam.family == "random_state") return random_state(fam.dim_a, fam.dim_b, fam.seed);
  throw std::invalid_argument("unknown family '" + fam.family + "'");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
}

std::string flags_field(const MonotoneResult& r) {
  std::string f;
  auto add = [&](const char* name) {
    if (!f.empty()) f += ';';
    f += name;
  };
  if (r.heuristic) add("heuristic");
  if (r.undecided_band) add("undecided_band");
  if (r.infeasible_dictionary) add("infeasible_dictionary");
  return f;
}

// ---------------------------------------------------------------- compute --

int run_compute(const std::string& input, const FamilyOpts& fam, const std::string& kinds_csv,
                bool symmetrize, const MonotoneConfig& cfg, const std::string& out,
                const std::string& format, const std::string& out_state) {
  HermitianOperator op = input.empty() ? build_family(fam) : read_operator_file(input, symmetrize);
  if (!out_state.empty()) write_operator_file(out_state, op);

  std::vector<std::string> kinds;
  std::stringstream ss(kinds_csv);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) kinds.push_back(item);
  if (kinds.empty()) throw std::invalid_argument("--kinds is empty");

  json results = json::array();
  std::string csv = "# entmono compute v1\nkind,lo,hi,value,flags\n";
  for (const std::string& name : kinds) {
    if (name == "negativity") {
      const double n = negativity(op);
      results.push_back(json{{"kind", "negativity"}, {"value", n}});
      csv += "negativity," + format_double(n) + "," + format_double(n) + "," + format_double(n) +
             ",\n";
      continue;
    }
    const auto kind = kind_from_name(name);
    if (!kind) throw std::invalid_argument("unknown kind '" + name + "'");
    MonotoneResult r;
    switch (*kind) {
      case MonotoneKind::m1: r = m1(op, cfg); break;
      case MonotoneKind::m1_sep: r = m1_sep(op, cfg); break;
      case MonotoneKind::m1_primal: r = m1_primal(op, cfg); break;
      case MonotoneKind::m2_ppt_lower: r = m2_ppt_lower(op, cfg); break;
      case MonotoneKind::m2_sep_upper: r = m2_sep_upper(op, {}, cfg); break;
      case MonotoneKind::r_g_ppt: r = r_g_ppt(op, cfg); break;
    }
    results.push_back(result_to_json(r));
    csv += name + "," + format_double(r.lo) + "," + format_double(r.hi) + "," +
           format_double(r.value()) + "," + flags_field(r) + "\n";
  }

  if (format == "csv") {
    write_text(out, csv);
  } else {
    json doc{{"input", input.empty() ? "family:" + fam.family : input}, {"results", results}};
    write_text(out, doc.dump(1) + "\n");
  }
  return 0;
}

// ------------------------------------------------------------------ sweep --

struct Range {
  double lo = 0.0, hi = 0.0, step = 0.0;
};

Range parse_range(const std::string& spec) {
  Range r;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &r.lo, &r.hi, &r.step) != 3 || r.step <= 0.0)
    throw std::invalid_argument("range must be lo:hi:step with positive step");
  return r;
}

int run_sweep(const FamilyOpts& fam, const std::string& range_spec, int points,
              const std::string& kinds_csv, const MonotoneConfig& cfg, const std::string& out) {
  std::vector<std::string> kinds;
  std::stringstream ss(kinds_csv);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) kinds.push_back(item);

  struct Row {
    double param;
    HermitianOperator state;
    double closed_form;
  };
  std::vector<Row> rows;

  if (fam.family == "isotropic" || fam.family == "werner") {
    if (range_spec.empty()) throw std::invalid_argument("sweep needs --range lo:hi:step");
    const Range r = parse_range(range_spec);
    for (double v = r.lo; v <= r.hi + 1e-12; v += r.step) {
      const double param = std::min(v, r.hi);
      if (fam.family == "isotropic")
        rows.push_back({param, isotropic(fam.d, param).state,
                        m1_isotropic_closed_form(fam.d, param)});
      else
        rows.push_back({param, werner(fam.d, param).state, m1_werner_closed_form(fam.d, param)});
    }
  } else if (fam.family == "bell" || fam.family == "bell_diagonal") {
    if (points <= 0) throw std::invalid_argument("bell sweep needs --points N");
    Rng rng(fam.seed);
    while (static_cast<int>(rows.size()) < points) {
      const std::vector<double> q = rng.simplex(4);
      std::array<double, 4> p{q[0], q[1], q[2], q[3]};
      std::sort(p.begin(), p.end(), std::greater<double>());
      if (p[0] <= 0.55) continue;  // keep clearly entangled points
      rows.push_back({p[0], bell_diagonal(p).state, m1_bell_closed_form(p)});
    }
  } else {
    throw std::invalid_argument("sweep supports families isotropic, werner, bell");
  }

  std::string csv = "# entmono sweep v1 family=" + fam.family + " d=" + std::to_string(fam.d) +
                    " seed=" + std::to_string(fam.seed) + "\n";
  csv += "param,kind,lo,hi,closed_form,abs_diff,flags\n";
  for (const Row& row : rows) {
    for (const std::string& name : kinds) {
      const auto kind = kind_from_name(name);
      if (!kind) throw std::invalid_argument("unknown kind '" + name + "'");
      MonotoneResult r;
      switch (*kind) {
        case MonotoneKind::m1: r = m1(row.state, cfg); break;
        case MonotoneKind::m1_sep: r = m1_sep(row.state, cfg); break;
        case MonotoneKind::m1_primal: r = m1_primal(row.state, cfg); break;
        case MonotoneKind::m2_ppt_lower: r = m2_ppt_lower(row.state, cfg); break;
        case MonotoneKind::m2_sep_upper: r = m2_sep_upper(row.state, {}, cfg); break;
        case MonotoneKind::r_g_ppt: r = r_g_ppt(row.state, cfg); break;
      }
      // The closed forms cover m1 (and m1_sep, which agrees on these
      // families); other kinds get empty oracle columns.
      const bool has_cf = (*kind == MonotoneKind::m1 || *kind == MonotoneKind::m1_sep);
      csv += format_double(row.param) + "," + name + "," + format_double(r.lo) + "," +
             format_double(r.hi) + ",";
      if (has_cf) {
        csv += format_double(row.closed_form) + "," +
               format_double(std::abs(r.value() - row.closed_form));
      } else {
        csv += ",";
      }
      csv += "," + flags_field(r) + "\n";
    }
  }
  write_text(out, csv);
  return 0;
}

// ----------------------------------------------------------------- verify --

struct SuiteReport {
  std::string name;
  bool passed = true;
  json checks = json::array();

  void check(const std::string& what, bool ok, double margin) {
    checks.push_back(json{{"check", what}, {"pass", ok}, {"margin", margin}});
    std::printf("%s %s (margin %.3g)\n", ok ? "PASS" : "FAIL", what.c_str(), margin);
    passed = passed && ok;
  }
};

int run_verify(const std::string& suite, uint64_t seed, const MonotoneConfig& cfg,
               const std::string& out) {
  SuiteReport rep;
  rep.name = suite;

  if (suite == "lemma1") {
    Rng rng(seed);
    int agree = 0, total = 0, skipped = 0;
    for (int t = 0; t < 1000; ++t) {
      std::array<double, 4> a;
      for (double& x : a) x = 2.0 * rng.uniform() - 1.0;
      std::array<double, 4> s = a;
      std::sort(s.begin(), s.end(), std::greater<double>());
      if (std::abs(s[2] + s[3]) <= 1e-6) {
        ++skipped;
        continue;
      }
      ++total;
      const bool expected = bell_diag_check(a);
      ConeOracle oracle(cfg.solver);
      const HermitianOperator z = bell_diagonal_operator(a);
      const bool dec = oracle.decomposable(z).status == Membership::member;
      const bool bp = is_block_positive(z, cfg.solver).status == Membership::member;
      if (dec == expected && bp == expected) ++agree;
    }
    rep.check("lemma1 agreement on " + std::to_string(total) + " operators (skipped " +
                  std::to_string(skipped) + " in the margin band)",
              agree == total, static_cast<double>(total - agree));
  } else if (suite == "bounds") {
    double worst1 = 0.0, worst2 = 0.0;
    for (int t = 0; t < 200; ++t) {
      const HermitianOperator s = random_state(2, (t % 2) ? 3 : 2, seed + t);
      const double n = negativity(s);
      const double msep = m1_sep(s, cfg).value();
      const double mm = m1(s, cfg).value();
      worst1 = std::max(worst1, n / (1.0 + n) - msep);
      worst1 = std::max(worst1, msep - mm);
    }
    rep.check("negativity chain N/(1+N) <= m1_sep <= m1 on 200 states", worst1 <= 2e-3, worst1);
    for (int t = 0; t < 100; ++t) {
      const HermitianOperator s = random_state(2, 2, seed + 1000 + t);
      const MonotoneResult rg = r_g_ppt(s, cfg);
      const MonotoneResult up = m2_sep_upper(s, {}, cfg);
      worst2 = std::max(worst2, rg.robustness_bound - up.value());
    }
    rep.check("robustness chain r/(1+r) <= m2_sep_upper on 100 states", worst2 <= 2e-3, worst2);
  } else if (suite == "monotonicity") {
    double worst = 0.0;
    int branches = 0;
    for (int t = 0; branches < 100; ++t) {
      const HermitianOperator s = random_state(2, 2, seed + t);
      if (min_eigenvalue(s.partial_transpose()) >= -1e-9) continue;
      std::vector<NamedMap> maps = {as_named(random_local_instrument(2, 2, 2, 2, seed + 7000 + t))};
      const HarnessReport h = monotonicity_harness(s, maps, MonotoneKind::m1, cfg);
      branches += static_cast<int>(h.rows.size());
      worst = std::max(worst, h.max_violation);
    }
    rep.check("m1 never increases across " + std::to_string(branches) + " stochastic branches",
              worst <= 1e-3, worst);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }

  if (!out.empty()) {
    json doc{{"suite", rep.name}, {"passed", rep.passed}, {"checks", rep.checks}};
    write_text(out, doc.dump(1) + "\n");
  }
  std::printf("suite %s: %s\n", rep.name.c_str(), rep.passed ? "PASS" : "FAIL");
  return rep.passed ? 0 : 4;
}

// ---------------------------------------------------------------- convert --

int run_convert(const std::string& input, const FamilyOpts& fam, const std::string& map_name,
                bool symmetrize, const std::string& out) {
  const HermitianOperator op =
      input.empty() ? build_family(fam) : read_operator_file(input, symmetrize);

  HermitianOperator raw(1, 1);
  if (map_name == "werner_to_iso") {
    raw = werner_to_iso(op);
  } else if (map_name == "iso_to_werner") {
    raw = iso_to_werner(op);
  } else if (map_name == "twirl_iso") {
    raw = twirl_to_isotropic(op);
  } else if (map_name == "twirl_uv") {
    raw = twirl_full(op);
  } else {
    throw std::invalid_argument("unknown map '" + map_name + "'");
  }
  const HermitianOperator result = normalize_state(raw);

  if (op.dim_a() == op.dim_b()) {
    // Log the induced parameter mapping for the conversion pair.
    const int d = op.dim_a();
    const double eta_in = pairing(op, max_entangled(d));
    const double mu_in = pairing(op, antisymmetric_projector(d));
    const double eta_out = pairing(result, max_entangled(d));
    const double mu_out = pairing(result, antisymmetric_projector(d));
    std::fprintf(stderr, "map %s: tr(in P+)=%.9g tr(in P_A)=%.9g -> tr(out P+)=%.9g tr(out P_A)=%.9g\n",
                 map_name.c_str(), eta_in, mu_in, eta_out, mu_out);
  }

  if (out.empty()) {
    std::cout << operator_to_json(result).dump(1) << "\n";
  } else {
    write_operator_file(out, result);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strong entanglement monotones: brackets with certificates"};
  app.require_subcommand(1);

  FamilyOpts fam;
  MonotoneConfig cfg;
  std::string input, out, format = "json", kinds = "m1", out_state, range_spec, suite, map_name;
  bool symmetrize = false;
  int points = 0;
  uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tol-x", cfg.x_tol, "Bisection bracket width target");
    cmd->add_option("--tol-feas", cfg.solver.feas_tol, "Feasibility tolerance");
    cmd->add_option("--restarts", cfg.solver.restarts, "See-saw restarts");
    cmd->add_option("--max-iters", cfg.solver.max_iters, "Iteration cap per feasibility call");
    cmd->add_option("--seed", seed, "RNG seed");
    cmd->add_option("--out", out, "Output path (default stdout)");
  };

  CLI::App* compute = app.add_subcommand("compute", "Compute monotones for one operator");
  compute->add_option("input", input, "Operator JSON file (omit when using --family)");
  add_family_flags(compute, fam);
  compute->add_option("--kinds", kinds, "Comma-separated kinds, e.g. m1,m1_sep,negativity");
  compute->add_flag("--symmetrize", symmetrize, "Symmetrize non-Hermitian input files");
  compute->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  compute->add_option("--out-state", out_state, "Also write the constructed input operator here");
  add_common(compute);

  CLI::App* sweep = app.add_subcommand("sweep", "Sweep a family against its closed form (CSV)");
  add_family_flags(sweep, fam);
  sweep->add_option("--range", range_spec, "Parameter range lo:hi:step (isotropic eta, werner mu)");
  sweep->add_option("--points", points, "Seeded simplex points for the bell family");
  sweep->add_option("--kinds", kinds, "Comma-separated kinds (default m1)");
  add_common(sweep);

  CLI::App* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("--suite", suite, "lemma1|bounds|monotonicity")->required();
  add_common(verify);

  CLI::App* convert = app.add_subcommand("convert", "Apply a named map and write the state");
  convert->add_option("input", input, "Operator JSON file (omit when using --family)");
  add_family_flags(convert, fam);
  convert->add_option("--map", map_name, "werner_to_iso|iso_to_werner|twirl_iso|twirl_uv")
      ->required();
  convert->add_flag("--symmetrize", symmetrize, "Symmetrize non-Hermitian input files");
  add_common(convert);

  try {
    app.parse(argc, argv);
    fam.seed = seed;
    cfg.solver.seed = seed;
    if (compute->parsed())
      return run_compute(input, fam, kinds, symmetrize, cfg, out, format, out_state);
    if (sweep->parsed()) return run_sweep(fam, range_spec, points, kinds, cfg, out);
    if (verify->parsed()) return run_verify(suite, seed, cfg, out);
    if (convert->parsed()) return run_convert(input, fam, map_name, symmetrize, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::length_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
