// pdm — classical and quantum quasi-free position-dependent-mass toolkit.
//
// Subcommands: simulate1d, simulate2d, spectrum, classify, profiles.
// Exit codes: 0 success, 2 configuration/precondition error, 3 numerical
// failure. Set PDM_LOG=debug for extra diagnostics on stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pdm/correspondence/correspondence.hpp"
#include "pdm/dynamics1d/dynamics1d.hpp"
#include "pdm/dynamics2d/dynamics2d.hpp"
#include "pdm/io/format.hpp"
#include "pdm/numerics/turning_points.hpp"
#include "pdm/quantum/effective_potential.hpp"
#include "pdm/spectra/spectra.hpp"

namespace {

using nlohmann::json;
using pdm::io::g17;
using pdm::profiles::MassProfile;

bool log_enabled() {
  static const bool enabled = [] {
    const char* v = std::getenv("PDM_LOG");
    return v != nullptr && std::string(v) != "" && std::string(v) != "0";
  }();
  return enabled;
}

void log_line(const std::string& msg) {
  if (log_enabled()) std::cerr << "[pdm] " << msg << '\n';
}

struct ProfileFlags {
  std::string family;
  double A = 1.0;
  int n = 0;
  double B = 1.0;
  double C = 1.0;
  double nu = -3.0;
  double m0 = 1.0;
  double r0 = 1.0;

  void attach(CLI::App* cmd, bool radial) {
    auto* opt = cmd->add_option("--family", family,
                                radial ? "powerlaw2d | rational2d | constant"
                                       : "exponential1d | rational1d | constant");
    opt->required();
    cmd->add_option("--A", A, "exponential1d strength (non-zero)");
    cmd->add_option("--n", n, "exponential1d power (non-negative integer)");
    cmd->add_option("--B", B, "rational1d scale (non-zero)");
    cmd->add_option("--C", C, "rational2d scale (non-zero)");
    cmd->add_option("--nu", nu, "powerlaw2d exponent");
    cmd->add_option("--m0", m0, "reference mass (positive)");
    cmd->add_option("--r0", r0, "reference radius (positive)");
  }

  [[nodiscard]] MassProfile build() const {
    if (family == "exponential1d") return MassProfile::exponential1d(A, n, m0);
    if (family == "rational1d") return MassProfile::rational1d(B, m0);
    if (family == "powerlaw2d") return MassProfile::power_law_2d(nu, m0, r0);
    if (family == "rational2d") return MassProfile::rational2d(C, m0, r0);
    if (family == "constant") return MassProfile::constant(m0);
    throw pdm::PreconditionError("unknown profile family '" + family + "'");
  }
};

struct IntegratorFlags {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double max_step = 0.0;
  bool fixed_rk4 = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--abs-tol", abs_tol, "absolute step tolerance");
    cmd->add_option("--rel-tol", rel_tol, "relative step tolerance");
    cmd->add_option("--max-step", max_step, "step ceiling (fixed step for --fixed-rk4)");
    cmd->add_flag("--fixed-rk4", fixed_rk4, "fixed-step RK4 instead of adaptive RK45");
  }

  [[nodiscard]] pdm::numerics::IntegratorConfig build() const {
    pdm::numerics::IntegratorConfig cfg;
    cfg.abs_tol = abs_tol;
    cfg.rel_tol = rel_tol;
    cfg.max_step = max_step;
    if (fixed_rk4) cfg.method = pdm::numerics::IntegratorConfig::Method::FixedRk4;
    return cfg;
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw pdm::PreconditionError("cannot open output file '" + path + "'");
  return os;
}

/// Writes a rectangular numeric table as CSV (17-significant-digit floats)
/// or as a {"columns": [...], "rows": [[...]]} JSON document.
void write_table(const std::string& path, const std::string& format,
                 const std::vector<std::string>& columns,
                 const std::vector<std::vector<double>>& rows) {
  auto os = open_out(path);
  if (format == "csv") {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      os << columns[c] << (c + 1 < columns.size() ? ',' : '\n');
    }
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        os << g17(row[c]) << (c + 1 < row.size() ? ',' : '\n');
      }
    }
  } else if (format == "json") {
    json doc;
    doc["columns"] = columns;
    doc["rows"] = rows;
    os << doc.dump(2) << '\n';
  } else {
    throw pdm::PreconditionError("unknown output format '" + format + "'");
  }
}

double max_invariant_drift(const pdm::numerics::Trajectory& traj, std::size_t idx) {
  const double ref = traj.front().invariants.at(idx);
  double drift = 0.0;
  for (const auto& s : traj.samples) {
    drift = std::max(drift, std::abs(s.invariants[idx] - ref));
  }
  return ref != 0.0 ? drift / std::abs(ref) : drift;
}

// ---------------------------------------------------------------------------
// simulate1d

int run_simulate1d(const ProfileFlags& pf, const IntegratorFlags& intf, double x0,
                   double v0, double t_end, double horizon, double x_ceiling,
                   const std::string& out_path, const std::string& format) {
  const MassProfile profile = pf.build();
  const pdm::dynamics1d::State1D s0{x0, v0};
  const auto traj = pdm::dynamics1d::simulate(profile, s0, t_end, intf.build());
  log_line("simulate1d: " + std::to_string(traj.size()) + " samples");

  std::vector<std::vector<double>> rows;
  rows.reserve(traj.size());
  for (const auto& s : traj.samples) {
    rows.push_back({s.t, s.state[0], s.state[1], profile.mass(s.state[0]),
                    s.invariants[0]});
  }
  write_table(out_path, format, {"t", "x", "xdot", "mass", "Pi"}, rows);

  pdm::dynamics1d::ClassifyOptions copt;
  copt.horizon = horizon;
  copt.x_ceiling = x_ceiling;
  copt.integrator = intf.build();
  const auto cls = pdm::dynamics1d::classify(profile, s0, copt);

  const auto& last = traj.back();
  std::cout << "final: t=" << g17(last.t) << " x=" << g17(last.state[0])
            << " xdot=" << g17(last.state[1]) << '\n';
  std::cout << "Pi drift (relative): " << g17(max_invariant_drift(traj, 0)) << '\n';
  using Kind = pdm::dynamics1d::ConfinementClass1D::Kind;
  switch (cls.kind) {
    case Kind::ConfinedFinite:
      std::cout << "confinement: ConfinedFinite range=[" << g17(cls.range_lo) << ", "
                << g17(cls.range_hi) << "]\n";
      break;
    case Kind::UnboundedFiniteTimeBlowup:
      std::cout << "confinement: UnboundedFiniteTimeBlowup t_blowup="
                << g17(cls.t_blowup) << '\n';
      break;
    case Kind::UnboundedAsymptotic:
      std::cout << "confinement: UnboundedAsymptotic\n";
      break;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// simulate2d

int run_simulate2d(const ProfileFlags& pf, const IntegratorFlags& intf,
                   std::optional<double> rinit, double theta0, double rdot0,
                   double thetadot0, double t_end, bool raw,
                   const std::string& out_path, const std::string& format) {
  const MassProfile profile = pf.build();
  const double r_start = rinit.value_or(pf.r0);
  const pdm::dynamics2d::State2D s0{r_start, theta0, rdot0, thetadot0};
  pdm::dynamics2d::SimulateOptions opt;
  opt.integrator = intf.build();
  opt.enforce_angular_momentum = !raw;
  const auto traj = pdm::dynamics2d::simulate_polar(profile, s0, t_end, opt);
  log_line("simulate2d: " + std::to_string(traj.size()) + " samples");

  std::vector<std::vector<double>> rows;
  rows.reserve(traj.size());
  for (const auto& s : traj.samples) {
    rows.push_back({s.t, s.state[0], s.state[1], s.state[2], s.state[3],
                    s.invariants[0], s.invariants[1]});
  }
  write_table(out_path, format,
              {"t", "r", "theta", "rdot", "thetadot", "K", "eq40_residual"}, rows);

  std::cout << "K drift (relative): " << g17(max_invariant_drift(traj, 0)) << '\n';

  double r_min = s0.r, r_max_seen = s0.r;
  for (const auto& s : traj.samples) {
    r_min = std::min(r_min, s.state[0]);
    r_max_seen = std::max(r_max_seen, s.state[0]);
  }
  const double r_max_refined = pdm::numerics::refined_component_max(traj, 0);

  if (pf.family == "powerlaw2d") {
    const auto bound =
        pdm::dynamics2d::power_law_bound(pf.nu, pf.m0, pf.r0, rdot0, thetadot0);
    using Kind = pdm::dynamics2d::RadialBound::Kind;
    switch (bound.kind) {
      case Kind::MaxRadius:
        std::cout << "bound: MaxRadius r_max=" << g17(bound.r_max)
                  << " simulated_max=" << g17(r_max_refined)
                  << " gap=" << g17(bound.r_max - r_max_refined) << '\n';
        break;
      case Kind::Spiral:
        std::cout << "bound: Spiral growth_rate=" << g17(bound.spiral_rate) << '\n';
        break;
      case Kind::Unbounded:
        std::cout << "bound: Unbounded simulated_max=" << g17(r_max_seen) << '\n';
        break;
      case Kind::Interval:
        break;
    }
  } else if (pf.family == "rational2d") {
    const auto bound = pdm::dynamics2d::rational_confinement_interval(
        pf.C, pf.m0, pf.r0, rdot0, thetadot0);
    std::cout << "bound: Interval [" << g17(bound.r_lo) << ", " << g17(bound.r_hi)
              << "] simulated r in [" << g17(r_min) << ", " << g17(r_max_refined)
              << "]\n";
  } else {
    std::cout << "simulated r in [" << g17(r_min) << ", " << g17(r_max_seen) << "]\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum

pdm::quantum::OrderingScheme scheme_from_flags(const std::string& name,
                                               std::optional<double> j,
                                               std::optional<double> k,
                                               std::optional<double> l) {
  using pdm::Rational;
  if (name != "custom") {
    const auto* s = pdm::quantum::find_builtin(name);
    if (s == nullptr) {
      throw pdm::PreconditionError("unknown scheme '" + name +
                                   "' (try the 'profiles' subcommand for names)");
    }
    return *s;
  }
  if (!j.has_value() || !k.has_value()) {
    throw pdm::PreconditionError("custom scheme needs --j and --k (and optionally --l)");
  }
  const Rational rj = Rational::from_double(*j);
  const Rational rk = Rational::from_double(*k);
  const Rational rl =
      l.has_value() ? Rational::from_double(*l) : Rational(-1) - rj - rk;
  return {"custom", rj, rk, rl};
}

int run_spectrum(const std::string& scheme_name, std::optional<double> j,
                 std::optional<double> k, std::optional<double> l,
                 const std::string& model, double B, double C, double m0, double r0,
                 int m_quantum, std::size_t n_states, std::size_t grid,
                 bool allow_free, const std::string& out_path,
                 const std::string& format) {
  const auto scheme = scheme_from_flags(scheme_name, j, k, l);
  pdm::quantum::EffectivePotential pot;
  if (model == "rational1d") {
    pot = pdm::quantum::effective_potential_1d(scheme, B, m0);
  } else if (model == "rational2d") {
    pot = pdm::quantum::effective_potential_2d(scheme, m_quantum, C, m0, r0);
  } else {
    throw pdm::PreconditionError("unknown model '" + model + "'");
  }

  const auto& qc = pot.quantum_class;
  const bool solvable = qc.bound() || (allow_free && qc.kind == pdm::quantum::QuantumClass::Kind::Free);
  if (!solvable) {
    if (model == "rational1d") {
      std::cout << "class=" << pdm::quantum::to_string(qc.kind) << '\n';
    } else {
      std::cout << "class=NotBound detail=" << pdm::quantum::to_string(qc.kind)
                << " m=" << m_quantum << '\n';
    }
    std::cout << "NotBound: no discrete spectrum for this ordering\n";
    return 0;
  }

  pdm::spectra::SpectrumRequest req{pot, n_states, grid, allow_free};
  const auto spec = pdm::spectra::solve(req);

  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < spec.levels_scaled.size(); ++i) {
    rows.push_back({static_cast<double>(i), spec.levels_scaled[i],
                    spec.levels_physical[i], spec.estimated_error[i]});
  }
  write_table(out_path, format,
              {"n", "level_scaled", "level_physical", "estimated_error"}, rows);

  std::cout << "class=" << pdm::quantum::to_string(qc.kind);
  if (qc.bound()) std::cout << " lambda=" << g17(qc.lambda);
  std::cout << " grid=" << spec.grid_points_used << '\n';
  for (std::size_t i = 0; i < spec.levels_scaled.size(); ++i) {
    std::cout << "level[" << i << "] scaled=" << g17(spec.levels_scaled[i])
              << " physical=" << g17(spec.levels_physical[i])
              << " err<=" << g17(spec.estimated_error[i]) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// classify

json rational_json(const pdm::Rational& r) { return r.to_annotated_string(); }

json report_to_json(const pdm::correspondence::Report& report) {
  json schemes = json::array();
  for (const auto& row : report.rows) {
    json rec;
    rec["scheme"] = row.scheme.name();
    rec["j"] = rational_json(row.scheme.j());
    rec["k"] = rational_json(row.scheme.k());
    rec["l"] = rational_json(row.scheme.l());
    rec["a"] = rational_json(row.coeffs.a);
    rec["b"] = rational_json(row.coeffs.b);
    rec["xi"] = rational_json(row.coeffs.xi);
    rec["coeff_1d"] = rational_json(row.coeffs.well_strength_1d());
    rec["class_1d"] = pdm::quantum::to_string(row.class_1d.kind);
    json by_m = json::object();
    for (const auto& [m, qc] : row.class_2d_by_m) {
      by_m[std::to_string(m)] = qc.bound() ? "Bound" : "NotBound";
    }
    rec["class_2d_by_m"] = by_m;
    if (row.verdict_1d) rec["verdict_1d"] = to_string(*row.verdict_1d);
    if (row.verdict_2d) {
      rec["verdict_2d"] = to_string(*row.verdict_2d);
      if (!row.verdict_2d_detail.empty()) rec["verdict_2d_detail"] = row.verdict_2d_detail;
    }
    rec["headline"] = row.headline;
    schemes.push_back(rec);
  }
  json out;
  out["schemes"] = schemes;
  out["m_values"] = report.m_values;
  out["notes"] = report.notes;
  return out;
}

int run_classify(const std::string& schemes_sel, std::optional<double> j,
                 std::optional<double> k, std::optional<double> l, int m_min,
                 int m_max, const std::string& out_path) {
  std::vector<pdm::quantum::OrderingScheme> schemes;
  if (schemes_sel == "builtin") {
    schemes = pdm::quantum::builtin_schemes();
  } else if (schemes_sel == "custom") {
    schemes.push_back(scheme_from_flags("custom", j, k, l));
  } else {
    schemes.push_back(scheme_from_flags(schemes_sel, {}, {}, {}));
  }
  const pdm::correspondence::Model models[] = {
      pdm::correspondence::Model::Rational1D,
      pdm::correspondence::Model::Rational2D};
  const auto report =
      pdm::correspondence::full_report(schemes, models, {m_min, m_max});

  std::cout << pdm::correspondence::to_table(report);
  if (!out_path.empty()) {
    auto os = open_out(out_path);
    os << report_to_json(report).dump(2) << '\n';
    std::cout << "report written to " << out_path << '\n';
  }
  return 0;
}

int run_profiles() {
  std::cout << "built-in mass profiles:\n"
            << "  exponential1d  m(x) = m0 exp(2A x^(n+1)/(n+1))   params: A != 0, n >= 0, m0 > 0\n"
            << "  rational1d     m(x) = m0 / (1 + B^2 x^2)^2       params: B != 0, m0 > 0\n"
            << "  powerlaw2d     m(r) = m0 (r/r0)^nu               params: nu, m0 > 0, r0 > 0\n"
            << "  rational2d     m(r) = Ct / (1 + C^2 r^2)^2       params: C != 0, m0 > 0, r0 >= 0\n"
            << "                 (Ct = m0 (1 + C^2 r0^2)^2 so m(r0) = m0)\n"
            << "  constant       m(x) = m0                          params: m0 > 0\n"
            << "ordering schemes:\n";
  for (const auto& s : pdm::quantum::builtin_schemes()) {
    std::cout << "  " << s.name() << "  (j,k,l) = (" << s.j().to_fraction_string()
              << ", " << s.k().to_fraction_string() << ", "
              << s.l().to_fraction_string() << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"classical & quantum quasi-free position-dependent-mass toolkit"};
  app.set_config("--config", "", "key=value config file; command-line flags win");
  app.require_subcommand(1);

  // simulate1d ---------------------------------------------------------------
  auto* s1 = app.add_subcommand("simulate1d", "integrate the 1D equation of motion");
  ProfileFlags pf1;
  pf1.attach(s1, false);
  IntegratorFlags if1;
  if1.attach(s1);
  double x0 = 0.0, v0 = 1.0, t_end1 = 10.0, horizon = 100.0, x_ceiling = 1e6;
  std::string out1 = "pdm_trajectory1d.csv", fmt1 = "csv";
  s1->add_option("--x0", x0, "initial position");
  s1->add_option("--v0", v0, "initial velocity (non-zero)")->required();
  s1->add_option("--t-end", t_end1, "integration time");
  s1->add_option("--horizon", horizon, "classification time budget");
  s1->add_option("--x-ceiling", x_ceiling, "classification escape radius");
  s1->add_option("--out", out1, "trajectory file path");
  s1->add_option("--format", fmt1, "csv | json");

  // simulate2d ---------------------------------------------------------------
  auto* s2 = app.add_subcommand("simulate2d", "integrate the plane-polar equations");
  ProfileFlags pf2;
  pf2.attach(s2, true);
  IntegratorFlags if2;
  if2.attach(s2);
  std::optional<double> rinit;
  double theta0 = 0.0, rdot0 = 0.0, thetadot0 = 1.0, t_end2 = 10.0;
  bool raw = false;
  std::string out2 = "pdm_trajectory2d.csv", fmt2 = "csv";
  s2->add_option("--rinit", rinit, "initial radius (default: profile r0)");
  s2->add_option("--theta0", theta0, "initial angle");
  s2->add_option("--rdot0", rdot0, "initial radial velocity");
  s2->add_option("--thetadot0", thetadot0, "initial angular velocity");
  s2->add_option("--t-end", t_end2, "integration time");
  s2->add_flag("--raw", raw, "integrate the raw second-order system "
                             "(no structural K enforcement)");
  s2->add_option("--out", out2, "trajectory file path");
  s2->add_option("--format", fmt2, "csv | json");

  // spectrum -----------------------------------------------------------------
  auto* sp = app.add_subcommand("spectrum", "bound states of the effective potential");
  std::string scheme_name = "bendanielduke", model = "rational1d";
  std::optional<double> jv, kv, lv;
  double B = 1.0, C = 1.0, m0q = 1.0, r0q = 1.0;
  int m_quantum = 1;
  std::size_t n_states = 3, grid = 0;
  bool allow_free = false;
  std::string out_spec = "pdm_spectrum.csv", fmt_spec = "csv";
  sp->add_option("--scheme", scheme_name, "ordering scheme name or 'custom'");
  sp->add_option("--j", jv, "custom scheme j");
  sp->add_option("--k", kv, "custom scheme k");
  sp->add_option("--l", lv, "custom scheme l (default: -1 - j - k)");
  sp->add_option("--model", model, "rational1d | rational2d");
  sp->add_option("--B", B, "1D rational mass scale");
  sp->add_option("--C", C, "2D rational mass scale");
  sp->add_option("--m0", m0q, "reference mass");
  sp->add_option("--r0", r0q, "2D reference radius");
  sp->add_option("--m", m_quantum, "magnetic quantum number (2D)");
  sp->add_option("--n", n_states, "number of levels");
  sp->add_option("--grid", grid, "interior grid points (0 = default)");
  sp->add_flag("--allow-free", allow_free, "solve the zero-well box anyway");
  sp->add_option("--out", out_spec, "spectrum file path");
  sp->add_option("--format", fmt_spec, "csv | json");

  // classify -----------------------------------------------------------------
  auto* cl = app.add_subcommand("classify", "ordering-scheme correspondence report");
  std::string schemes_sel = "builtin";
  std::optional<double> cj, ck, clv;
  int m_min = 1, m_max = 3;
  std::string out_json = "pdm_report.json";
  cl->add_option("--schemes", schemes_sel, "'builtin', 'custom', or a scheme name");
  cl->add_option("--j", cj, "custom scheme j");
  cl->add_option("--k", ck, "custom scheme k");
  cl->add_option("--l", clv, "custom scheme l (default: -1 - j - k)");
  cl->add_option("--m-min", m_min, "smallest |m| for the 2D column");
  cl->add_option("--m-max", m_max, "largest |m| for the 2D column");
  cl->add_option("--out", out_json, "JSON report path ('' to skip)");

  // profiles -----------------------------------------------------------------
  auto* pr = app.add_subcommand("profiles", "list built-in families and schemes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (s1->parsed()) {
      return run_simulate1d(pf1, if1, x0, v0, t_end1, horizon, x_ceiling, out1, fmt1);
    }
    if (s2->parsed()) {
      return run_simulate2d(pf2, if2, rinit, theta0, rdot0, thetadot0, t_end2, raw,
                            out2, fmt2);
    }
    if (sp->parsed()) {
      return run_spectrum(scheme_name, jv, kv, lv, model, B, C, m0q, r0q, m_quantum,
                          n_states, grid, allow_free, out_spec, fmt_spec);
    }
    if (cl->parsed()) {
      return run_classify(schemes_sel, cj, ck, clv, m_min, m_max, out_json);
    }
    if (pr->parsed()) {
      return run_profiles();
    }
  } catch (const pdm::PreconditionError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const pdm::DomainError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const pdm::NoRealRoots& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const pdm::Error& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
