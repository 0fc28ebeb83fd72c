// End-to-end acceptance checks for the toolkit.  Each numbered check prints
// one PASS/FAIL line; the process exits nonzero if any fail.  argv[1] must
// point at the command-line binary, which is exercised as a subprocess for
// the ensemble certification checks.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>
#include <mhr/bounds.hpp>
#include <mhr/config.hpp>
#include <mhr/integrator.hpp>
#include <mhr/io.hpp>
#include <mhr/verify.hpp>

#include "support/bounds_oracle.hpp"

namespace fs = std::filesystem;
using namespace mhr;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string g_cli;
fs::path g_scratch;

std::string num(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

double rel_err(double value, long double reference) {
  const long double denom = std::max<long double>(std::fabs(reference), 1e-300L);
  return static_cast<double>(std::fabs(static_cast<long double>(value) - reference) / denom);
}

double lsq_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// --- shared ensemble run (checks 5 through 8) -------------------------------

constexpr double kRadius = 3.1622776601683795;  // sqrt(10)
constexpr std::uint64_t kSeed = 20260814;
constexpr double kTol = 1e-6;

struct SharedRun {
  std::string error;          // nonempty if the setup itself failed
  int exit_status = -1;       // raw status from running the verifier
  nlohmann::json report;      // parsed report.json
  MonitorSeries member0;      // independently re-integrated first member
  std::vector<State> tail0;   // its late-time states
  EnergyBounds eb;
  L4Bounds lb;
  AttractorBounds ab;
  double t0_pred = 0.0;
};

const SharedRun& shared_run() {
  static const SharedRun run = [] {
    SharedRun sr;
    try {
      const fs::path cfg_path = g_scratch / "verify_config.json";
      {
        std::ofstream cfg(cfg_path);
        cfg << "{\n"
               "  \"eta\": 1.0, \"a\": 3.0, \"b\": 1.0, \"alpha\": 1.0, \"beta\": 5.0,\n"
               "  \"q\": 0.008, \"r\": 0.002, \"u_e\": -1.6, \"J_e\": 3.2,\n"
               "  \"k1\": 0.9, \"k2\": 6.5, \"c\": 1.0, \"gamma\": 0.4, \"delta\": 0.8,\n"
               "  \"memristance_kind\": \"quadratic\",\n"
               "  \"diffusion_scheme\": \"crank_nicolson\",\n"
               "  \"tolerance\": 1e-6,\n"
               "  \"grid\": {\"lengths\": [1.0], \"cells\": [256]},\n"
               "  \"stepper\": {\"dt\": 0.01, \"t_end\": 3000.0, \"monitor_stride\": 20},\n"
               "  \"ensemble\": {\"n_runs\": 8, \"seed\": 20260814,\n"
               "                 \"radius\": 3.1622776601683795},\n"
               "  \"ode_check\": {\"dt\": 1e-3, \"t_end\": 100.0, \"tol\": 1e-3,\n"
               "                  \"scheme\": \"crank_nicolson\"},\n"
               "  \"outputs\": {\"report\": \"report.json\"}\n"
               "}\n";
        if (!cfg) throw std::runtime_error("cannot write " + cfg_path.string());
      }

      const std::string cmd = "\"" + g_cli + "\" verify --config \"" + cfg_path.string() +
                              "\" --out-dir \"" + g_scratch.string() + "\" > \"" +
                              (g_scratch / "verify_stdout.txt").string() + "\" 2>&1";
      sr.exit_status = std::system(cmd.c_str());

      std::ifstream rep(g_scratch / "report.json");
      if (!rep) throw std::runtime_error("verifier wrote no report.json");
      rep >> sr.report;

      // First ensemble member, re-integrated here so the certificate
      // inequalities can be swept over raw monitor rows.
      const ModelParameters p;
      const Grid grid = make_line(1.0, 256);
      StepperConfig cfg;
      cfg.dt = 0.01;
      cfg.t_end = 3000.0;
      cfg.monitor_stride = 20;
      cfg.snapshot_after = 2400.0;
      cfg.snapshot_stride = 1875;
      const State s0 = sample_smooth_state(grid, kSeed, kRadius);
      Trajectory traj = simulate(State(s0), cfg, p, grid);
      sr.member0 = std::move(traj.monitor);
      sr.tail0 = std::move(traj.snapshots);

      sr.eb = energy_constants(p, 1.0);
      sr.lb = l4_bound(p, 1.0, kRadius, 1.0);
      sr.ab = attractor_region(p, 1.0, 1.0);
      sr.t0_pred = absorbing_time(p, kRadius * kRadius);
    } catch (const std::exception& e) {
      sr.error = e.what();
    }
    return sr;
  }();
  return run;
}

const nlohmann::json* find_check(const nlohmann::json& report, const std::string& name) {
  if (!report.contains("checks")) return nullptr;
  for (const auto& check : report.at("checks")) {
    if (check.at("name") == name) return &check;
  }
  return nullptr;
}

double composite_norm_sq(const MonitorRow& row, double c1) {
  const double v2 = row.l2_v * row.l2_v;
  const double w2 = row.l2_w * row.l2_w;
  const double r2 = row.l2_rho * row.l2_rho;
  return std::max(0.0, (row.energy - v2 - w2 - r2) / c1) + v2 + w2 + r2;
}

// First time from which value stays below threshold through the final row.
std::optional<double> entry_below(const MonitorSeries& m, double threshold,
                                  const std::function<double(const MonitorRow&)>& value) {
  std::optional<double> entry;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (value(*it) >= threshold) break;
    entry = it->time;
  }
  return entry;
}

// --- the ten checks ----------------------------------------------------------

Outcome check_01_bound_formulas() {
  const ModelParameters p;
  const double b_norm = std::sqrt(10.0);
  const BoundSet bs = compute_bounds(p, 1.0, b_norm, 1.0, 1.0);
  if (bs.energy.C1 != 30.0) return {false, "C1 = " + num(bs.energy.C1) + ", want exactly 30"};
  if (bs.energy.lambda != 0.001) {
    return {false, "lambda = " + num(bs.energy.lambda) + ", want exactly 0.001"};
  }
  const oracle::Constants ora = oracle::evaluate(p, 1.0L, b_norm, 1.0L, 1.0L);
  const std::pair<const char*, std::pair<double, long double>> pairs[] = {
      {"C2", {bs.energy.C2, ora.C2}},     {"C3", {bs.energy.C3, ora.C3}},
      {"M", {bs.energy.M, ora.M}},        {"K", {bs.energy.K, ora.K}},
      {"Q", {bs.l4.Q, ora.Q}},            {"L", {bs.l4.L, ora.L}},
      {"G", {bs.attractor.G, ora.G}},     {"Phi", {bs.attractor.Phi, ora.Phi}},
      {"D", {bs.attractor.D, ora.D}},     {"H2", {bs.attractor.H2_bound, ora.H2}},
  };
  double worst = 0.0;
  const char* worst_name = "";
  for (const auto& [name, vals] : pairs) {
    const double err = rel_err(vals.first, vals.second);
    if (err > worst) {
      worst = err;
      worst_name = name;
    }
  }
  if (worst > 1e-12) {
    return {false, std::string("worst oracle mismatch ") + worst_name + " rel " + num(worst)};
  }
  return {true, "C1 = 30 and lambda = 0.001 exact; worst oracle rel err " + num(worst)};
}

Outcome check_02_identities() {
  std::mt19937_64 engine(7);
  const auto uniform = [&engine](double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(engine() >> 11) * 0x1.0p-53);
  };
  double worst = 0.0;
  for (int draw = 0; draw < 150; ++draw) {
    ModelParameters p;
    p.eta = uniform(0.1, 3.0);
    p.a = uniform(0.2, 4.0);
    p.b = uniform(0.3, 5.0);
    p.alpha = uniform(0.1, 3.0);
    p.beta = uniform(0.2, 6.0);
    p.q = uniform(0.01, 2.0);
    p.r = uniform(0.05, 2.0);
    p.u_e = uniform(-3.0, 3.0);
    p.J_e = uniform(0.1, 4.0);
    p.k1 = uniform(0.05, 2.0);
    p.k2 = uniform(0.2, 7.0);
    p.c = uniform(-2.0, 2.0);
    p.gamma = uniform(-1.5, 1.5);
    p.delta = uniform(0.1, 2.0);
    const double omega = uniform(0.2, 5.0);
    const double b_norm = uniform(0.1, 6.0);

    const EnergyBounds eb = energy_constants(p, omega);
    worst = std::max(worst, rel_err(eb.C1 * p.b, static_cast<long double>(p.beta) * p.beta + 5.0L));
    worst = std::max(worst, rel_err(eb.lambda * eb.M,
                                    static_cast<long double>(eb.C3) +
                                        static_cast<long double>(eb.C1) * eb.C1 / 4.0L));

    const L4Bounds lb = l4_bound(p, omega, b_norm, 1.0);
    const double mem = 16.0 * p.k1 * p.k1 * p.k1 / (p.b * p.b) *
                       std::pow(std::abs(p.c) + p.gamma * p.gamma / p.delta, 3.0);
    const double forcing = lb.C_ab + lb.C_b * (eb.K + p.J_e * p.J_e) + mem;
    const double l_expected = 2.0 / p.b * lb.Q + 4.0 / p.b * omega * forcing;
    worst = std::max(worst, rel_err(lb.L, static_cast<long double>(l_expected)));
  }
  if (worst > 1e-12) return {false, "worst identity rel err " + num(worst)};
  return {true, "150 draws, worst identity rel err " + num(worst)};
}

Outcome check_03_operator_suite() {
  // Constant fields have exactly zero image.
  for (const Grid& g : {make_line(1.0, 64), make_grid({1.0, 1.5}, {16, 24})}) {
    Field f(g.size(), 2.75);
    for (double x : laplacian_neumann(f, g)) {
      if (x != 0.0) return {false, "nonzero image of a constant field"};
    }
  }

  // Zero total flux for smooth data of unit scale.
  const Grid g1 = make_line(1.0, 128);
  Field f(g1.size());
  for (long i = 0; i < g1.cells[0]; ++i) {
    const double x = g1.center(0, i);
    f[static_cast<std::size_t>(i)] =
        std::cos(std::numbers::pi * x) + 0.3 * std::cos(3.0 * std::numbers::pi * x);
  }
  const double flux = integral(laplacian_neumann(f, g1), g1);
  if (std::abs(flux) > 1e-12) return {false, "total flux " + num(flux) + " exceeds 1e-12"};

  // Second-order eigenfunction convergence across 64 -> 128 -> 256.
  std::vector<double> errs;
  for (int n : {64, 128, 256}) {
    const Grid g = make_line(1.0, n);
    Field c(g.size());
    for (long i = 0; i < n; ++i) {
      c[static_cast<std::size_t>(i)] = std::cos(std::numbers::pi * g.center(0, i));
    }
    const Field lap = laplacian_neumann(c, g);
    const double ev = std::numbers::pi * std::numbers::pi;
    double err = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) err = std::max(err, std::abs(lap[i] + ev * c[i]));
    errs.push_back(err);
  }
  const double s1 = std::log2(errs[0] / errs[1]);
  const double s2 = std::log2(errs[1] / errs[2]);
  if (std::abs(s1 - 2.0) > 0.1 || std::abs(s2 - 2.0) > 0.1) {
    return {false, "refinement orders " + num(s1) + ", " + num(s2) + " not within 2.0 +- 0.1"};
  }
  return {true, "flux " + num(flux) + ", refinement orders " + num(s1) + ", " + num(s2)};
}

Outcome check_04_ode_equivalence() {
  const ModelParameters p;
  const Grid g = make_line(1.0, 8);
  const CheckRecord rec = check_ode_equivalence(PointState{}, 1e-3, 100.0,
                                                DiffusionScheme::CrankNicolson, p, g, 1e-3, 1e-5);
  if (!rec.pass) {
    return {false, "max deviation " + num(rec.observed) + " over 1e-3 at dt = 1e-3"};
  }

  std::vector<double> xs, ys;
  for (double dt : {4e-3, 2e-3, 1e-3, 5e-4}) {
    const CheckRecord r = check_ode_equivalence(PointState{}, dt, 10.0,
                                                DiffusionScheme::CrankNicolson, p, g, 1.0, 1e-5);
    xs.push_back(std::log(dt));
    ys.push_back(std::log(r.observed));
  }
  const double slope = lsq_slope(xs, ys);
  if (std::abs(slope - 2.0) > 0.15) {
    return {false, "halving slope " + num(slope) + " not within 2.0 +- 0.15"};
  }
  return {true, "max deviation " + num(rec.observed) + " at dt = 1e-3, halving slope " +
                    num(slope)};
}

Outcome check_05_gronwall() {
  const SharedRun& sr = shared_run();
  if (!sr.error.empty()) return {false, sr.error};
  const nlohmann::json* rec = find_check(sr.report, "gronwall_energy");
  if (!rec) return {false, "gronwall_energy missing from the report"};
  if (!rec->at("pass").get<bool>()) return {false, "ensemble report marks the decay check failed"};

  // Independent sweep over the first member's rows.
  const double e0 = sr.member0.front().energy;
  const double floor = sr.eb.M * sr.eb.omega;
  const double slack = kTol * (e0 + floor);
  double worst = std::numeric_limits<double>::infinity();
  for (const MonitorRow& row : sr.member0) {
    const double bound = std::exp(-sr.eb.lambda * row.time) * e0 + floor;
    worst = std::min(worst, bound - row.energy);
    if (row.energy > bound + slack) {
      return {false, "row at t = " + num(row.time) + " exceeds the decay envelope"};
    }
  }
  return {true, "8 members pass; member-0 sweep of " + std::to_string(sr.member0.size()) +
                    " rows, min margin " + num(worst)};
}

Outcome check_06_absorbing() {
  const SharedRun& sr = shared_run();
  if (!sr.error.empty()) return {false, sr.error};
  if (!WIFEXITED(sr.exit_status) || WEXITSTATUS(sr.exit_status) != 0) {
    return {false, "verifier exit status " + std::to_string(sr.exit_status) + ", want 0"};
  }
  const nlohmann::json* rec = find_check(sr.report, "absorbing_entry");
  if (!rec) return {false, "absorbing_entry missing from the report"};
  if (!rec->at("pass").get<bool>()) return {false, "ensemble report marks the entry check failed"};
  if (rec->at("entry_time").is_null()) return {false, "no entry time recorded"};
  const double entry = rec->at("entry_time").get<double>();
  const double predicted = rec->at("constants_used").at("predicted_entry_time").get<double>();
  if (entry > predicted) {
    return {false, "entry at t = " + num(entry) + " after the predicted " + num(predicted)};
  }

  const double threshold = sr.eb.K * (1.0 + kTol);
  const auto entry0 = entry_below(sr.member0, threshold, [&](const MonitorRow& row) {
    return composite_norm_sq(row, sr.eb.C1);
  });
  if (!entry0) return {false, "member 0 never settles inside the absorbing ball"};
  if (*entry0 > sr.t0_pred) {
    return {false, "member-0 entry " + num(*entry0) + " after predicted " + num(sr.t0_pred)};
  }
  return {true, "exit 0; slowest entry t = " + num(entry) + " <= predicted " + num(predicted)};
}

Outcome check_07_quartic() {
  const SharedRun& sr = shared_run();
  if (!sr.error.empty()) return {false, sr.error};
  const nlohmann::json* rec = find_check(sr.report, "quartic_absorbing");
  if (!rec) return {false, "quartic_absorbing missing from the report"};
  if (!rec->at("pass").get<bool>()) {
    return {false, "ensemble report marks the quartic check failed"};
  }

  const double threshold = sr.lb.Q * (1.0 + kTol);
  const auto entry = entry_below(sr.member0, threshold,
                                 [](const MonitorRow& row) { return row.l4_u4; });
  if (!entry) return {false, "member 0 ends above the quartic level"};
  double sup_after = 0.0;
  for (const MonitorRow& row : sr.member0) {
    if (row.time >= *entry) sup_after = std::max(sup_after, row.l4_u4);
  }
  return {true, "member-0 entry t = " + num(*entry) + ", post-transient sup " + num(sup_after) +
                    " < Q = " + num(sr.lb.Q)};
}

Outcome check_08_attractor_region() {
  const SharedRun& sr = shared_run();
  if (!sr.error.empty()) return {false, sr.error};
  const nlohmann::json* rec = find_check(sr.report, "attractor_region");
  if (!rec) return {false, "attractor_region missing from the report"};
  if (!rec->at("pass").get<bool>()) {
    return {false, "ensemble report marks the region check failed"};
  }
  const nlohmann::json* quartic = find_check(sr.report, "quartic_absorbing");
  if (!quartic) return {false, "quartic_absorbing missing from the report"};
  if (rec->at("constants_used").at("C_emb").get<double>() != 1.0 ||
      quartic->at("constants_used").at("C_hat").get<double>() != 1.0) {
    return {false, "report does not record C_hat = C_emb = 1"};
  }

  const Grid grid = make_line(1.0, 256);
  const ModelParameters p;
  double sup_h1 = 0.0, sup_amp = 0.0, sup_h2 = 0.0;
  for (const State& s : sr.tail0) {
    const double h1 = h1_seminorm(s.u, grid);
    sup_h1 = std::max(sup_h1, lp_integral(s.u, grid, 2) + h1 * h1);
    sup_amp = std::max({sup_amp, linf_norm(s.v), linf_norm(s.w), linf_norm(s.rho)});
    sup_h2 = std::max(sup_h2, h2_surrogate_norm(s.u, grid, p.eta));
  }
  if (sr.tail0.empty()) return {false, "no late-time states captured for member 0"};
  if (sup_h1 > sr.ab.R * (1.0 + kTol)) {
    return {false, "first-order level " + num(sup_h1) + " exceeds R = " + num(sr.ab.R)};
  }
  if (sup_amp > sr.ab.G * (1.0 + kTol)) {
    return {false, "amplitude " + num(sup_amp) + " exceeds G = " + num(sr.ab.G)};
  }
  if (sup_h2 > sr.ab.H2_bound * (1.0 + kTol)) {
    return {false, "second-order level " + num(sup_h2) + " exceeds " + num(sr.ab.H2_bound)};
  }
  return {true, std::to_string(sr.tail0.size()) + " tail states inside the region; C_hat = " +
                    "C_emb = 1 recorded"};
}

Outcome check_09_conservation_and_determinism() {
  // Pure diffusion: mass conserved, squared norm nonincreasing.
  ModelParameters p;
  p.a = 0.0;
  p.b = 0.0;
  p.alpha = 0.0;
  p.beta = 0.0;
  p.q = 0.0;
  p.J_e = 0.0;
  p.k1 = 0.0;
  const Grid g = make_line(1.0, 64);
  for (double dt : {0.1, 1.0, 10.0}) {
    for (DiffusionScheme scheme : {DiffusionScheme::BackwardEuler,
                                   DiffusionScheme::CrankNicolson}) {
      StepperConfig cfg;
      cfg.dt = dt;
      cfg.t_end = 50.0 * dt;
      cfg.scheme = scheme;
      State s = sample_smooth_state(g, 5150, 2.0);
      s.v.assign(s.v.size(), 0.0);
      s.w.assign(s.w.size(), 0.0);
      s.rho.assign(s.rho.size(), 0.0);
      const double mass0 = integral(s.u, g);
      double l2_prev = l2_norm(s.u, g);
      for (int k = 0; k < 50; ++k) {
        s = step(s, cfg, p, g);
        const double l2 = l2_norm(s.u, g);
        if (l2 > l2_prev * (1.0 + 1e-12)) {
          return {false, "squared norm grew at dt = " + num(dt)};
        }
        l2_prev = l2;
      }
      const double drift = std::abs(integral(s.u, g) - mass0);
      if (drift > 1e-12 * std::max(1.0, std::abs(mass0))) {
        return {false, "mass drift " + num(drift) + " at dt = " + num(dt)};
      }
    }
  }

  // Snapshot round-trip, compared byte for byte through a rewrite.
  const Grid g2 = make_grid({1.0, 2.0}, {12, 10});
  State snap_state = sample_smooth_state(g2, 31337, 1.5);
  snap_state.time = 17.5;
  const fs::path p1 = g_scratch / "roundtrip_a.bin";
  const fs::path p2 = g_scratch / "roundtrip_b.bin";
  write_snapshot(snap_state, g2, p1);
  const SnapshotData back = read_snapshot(p1);
  write_snapshot(back.state, back.grid, p2);
  const auto slurp = [](const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  if (slurp(p1) != slurp(p2)) return {false, "snapshot round-trip changed bytes"};

  // Fixed-seed ensembles serialize to identical reports.
  const ModelParameters defaults;
  const Grid g3 = make_line(1.0, 64);
  StepperConfig cfg;
  cfg.dt = 0.02;
  cfg.t_end = 200.0;
  cfg.monitor_stride = 25;
  EnsembleOptions opts;
  opts.n_runs = 2;
  opts.seed = 99;
  opts.radius = kRadius;
  const std::string r1 = report_json(run_ensemble(opts, cfg, defaults, g3));
  const std::string r2 = report_json(run_ensemble(opts, cfg, defaults, g3));
  if (r1 != r2) return {false, "fixed-seed ensemble reports differ"};
  return {true, "mass conserved, norms contract, snapshots and reports bit-identical"};
}

Outcome check_10_tanh_variant() {
  ModelParameters p;
  p.memristance_kind = MemristanceKind::Tanh;
  const Grid grid = make_line(1.0, 256);
  StepperConfig cfg;
  cfg.dt = 0.01;
  cfg.t_end = 3000.0;
  cfg.monitor_stride = 20;
  EnsembleOptions opts;
  opts.n_runs = 8;
  opts.seed = kSeed;
  opts.radius = kRadius;
  opts.tol = kTol;
  const VerificationReport report = run_ensemble(opts, cfg, p, grid);
  std::string failed;
  std::optional<double> entry;
  for (const char* name : {"gronwall_energy", "absorbing_entry", "quartic_absorbing"}) {
    const auto it = std::find_if(report.checks.begin(), report.checks.end(),
                                 [&](const CheckRecord& rec) { return rec.name == name; });
    if (it == report.checks.end() || !it->pass) {
      failed += std::string(" ") + name;
    } else if (it->name == "absorbing_entry") {
      entry = it->entry_time;
    }
  }
  if (!failed.empty()) return {false, "failed with bounded memristance:" + failed};
  return {true, "decay, entry, and quartic certificates hold; slowest entry t = " +
                    (entry ? num(*entry) : std::string("none"))};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-cli> [scratch-dir]\n", argv[0]);
    return 2;
  }
  g_cli = argv[1];
  g_scratch = (argc > 2) ? fs::path(argv[2]) : fs::current_path() / "acceptance_out";
  fs::create_directories(g_scratch);

  const std::pair<const char*, std::function<Outcome()>> checks[] = {
      {"closed-form constants match the independent oracle", check_01_bound_formulas},
      {"algebraic identities hold over random parameters", check_02_identities},
      {"discrete operator: zero flux and second-order accuracy", check_03_operator_suite},
      {"constant-data run tracks the pointwise reference", check_04_ode_equivalence},
      {"ensemble satisfies the exponential decay envelope", check_05_gronwall},
      {"ensemble enters the absorbing ball on schedule", check_06_absorbing},
      {"quartic level absorbs the ensemble", check_07_quartic},
      {"late-time states stay in the bounded region", check_08_attractor_region},
      {"conservation, stability, and bit-exact reproducibility", check_09_conservation_and_determinism},
      {"bounded memristance variant passes unchanged", check_10_tanh_variant},
  };

  int failures = 0;
  int index = 0;
  for (const auto& [label, fn] : checks) {
    ++index;
    Outcome outcome;
    try {
      outcome = fn();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("[%2d] %-55s %s  %s\n", index, label, outcome.pass ? "PASS" : "FAIL",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d/10 passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}
