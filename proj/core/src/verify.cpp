#include <mhr/verify.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mhr {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.pass; });
}

namespace {

void require_rows(const MonitorSeries& m, const char* who) {
  if (m.empty()) throw std::invalid_argument(std::string(who) + ": empty monitor series");
}

// Squared composite norm |g|^2 recovered from the monitor columns; the energy
// column stores C1|u|^2 + |v|^2 + |w|^2 + |rho|^2.
double composite_norm_sq(const MonitorRow& row, double c1) {
  const double v2 = row.l2_v * row.l2_v;
  const double w2 = row.l2_w * row.l2_w;
  const double rho2 = row.l2_rho * row.l2_rho;
  const double u2 = std::max(0.0, (row.energy - v2 - w2 - rho2) / c1);
  return u2 + v2 + w2 + rho2;
}

// Earliest recorded time from which value(row) < threshold holds for every
// later row; empty when even the final row violates.
template <typename ValueFn>
std::optional<double> entry_time_below(const MonitorSeries& m, double threshold, ValueFn value) {
  std::optional<double> entry;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (value(*it) >= threshold) break;
    entry = it->time;
  }
  return entry;
}

}  // namespace

CheckRecord check_gronwall(const MonitorSeries& m, const EnergyBounds& eb, double tol) {
  require_rows(m, "check_gronwall");
  CheckRecord rec;
  rec.name = "gronwall_energy";
  rec.tol = tol;

  const double e0 = m.front().energy;
  const double floor = eb.M * eb.omega;
  const double slack = tol * (e0 + floor);

  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_pred = 0.0;
  double worst_obs = 0.0;
  bool ok = true;
  for (const MonitorRow& row : m) {
    const double t = row.time - m.front().time;
    const double bound = std::exp(-eb.lambda * t) * e0 + floor;
    const double margin = bound - row.energy;
    if (margin < worst_margin) {
      worst_margin = margin;
      worst_pred = bound;
      worst_obs = row.energy;
    }
    if (row.energy > bound + slack) ok = false;
  }
  rec.predicted = worst_pred;
  rec.observed = worst_obs;
  rec.margin = worst_margin;
  rec.pass = ok;
  rec.constants = {{"lambda", eb.lambda}, {"M", eb.M}, {"omega", eb.omega}, {"E0", e0}};
  return rec;
}

CheckRecord check_absorbing(const MonitorSeries& m, const EnergyBounds& eb,
                            double predicted_entry_time, double tol) {
  require_rows(m, "check_absorbing");
  CheckRecord rec;
  rec.name = "absorbing_entry";
  rec.tol = tol;
  rec.predicted = eb.K;
  rec.constants = {{"K", eb.K}, {"C1", eb.C1}, {"predicted_entry_time", predicted_entry_time}};

  const double threshold = eb.K * (1.0 + tol);
  const auto norm_sq = [&](const MonitorRow& row) { return composite_norm_sq(row, eb.C1); };
  const std::optional<double> entry = entry_time_below(m, threshold, norm_sq);

  if (!entry) {
    // Never settles inside within the recorded horizon.
    const double t_final = m.back().time;
    if (t_final <= predicted_entry_time) {
      throw std::runtime_error(
          "check_absorbing: series ends before the predicted entry time and is still outside "
          "the absorbing ball; extend the run to decide the certificate");
    }
    rec.observed = norm_sq(m.back());
    rec.margin = eb.K - rec.observed;
    rec.pass = false;
    return rec;
  }

  rec.entry_time = *entry;
  double sup_after = 0.0;
  for (const MonitorRow& row : m) {
    if (row.time >= *entry) sup_after = std::max(sup_after, norm_sq(row));
  }
  rec.observed = sup_after;
  rec.margin = eb.K - sup_after;
  rec.pass = *entry <= predicted_entry_time;
  return rec;
}

CheckRecord check_l4(const MonitorSeries& m, const L4Bounds& lb, double tol) {
  require_rows(m, "check_l4");
  CheckRecord rec;
  rec.name = "quartic_absorbing";
  rec.tol = tol;
  rec.predicted = lb.Q;
  rec.constants = {{"Q", lb.Q}, {"C_hat", lb.C_hat}, {"b_norm", lb.b_norm}};

  const double threshold = lb.Q * (1.0 + tol);
  const auto value = [](const MonitorRow& row) { return row.l4_u4; };
  const std::optional<double> entry = entry_time_below(m, threshold, value);

  if (!entry) {
    rec.observed = m.back().l4_u4;
    rec.margin = lb.Q - rec.observed;
    rec.pass = false;
    return rec;
  }

  rec.entry_time = *entry;
  double sup_after = 0.0;
  for (const MonitorRow& row : m) {
    if (row.time >= *entry) sup_after = std::max(sup_after, row.l4_u4);
  }
  rec.observed = sup_after;
  rec.margin = lb.Q - sup_after;
  rec.pass = true;
  return rec;
}

CheckRecord check_attractor_region(std::span<const State> tail, const Grid& g,
                                   const ModelParameters& p, const EnergyBounds& eb,
                                   const AttractorBounds& ab, double tol) {
  if (tail.empty()) {
    throw std::invalid_argument("check_attractor_region: no late-time states supplied");
  }
  CheckRecord rec;
  rec.name = "attractor_region";
  rec.tol = tol;
  rec.constants = {{"R", ab.R},           {"G", ab.G},       {"H2_bound", ab.H2_bound},
                   {"C_emb", ab.C_emb},   {"Phi", ab.Phi},   {"D", ab.D},
                   {"K", eb.K}};

  double sup_h1 = 0.0;
  double sup_amp = 0.0;
  double sup_h2 = 0.0;
  for (const State& s : tail) {
    const double h1 = h1_seminorm(s.u, g);
    sup_h1 = std::max(sup_h1, lp_integral(s.u, g, 2) + h1 * h1);
    sup_amp = std::max({sup_amp, linf_norm(s.v), linf_norm(s.w), linf_norm(s.rho)});
    sup_h2 = std::max(sup_h2, h2_surrogate_norm(s.u, g, p.eta));
  }

  struct Sub {
    const char* name;
    double predicted;
    double observed;
  };
  const Sub subs[] = {
      {"h1_radius", ab.R, sup_h1},
      {"amplitude_cap", ab.G, sup_amp},
      {"h2_surrogate", ab.H2_bound, sup_h2},
  };

  bool ok = true;
  double worst_ratio = -std::numeric_limits<double>::infinity();
  const Sub* worst = &subs[0];
  for (const Sub& sub : subs) {
    const double ratio = sub.observed / sub.predicted;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = &sub;
    }
    if (sub.observed > sub.predicted * (1.0 + tol)) ok = false;
  }
  rec.predicted = worst->predicted;
  rec.observed = worst->observed;
  rec.margin = worst->predicted - worst->observed;
  rec.pass = ok;
  rec.constants.emplace_back(std::string("worst_is_") + worst->name, worst_ratio);
  return rec;
}

CheckRecord check_ode_equivalence(const PointState& s0, double dt, double t_end,
                                  DiffusionScheme scheme, const ModelParameters& p, const Grid& g,
                                  double tol, double oracle_dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("check_ode_equivalence: dt must be positive");
  int ratio = 100;
  if (oracle_dt > 0.0) {
    ratio = std::max(1, static_cast<int>(std::lround(dt / oracle_dt)));
  }

  StepperConfig cfg;
  cfg.dt = dt;
  cfg.t_end = t_end;
  cfg.scheme = scheme;
  cfg.monitor_stride = std::numeric_limits<int>::max();

  State s = make_state(g);
  std::fill(s.u.begin(), s.u.end(), s0.u);
  std::fill(s.v.begin(), s.v.end(), s0.v);
  std::fill(s.w.begin(), s.w.end(), s0.w);
  std::fill(s.rho.begin(), s.rho.end(), s0.rho);

  const auto reference = simulate_homogeneous(s0, dt / ratio, t_end, p, ratio);

  CheckRecord rec;
  rec.name = "homogeneous_equivalence";
  rec.tol = tol;
  rec.predicted = tol;
  rec.constants = {{"dt", dt}, {"oracle_dt", dt / ratio}, {"t_end", t_end}};

  const auto deviation = [](const Field& f, double ref) {
    double d = 0.0;
    for (double x : f) d = std::max(d, std::abs(x - ref));
    return d;
  };

  double worst = 0.0;
  std::size_t next = 1;  // reference[0] is the shared initial state
  const long steps = std::lround(t_end / dt);
  for (long k = 1; k <= steps; ++k) {
    s = step(s, cfg, p, g);
    if (next < reference.size()) {
      const PointState& ref = reference[next].state;
      ++next;
      worst = std::max({worst, deviation(s.u, ref.u), deviation(s.v, ref.v),
                        deviation(s.w, ref.w), deviation(s.rho, ref.rho)});
    }
  }
  rec.observed = worst;
  rec.margin = tol - worst;
  rec.pass = worst <= tol;
  return rec;
}

State sample_smooth_state(const Grid& g, std::mt19937_64& engine, double radius) {
  if (radius < 0.0) {
    throw std::invalid_argument("sample_smooth_state: radius must be nonnegative");
  }
  const auto uniform01 = [&engine] {
    // Top 53 bits of the raw draw; identical on every standard-conforming
    // implementation, unlike std::uniform_real_distribution.
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
  };

  constexpr int kModes = 4;  // cosine modes 0..3 per axis
  State s = make_state(g);
  Field* fields[] = {&s.u, &s.v, &s.w, &s.rho};

  const auto [c0, c1, c2] = g.cells;
  const auto [s0, s1, s2] = g.strides();
  for (Field* f : fields) {
    int modes[3] = {1, 1, 1};
    for (int a = 0; a < g.dim; ++a) modes[a] = kModes;
    for (int m0 = 0; m0 < modes[0]; ++m0) {
      for (int m1 = 0; m1 < modes[1]; ++m1) {
        for (int m2 = 0; m2 < modes[2]; ++m2) {
          const double coeff = 2.0 * uniform01() - 1.0;
          for (long i0 = 0; i0 < c0; ++i0) {
            const double f0 =
                (g.dim > 0) ? std::cos(m0 * std::numbers::pi * g.center(0, i0) / g.lengths[0])
                            : 1.0;
            for (long i1 = 0; i1 < c1; ++i1) {
              const double f1 =
                  (g.dim > 1) ? std::cos(m1 * std::numbers::pi * g.center(1, i1) / g.lengths[1])
                              : 1.0;
              for (long i2 = 0; i2 < c2; ++i2) {
                const double f2 =
                    (g.dim > 2)
                        ? std::cos(m2 * std::numbers::pi * g.center(2, i2) / g.lengths[2])
                        : 1.0;
                (*f)[i0 * s0 + i1 * s1 + i2 * s2] += coeff * f0 * f1 * f2;
              }
            }
          }
        }
      }
    }
  }

  // Norm radius * sqrt(xi) spreads the ensemble through the ball instead of
  // piling it onto the boundary sphere.
  const double xi = uniform01();
  const double target = radius * std::sqrt(1.0 - xi);  // xi in [0,1) so target > 0
  const double norm = std::sqrt(lp_integral(s.u, g, 2) + lp_integral(s.v, g, 2) +
                                lp_integral(s.w, g, 2) + lp_integral(s.rho, g, 2));
  const double scale = (norm > 0.0) ? target / norm : 0.0;
  for (Field* f : fields) {
    for (double& x : *f) x *= scale;
  }
  return s;
}

State sample_smooth_state(const Grid& g, std::uint64_t seed, double radius) {
  std::mt19937_64 engine(seed);
  return sample_smooth_state(g, engine, radius);
}

VerificationReport run_ensemble(const EnsembleOptions& opts, const StepperConfig& cfg,
                                const ModelParameters& p, const Grid& g) {
  if (opts.n_runs < 1) throw std::invalid_argument("run_ensemble: n_runs must be at least 1");

  const double omega = g.measure();
  const EnergyBounds eb = energy_constants(p, omega);
  const L4Bounds lb = l4_bound(p, omega, opts.radius, opts.c_hat);
  const AttractorBounds ab = attractor_region(p, omega, opts.c_emb);
  const double t0_pred = absorbing_time(p, opts.radius * opts.radius);

  // Late-time window for the attractor check: past the predicted transients
  // but never past the end of the run, so the final state always counts.
  StepperConfig run_cfg = cfg;
  const double cutoff =
      std::min(cfg.t_end, std::max(0.8 * cfg.t_end, 3.0 / eb.lambda));
  run_cfg.snapshot_after = cutoff;
  if (run_cfg.snapshot_stride <= 0) {
    const double tail_steps = std::max(1.0, (cfg.t_end - cutoff) / cfg.dt);
    run_cfg.snapshot_stride = std::max(1, static_cast<int>(tail_steps / 32.0));
  }

  std::mt19937_64 engine(opts.seed);
  VerificationReport report;
  std::vector<CheckRecord> worst(4);
  std::vector<int> worst_run(4, 0);
  std::array<std::optional<double>, 4> slowest_entry;
  std::array<bool, 4> all_pass{true, true, true, true};
  bool first = true;

  for (int run = 0; run < opts.n_runs; ++run) {
    State s0 = sample_smooth_state(g, engine, opts.radius);
    const Trajectory traj = simulate(std::move(s0), run_cfg, p, g);

    CheckRecord recs[4] = {
        check_gronwall(traj.monitor, eb, opts.tol),
        check_absorbing(traj.monitor, eb, t0_pred, opts.tol),
        check_l4(traj.monitor, lb, opts.tol),
        check_attractor_region(traj.snapshots, g, p, eb, ab, opts.tol),
    };
    for (int i = 0; i < 4; ++i) {
      all_pass[i] = all_pass[i] && recs[i].pass;
      if (recs[i].entry_time &&
          (!slowest_entry[i] || *recs[i].entry_time > *slowest_entry[i])) {
        slowest_entry[i] = recs[i].entry_time;
      }
      // Keep the member with the least headroom.  Failing members outrank
      // passing ones regardless of raw margin (entry failures can leave the
      // margin positive), and once a failure is held a passing run cannot
      // displace it.
      const bool same_class = recs[i].pass == worst[i].pass;
      const bool tighter = first || (!recs[i].pass && worst[i].pass) ||
                           (same_class && recs[i].margin < worst[i].margin);
      if (tighter) {
        worst[i] = std::move(recs[i]);
        worst_run[i] = run;
      }
    }
    first = false;
  }

  for (int i = 0; i < 4; ++i) {
    worst[i].pass = all_pass[i];
    if (slowest_entry[i]) worst[i].entry_time = slowest_entry[i];
    worst[i].constants.emplace_back("worst_run", static_cast<double>(worst_run[i]));
    worst[i].constants.emplace_back("n_runs", static_cast<double>(opts.n_runs));
    worst[i].constants.emplace_back("radius", opts.radius);
    report.checks.push_back(std::move(worst[i]));
  }
  return report;
}

}  // namespace mhr
