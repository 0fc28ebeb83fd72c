#include <mhr/integrator.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include <mhr/bounds.hpp>

namespace mhr {

BlowupError::BlowupError(double time, std::string component, double value)
    : std::runtime_error([&] {
        char buf[160];
        std::snprintf(buf, sizeof buf, "solution blew up at t=%.6g: |%s| reached %.6g",
                      time, component.c_str(), value);
        return std::string(buf);
      }()),
      time_(time),
      component_(std::move(component)),
      value_(value) {}

namespace {

// Precomputed Thomas factorization of (I - m * D2) along one axis, where D2
// is the mirror-ghost second difference.  Every grid line along the axis
// shares the same matrix, so the elimination coefficients are reused.
struct AxisSolver {
  int axis = 0;
  long n = 0;
  long stride = 0;
  double m = 0.0;
  std::vector<double> inv_den;  // 1 / (d_i + m * cp_{i-1})
  std::vector<double> cp;       // modified superdiagonal

  void build(const Grid& g, int ax, double m_in) {
    axis = ax;
    n = g.cells[ax];
    stride = g.strides()[ax];
    m = m_in;
    inv_den.resize(n);
    cp.resize(n);
    // Row sums stay 1: diagonal 1 + m at the walls, 1 + 2m inside.
    double den = 1.0 + m;
    inv_den[0] = 1.0 / den;
    cp[0] = -m * inv_den[0];
    for (long i = 1; i < n; ++i) {
      const double diag = (i + 1 < n) ? 1.0 + 2.0 * m : 1.0 + m;
      den = diag + m * cp[i - 1];
      inv_den[i] = 1.0 / den;
      cp[i] = -m * inv_den[i];
    }
  }

  // Solves in place for every line of the field along `axis`.
  void solve(Field& x, const Grid& g, std::vector<double>& line) const {
    const auto [c0, c1, c2] = g.cells;
    const auto strides = g.strides();
    const long o1_extent = (axis == 0) ? c1 : c0;
    const long o2_extent = (axis == 2) ? c1 : c2;
    const long o1_stride = (axis == 0) ? strides[1] : strides[0];
    const long o2_stride = (axis == 2) ? strides[1] : strides[2];
    line.resize(n);
    for (long o1 = 0; o1 < o1_extent; ++o1) {
      for (long o2 = 0; o2 < o2_extent; ++o2) {
        const long base = o1 * o1_stride + o2 * o2_stride;
        double* buf = line.data();
        double sum_in = x[base];
        // Forward elimination with the cached coefficients.
        buf[0] = x[base] * inv_den[0];
        for (long i = 1; i < n; ++i) {
          sum_in += x[base + i * stride];
          buf[i] = (x[base + i * stride] + m * buf[i - 1]) * inv_den[i];
        }
        // Back substitution.
        x[base + (n - 1) * stride] = buf[n - 1];
        for (long i = n - 2; i >= 0; --i) {
          x[base + i * stride] = buf[i] - cp[i] * x[base + (i + 1) * stride];
        }
        // Columns of I - m*D2 sum to 1, so the exact solve keeps each line
        // sum; restore it to stop rounding drift in the mass integral.
        double sum_out = 0.0;
        for (long i = 0; i < n; ++i) sum_out += x[base + i * stride];
        const double fix = (sum_in - sum_out) / static_cast<double>(n);
        for (long i = 0; i < n; ++i) x[base + i * stride] += fix;
      }
    }
  }
};

// Exact integrating-factor update for dx/dt = -rate*x + forcing with the
// forcing frozen over the substep: x' = decay*x + weight*forcing.
struct DecayCoeffs {
  double decay = 1.0;
  double weight = 0.0;

  void build(double rate, double dt) {
    if (rate == 0.0) {
      decay = 1.0;
      weight = dt;
    } else {
      decay = std::exp(-rate * dt);
      weight = -std::expm1(-rate * dt) / rate;
    }
  }
};

struct Workspace {
  std::vector<AxisSolver> solvers;  // factors of (I - theta*dt*eta*D2_axis)
  double theta = 1.0;               // 1: backward Euler, 1/2: half-step solve
  DecayCoeffs v_half, w_half, rho_half;
  DecayCoeffs v_full, w_full, rho_full;
  Field u_next, u_half, v_half_f, w_half_f, rho_half_f;
  std::vector<double> line;

  void build(const StepperConfig& cfg, const ModelParameters& p, const Grid& g) {
    theta = (cfg.scheme == DiffusionScheme::CrankNicolson) ? 0.5 : 1.0;
    solvers.clear();
    for (int a = 0; a < g.dim; ++a) {
      if (g.cells[a] < 2) continue;
      const double h = g.spacing(a);
      AxisSolver s;
      s.build(g, a, theta * cfg.dt * p.eta / (h * h));
      solvers.push_back(std::move(s));
    }
    const double dt = cfg.dt;
    v_half.build(1.0, dt / 2.0);
    w_half.build(p.r, dt / 2.0);
    rho_half.build(p.k2, dt / 2.0);
    v_full.build(1.0, dt);
    w_full.build(p.r, dt);
    rho_full.build(p.k2, dt);
    const std::size_t n = g.size();
    u_next.resize(n);
    u_half.resize(n);
    v_half_f.resize(n);
    w_half_f.resize(n);
    rho_half_f.resize(n);
  }
};

double reaction_u(double u, double v, double w, double rho, const ModelParameters& p) {
  const double u2 = u * u;
  double phi;
  if (p.memristance_kind == MemristanceKind::Tanh) {
    phi = std::tanh(rho);
  } else {
    phi = p.c + p.gamma * rho + p.delta * rho * rho;
  }
  return p.a * u2 - p.b * u2 * u + v - w + p.J_e - p.k1 * phi * u;
}

void solve_diffusion(Field& x, const Grid& g, Workspace& ws) {
  for (const AxisSolver& s : ws.solvers) s.solve(x, g, ws.line);
}

void check_finite(const State& s, double t, double threshold) {
  const struct {
    const char* name;
    const Field* f;
  } fields[] = {{"u", &s.u}, {"v", &s.v}, {"w", &s.w}, {"rho", &s.rho}};
  for (const auto& [name, f] : fields) {
    for (double x : *f) {
      if (!std::isfinite(x) || std::abs(x) > threshold) {
        throw BlowupError(t, name, x);
      }
    }
  }
}

// One step of either scheme.  CrankNicolson advances a midpoint predictor for
// all four components, then recomputes the step with the reaction and decay
// forcings evaluated there; diffusion is split symmetrically around the
// midpoint so the overall update stays second order.
void step_in_place(State& s, const StepperConfig& cfg, const ModelParameters& p, const Grid& g,
                   Workspace& ws) {
  const std::size_t n = g.size();
  const double dt = cfg.dt;

  if (cfg.scheme == DiffusionScheme::BackwardEuler) {
    for (std::size_t i = 0; i < n; ++i) {
      ws.u_next[i] = s.u[i] + dt * reaction_u(s.u[i], s.v[i], s.w[i], s.rho[i], p);
    }
    solve_diffusion(ws.u_next, g, ws);
    for (std::size_t i = 0; i < n; ++i) {
      const double u2 = s.u[i] * s.u[i];
      s.v[i] = ws.v_full.decay * s.v[i] + ws.v_full.weight * (p.alpha - p.beta * u2);
      s.w[i] = ws.w_full.decay * s.w[i] + ws.w_full.weight * p.q * (s.u[i] - p.u_e);
      s.rho[i] = ws.rho_full.decay * s.rho[i] + ws.rho_full.weight * s.u[i];
      s.u[i] = ws.u_next[i];
    }
  } else {
    // Predictor: half step with start-of-step forcing.
    for (std::size_t i = 0; i < n; ++i) {
      ws.u_half[i] = s.u[i] + 0.5 * dt * reaction_u(s.u[i], s.v[i], s.w[i], s.rho[i], p);
    }
    solve_diffusion(ws.u_half, g, ws);
    for (std::size_t i = 0; i < n; ++i) {
      const double u2 = s.u[i] * s.u[i];
      ws.v_half_f[i] = ws.v_half.decay * s.v[i] + ws.v_half.weight * (p.alpha - p.beta * u2);
      ws.w_half_f[i] = ws.w_half.decay * s.w[i] + ws.w_half.weight * p.q * (s.u[i] - p.u_e);
      ws.rho_half_f[i] = ws.rho_half.decay * s.rho[i] + ws.rho_half.weight * s.u[i];
    }
    // Corrector: trapezoidal diffusion in solved form.  With S the implicit
    // half-solve, (I + m D2)u = 2u - (I - m D2)u gives u' = S(2u + dt f) - u,
    // which avoids an explicit Laplacian whose rounding leaks mass.
    for (std::size_t i = 0; i < n; ++i) {
      const double f =
          reaction_u(ws.u_half[i], ws.v_half_f[i], ws.w_half_f[i], ws.rho_half_f[i], p);
      ws.u_next[i] = 2.0 * s.u[i] + dt * f;
    }
    solve_diffusion(ws.u_next, g, ws);
    for (std::size_t i = 0; i < n; ++i) {
      const double uh2 = ws.u_half[i] * ws.u_half[i];
      s.v[i] = ws.v_full.decay * s.v[i] + ws.v_full.weight * (p.alpha - p.beta * uh2);
      s.w[i] = ws.w_full.decay * s.w[i] + ws.w_full.weight * p.q * (ws.u_half[i] - p.u_e);
      s.rho[i] = ws.rho_full.decay * s.rho[i] + ws.rho_full.weight * ws.u_half[i];
      s.u[i] = ws.u_next[i] - s.u[i];
    }
  }
}

void validate_run(const State& s, const StepperConfig& cfg, const Grid& g) {
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("StepperConfig.dt must be positive");
  if (cfg.t_end < 0.0) throw std::invalid_argument("StepperConfig.t_end must be nonnegative");
  if (cfg.monitor_stride < 1) {
    throw std::invalid_argument("StepperConfig.monitor_stride must be at least 1");
  }
  if (cfg.snapshot_stride < 0) {
    throw std::invalid_argument("StepperConfig.snapshot_stride must be nonnegative");
  }
  const std::size_t n = g.size();
  if (s.u.size() != n || s.v.size() != n || s.w.size() != n || s.rho.size() != n) {
    throw std::invalid_argument("simulate: state fields do not match the grid size");
  }
}

}  // namespace

State step(const State& s, const StepperConfig& cfg, const ModelParameters& p, const Grid& g) {
  validate_run(s, cfg, g);
  Workspace ws;
  ws.build(cfg, p, g);
  State out = s;
  step_in_place(out, cfg, p, g, ws);
  out.time = s.time + cfg.dt;
  check_finite(out, out.time, cfg.blowup_threshold);
  return out;
}

Trajectory simulate(State s0, const StepperConfig& cfg, const ModelParameters& p, const Grid& g) {
  validate_run(s0, cfg, g);
  check_finite(s0, s0.time, cfg.blowup_threshold);

  Workspace ws;
  ws.build(cfg, p, g);

  const double c1 = scaling_c1(p);  // the monitor's energy column needs b > 0
  const long steps = std::lround(cfg.t_end / cfg.dt);
  const double t0 = s0.time;

  Trajectory traj;
  traj.monitor.reserve(static_cast<std::size_t>(steps / cfg.monitor_stride) + 2);
  traj.monitor.push_back(make_monitor_row(s0, g, p.eta, c1));
  if (cfg.snapshot_stride > 0 && s0.time >= cfg.snapshot_after) {
    traj.snapshots.push_back(s0);
  }

  for (long k = 1; k <= steps; ++k) {
    step_in_place(s0, cfg, p, g, ws);
    s0.time = t0 + static_cast<double>(k) * cfg.dt;
    check_finite(s0, s0.time, cfg.blowup_threshold);
    if (k % cfg.monitor_stride == 0 || k == steps) {
      traj.monitor.push_back(make_monitor_row(s0, g, p.eta, c1));
    }
    if (cfg.snapshot_stride > 0 && (k % cfg.snapshot_stride == 0 || k == steps) &&
        s0.time >= cfg.snapshot_after) {
      traj.snapshots.push_back(s0);
    }
  }
  return traj;
}

std::vector<HomogeneousSample> simulate_homogeneous(const PointState& s0, double dt, double t_end,
                                                    const ModelParameters& p, int record_stride) {
  if (!(dt > 0.0)) throw std::invalid_argument("simulate_homogeneous: dt must be positive");
  if (t_end < 0.0) throw std::invalid_argument("simulate_homogeneous: t_end must be nonnegative");
  if (record_stride < 1) {
    throw std::invalid_argument("simulate_homogeneous: record_stride must be at least 1");
  }

  const long steps = std::lround(t_end / dt);
  std::vector<HomogeneousSample> out;
  out.reserve(static_cast<std::size_t>(steps / record_stride) + 2);
  out.push_back({0.0, s0});

  PointState y = s0;
  const auto add = [](const PointState& s, const Rates& k, double h) {
    return PointState{s.u + h * k[0], s.v + h * k[1], s.w + h * k[2], s.rho + h * k[3]};
  };
  for (long n = 1; n <= steps; ++n) {
    const Rates k1 = homogeneous_rhs(y, p);
    const Rates k2 = homogeneous_rhs(add(y, k1, dt / 2.0), p);
    const Rates k3 = homogeneous_rhs(add(y, k2, dt / 2.0), p);
    const Rates k4 = homogeneous_rhs(add(y, k3, dt), p);
    y.u += dt / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]);
    y.v += dt / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]);
    y.w += dt / 6.0 * (k1[2] + 2.0 * k2[2] + 2.0 * k3[2] + k4[2]);
    y.rho += dt / 6.0 * (k1[3] + 2.0 * k2[3] + 2.0 * k3[3] + k4[3]);
    const double t = static_cast<double>(n) * dt;
    const char* names[] = {"u", "v", "w", "rho"};
    const double vals[] = {y.u, y.v, y.w, y.rho};
    for (int i = 0; i < 4; ++i) {
      if (!std::isfinite(vals[i]) || std::abs(vals[i]) > 1e12) {
        throw BlowupError(t, names[i], vals[i]);
      }
    }
    if (n % record_stride == 0 || n == steps) out.push_back({t, y});
  }
  return out;
}

}  // namespace mhr
