#include <mhr/bounds.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mhr {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be strictly positive, got " +
                                std::to_string(value));
  }
}

void require_admissible(const ModelParameters& p) {
  // Only the parameters the formulas divide by or take decay rates from.
  require_positive(p.b, "b");
  require_positive(p.r, "r");
  require_positive(p.k2, "k2");
  require_positive(p.delta, "delta");
  require_positive(p.eta, "eta");
}

double sq(double x) { return x * x; }
double cube(double x) { return x * x * x; }

}  // namespace

double scaling_c1(const ModelParameters& p) {
  require_positive(p.b, "b");
  return (p.beta * p.beta + 5.0) / p.b;
}

EnergyBounds energy_constants(const ModelParameters& p, double omega) {
  require_admissible(p);
  require_positive(omega, "omega");

  EnergyBounds eb;
  eb.omega = omega;
  eb.C1 = scaling_c1(p);

  // Forcing level collected while absorbing every cross term into the
  // quadratic and sextic damping.
  eb.C2 = sq(sq(eb.C1 * p.a)) + eb.C1 * sq(p.J_e) +
          sq(sq(eb.C1) * (2.0 + 1.0 / p.r) + eb.C1) + 2.0 * sq(p.alpha) +
          sq(p.q) * sq(p.u_e) / p.r + sq(sq(p.q)) / sq(p.r) + 1.0 / (4.0 * sq(p.k2));

  // The memristive coupling adds a term controlled by the extremum of the
  // quadratic memristance, |c| + gamma^2/(4 delta).
  const double phi_env = std::abs(p.c) + sq(p.gamma) / (4.0 * p.delta);
  eb.C3 = 2.0 * eb.C2 + 4.0 * sq(eb.C1) * sq(p.k1) * sq(phi_env);

  eb.lambda = 0.5 * std::min({1.0, p.r, p.k2});
  eb.M = (eb.C3 + sq(eb.C1) / 4.0) / eb.lambda;
  eb.K = eb.M * omega / std::min(eb.C1, 1.0) + 1.0;
  return eb;
}

double absorbing_time(const ModelParameters& p, double initial_radius_sq) {
  require_admissible(p);
  if (initial_radius_sq < 0.0) {
    throw std::invalid_argument("absorbing_time: initial_radius_sq must be nonnegative");
  }
  const double c1 = scaling_c1(p);
  const double lambda = 0.5 * std::min({1.0, p.r, p.k2});
  const double scaled = initial_radius_sq * std::max(c1, 1.0);
  if (scaled <= 1.0) return 0.0;  // already inside the unit slack of K
  return std::log(scaled) / lambda;
}

YoungConstants young_constants(const ModelParameters& p) {
  require_positive(p.b, "b");
  YoungConstants yc;
  yc.C_ab = std::pow(4.0 / p.b, 5.0) * std::pow(p.a, 6.0);
  yc.C_b = 3.0 / p.b;
  return yc;
}

L4Bounds l4_bound(const ModelParameters& p, double omega, double b_norm, double c_hat) {
  require_admissible(p);
  require_positive(omega, "omega");
  require_positive(c_hat, "C_hat");
  if (b_norm < 0.0) {
    throw std::invalid_argument("l4_bound: b_norm must be nonnegative");
  }

  const EnergyBounds eb = energy_constants(p, omega);
  const YoungConstants yc = young_constants(p);

  L4Bounds lb;
  lb.C_ab = yc.C_ab;
  lb.C_b = yc.C_b;
  lb.C_hat = c_hat;
  lb.b_norm = b_norm;

  // Transient gradient-energy level reachable from the initial ball.
  const double transient = c_hat / (eb.C1 * std::min(p.eta, eb.lambda)) *
                           (std::max(eb.C1, 1.0) * sq(b_norm) + eb.lambda * eb.M * omega);

  // Memristance contribution to the quartic forcing; coarser envelope
  // |c| + gamma^2/delta than the energy-level one.
  const double mem = 16.0 * cube(p.k1) / sq(p.b) * cube(std::abs(p.c) + sq(p.gamma) / p.delta);
  const double forcing = lb.C_ab + lb.C_b * (eb.K + sq(p.J_e)) + mem;

  lb.Q = sq(transient) + omega / p.b * (p.b + forcing);
  lb.L = 2.0 / p.b * lb.Q + 4.0 / p.b * omega * forcing;
  return lb;
}

double vwrho_sup_bound(const ModelParameters& p, double attractor_radius_sq, bool sum_form) {
  require_admissible(p);
  if (attractor_radius_sq < 0.0) {
    throw std::invalid_argument("vwrho_sup_bound: attractor_radius_sq must be nonnegative");
  }
  const double root = std::sqrt(attractor_radius_sq);
  const double v_cap = sum_form ? p.alpha + p.beta * attractor_radius_sq
                                : std::abs(p.alpha - p.beta * attractor_radius_sq);
  const double w_cap = p.q / p.r * (root + std::abs(p.u_e));
  const double rho_cap = root / p.k2;
  return std::max({v_cap, w_cap, rho_cap});
}

AttractorBounds attractor_region(const ModelParameters& p, double omega, double c_emb,
                                 bool g_sum_form) {
  require_admissible(p);
  require_positive(omega, "omega");
  require_positive(c_emb, "C_emb");

  const EnergyBounds eb = energy_constants(p, omega);

  AttractorBounds ab;
  ab.C_emb = c_emb;

  const double level = std::max(eb.C1, 1.0) * eb.K + eb.lambda * eb.M * omega;
  ab.R = c_emb / (eb.C1 * std::min(p.eta, eb.lambda)) * level;
  ab.G = vwrho_sup_bound(p, ab.R, g_sum_form);

  const double root_r = std::sqrt(ab.R);
  const double r32 = ab.R * root_r;

  // Gradient-flux level: diffusion tail, reaction amplitudes over the region,
  // linear decay load, and the pointwise forcing of v, w, rho.
  const double reaction_amp = p.a * ab.R + p.b * r32 + p.J_e + p.k1 * std::abs(p.c) +
                              p.k1 * sq(p.gamma);
  ab.Phi = 2.0 * p.eta / (eb.C1 * std::min(p.eta, eb.lambda)) * level +
           4.0 * (sq(reaction_amp) + sq(p.k1) * sq(1.0 + p.delta) * sq(sq(ab.G))) * omega +
           4.0 * (2.0 + sq(p.r) + sq(p.k2)) * eb.K +
           4.0 * (sq(p.alpha + p.beta * ab.R) + sq(p.q * root_r + p.q * std::abs(p.u_e)) + ab.R) *
               omega;

  // Quadratic memristance evaluated at the amplitude cap; for the bounded
  // kind this still dominates |phi| <= 1.
  const double phi_g = p.c + p.gamma * ab.G + p.delta * sq(ab.G);
  ab.D = 2.0 *
         (3.0 + 2.0 * p.a * root_r + p.k1 * std::abs(phi_g) +
          2.0 * p.k1 * root_r * (std::abs(p.gamma) + p.delta * ab.G)) *
         ab.Phi;

  ab.H2_bound = std::sqrt(eb.K) + std::sqrt(ab.D) +
                (p.a * ab.R + p.b * r32 + 2.0 * ab.G + p.J_e +
                 p.k1 * (std::abs(p.c) + std::abs(p.gamma) * ab.G + p.delta * sq(ab.G)) * root_r) *
                    std::sqrt(omega);
  return ab;
}

BoundSet compute_bounds(const ModelParameters& p, double omega, double b_norm, double c_hat,
                        double c_emb) {
  BoundSet bs;
  bs.energy = energy_constants(p, omega);
  bs.l4 = l4_bound(p, omega, b_norm, c_hat);
  bs.attractor = attractor_region(p, omega, c_emb);
  bs.T0 = absorbing_time(p, b_norm * b_norm);
  bs.omega = omega;
  bs.b_norm = b_norm;
  return bs;
}

}  // namespace mhr
