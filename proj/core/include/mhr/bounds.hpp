#pragma once

// Closed-form dissipativity and attractor constants for the memristive
// Hindmarsh-Rose reaction-diffusion system.
//
// Every quantity here is an explicit function of the model parameters and the
// domain measure; nothing is fitted to trajectories.  The verification module
// checks simulated runs against these values, so the formulas are kept free
// of any dependency on grid or integrator code.
//
// The memristance envelope terms always use the quadratic coefficients
// (c, gamma, delta) regardless of ModelParameters::memristance_kind: the
// bounded kind satisfies |phi| <= 1, so the quadratic envelope still
// dominates it and the constants stay valid.

#include <mhr/model.hpp>

namespace mhr {

// Weight of |u|^2 in the energy functional: C1 = (beta^2 + 5) / b.
[[nodiscard]] double scaling_c1(const ModelParameters& p);

struct EnergyBounds {
  double C1 = 0.0;      // energy weight on |u|^2
  double C2 = 0.0;      // raw forcing constant of the energy inequality
  double C3 = 0.0;      // forcing constant after absorbing the memristance
  double lambda = 0.0;  // uniform exponential decay rate
  double M = 0.0;       // asymptotic energy level per unit volume
  double K = 0.0;       // squared radius of the absorbing ball (with unit slack)
  double omega = 0.0;   // domain measure the constants were evaluated for
};

// Constants of the decay estimate
//   E(t) <= exp(-lambda t) E(0) + M * omega,
// with E = C1|u|^2 + |v|^2 + |w|^2 + |rho|^2.  Throws std::invalid_argument
// when omega or a parameter appearing in a denominator is not positive.
[[nodiscard]] EnergyBounds energy_constants(const ModelParameters& p, double omega);

// Latest time by which every trajectory starting in the squared-norm ball
// |g(0)|^2 <= initial_radius_sq has entered the absorbing ball |g|^2 < K.
[[nodiscard]] double absorbing_time(const ModelParameters& p, double initial_radius_sq);

struct YoungConstants {
  double C_ab = 0.0;  // absorbs a*u^5 into the u^6 damping: (4/b)^5 a^6
  double C_b = 0.0;   // absorbs the u^3 cross terms: 3/b
};

// Splitting constants used by the higher-order estimate; derived by Young's
// inequality with exponents (6/5, 6) on the quintic term and by the
// quadratic-mean split with weight b/12 on each of the three cross terms.
[[nodiscard]] YoungConstants young_constants(const ModelParameters& p);

struct L4Bounds {
  double C_ab = 0.0;
  double C_b = 0.0;
  double Q = 0.0;       // asymptotic bound for |u|_{L^4}^4
  double L = 0.0;       // asymptotic bound for the time-averaged |u|_{L^6}^6
  double C_hat = 0.0;   // interpolation constant supplied by the caller
  double b_norm = 0.0;  // norm radius of the initial ball the bound covers
};

// Quartic-norm absorbing level for trajectories starting in |g(0)| <= b_norm.
[[nodiscard]] L4Bounds l4_bound(const ModelParameters& p, double omega, double b_norm,
                                double c_hat);

struct AttractorBounds {
  double R = 0.0;        // squared first-order Sobolev radius for u
  double G = 0.0;        // uniform amplitude cap for v, w, rho
  double Phi = 0.0;      // gradient-flux level feeding the second-order bound
  double D = 0.0;        // squared bound for the dissipative part of du/dt
  double H2_bound = 0.0; // bound for the second-order surrogate norm of u
  double C_emb = 0.0;    // embedding constant supplied by the caller
};

// Amplitude cap for the pointwise components given the Sobolev radius R:
//   G = max{ |alpha - beta R|, (q/r)(sqrt(R) + |u_e|), sqrt(R)/k2 }.
// sum_form replaces the first entry by alpha + beta R, the coarser variant
// that stays monotone in R.
[[nodiscard]] double vwrho_sup_bound(const ModelParameters& p, double attractor_radius_sq,
                                     bool sum_form = false);

// Region containing the global attractor in the higher-order norms.
[[nodiscard]] AttractorBounds attractor_region(const ModelParameters& p, double omega,
                                               double c_emb, bool g_sum_form = false);

// One-call aggregate used by reports.
struct BoundSet {
  EnergyBounds energy;
  L4Bounds l4;
  AttractorBounds attractor;
  double T0 = 0.0;      // predicted absorbing entry time for the b_norm ball
  double omega = 0.0;
  double b_norm = 0.0;
};

[[nodiscard]] BoundSet compute_bounds(const ModelParameters& p, double omega, double b_norm,
                                      double c_hat, double c_emb);

}  // namespace mhr
