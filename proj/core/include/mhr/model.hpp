#pragma once

// Pointwise dynamics of the memristive Hindmarsh-Rose model.
//
// The evolved state is g = (u, v, w, rho): membrane potential, fast recovery
// current, slow adaptation current, and magnetic flux of the memristor.  The
// right-hand side splits into a stiff linear part (diffusion on u, one linear
// decay per remaining component) and a reaction part; the integrator treats
// the two parts differently, so they are exposed separately here.

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace mhr {

enum class MemristanceKind {
  Quadratic,  // phi(rho) = c + gamma*rho + delta*rho^2
  Tanh,       // phi(rho) = tanh(rho)
};

struct ModelParameters {
  double eta = 1.0;     // diffusion coefficient of u
  double a = 3.0;       // quadratic gain of the membrane nonlinearity
  double b = 1.0;       // cubic damping of the membrane nonlinearity
  double alpha = 1.0;   // constant drive of the recovery current
  double beta = 5.0;    // quadratic load of the recovery current
  double q = 0.008;     // adaptation gain
  double r = 0.002;     // adaptation decay rate
  double u_e = -1.6;    // resting reference potential
  double J_e = 3.2;     // external input current
  double k1 = 0.9;      // memristive coupling strength
  double k2 = 6.5;      // flux decay rate
  double c = 1.0;       // memristance offset
  double gamma = 0.4;   // memristance linear coefficient
  double delta = 0.8;   // memristance quadratic coefficient
  MemristanceKind memristance_kind = MemristanceKind::Quadratic;
};

// Names of parameters violating the strict-positivity constraints the bound
// formulas rely on (they appear in denominators or as decay rates).  Empty
// result means the parameter set is admissible.
[[nodiscard]] inline std::vector<std::string> invalid_parameters(const ModelParameters& p) {
  std::vector<std::string> bad;
  const std::pair<const char*, double> positive[] = {
      {"eta", p.eta}, {"a", p.a},   {"b", p.b},   {"alpha", p.alpha},
      {"beta", p.beta}, {"q", p.q}, {"r", p.r},   {"J_e", p.J_e},
      {"k1", p.k1},   {"k2", p.k2}, {"delta", p.delta},
  };
  for (const auto& [name, value] : positive) {
    if (!(value > 0.0)) bad.emplace_back(name);
  }
  return bad;
}

struct PointState {
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  double rho = 0.0;
};

// Component order (u, v, w, rho) throughout.
using Rates = std::array<double, 4>;

[[nodiscard]] inline double memristance(double rho, const ModelParameters& p) noexcept {
  if (p.memristance_kind == MemristanceKind::Tanh) return std::tanh(rho);
  return p.c + p.gamma * rho + p.delta * rho * rho;
}

// Linear part handled implicitly (u, via the Laplacian scaled by eta) or by
// integrating factors (unit decay on v, r on w, k2 on rho).
struct LinearRates {
  double u_diffusion;
  double v_decay;
  double w_decay;
  double rho_decay;
};

[[nodiscard]] constexpr LinearRates linear_rates(const ModelParameters& p) noexcept {
  return {p.eta, 1.0, p.r, p.k2};
}

// Reaction part: the full right-hand side minus diffusion and the three
// linear decays listed above.
[[nodiscard]] inline Rates reaction(const PointState& s, const ModelParameters& p) noexcept {
  const double u2 = s.u * s.u;
  return {
      p.a * u2 - p.b * u2 * s.u + s.v - s.w + p.J_e - p.k1 * memristance(s.rho, p) * s.u,
      p.alpha - p.beta * u2,
      p.q * (s.u - p.u_e),
      s.u,
  };
}

// Right-hand side of the spatially homogeneous system (diffusion vanishes on
// constants): reaction plus the linear decays.
[[nodiscard]] inline Rates homogeneous_rhs(const PointState& s, const ModelParameters& p) noexcept {
  Rates f = reaction(s, p);
  f[1] -= s.v;
  f[2] -= p.r * s.w;
  f[3] -= p.k2 * s.rho;
  return f;
}

}  // namespace mhr
