#pragma once

// Independent reference for every bound constant, written from scratch in
// long double arithmetic and kept deliberately flat: one expression per
// constant, no shared helpers with the library.  If the library and this file
// disagree beyond roundoff, one of them transcribed a formula wrong.

#include <algorithm>
#include <cmath>

#include <mhr/model.hpp>

namespace oracle {

struct Constants {
  long double C1, C2, C3, lambda, M, K, T0;
  long double C_ab, C_b, Q, L;
  long double R, G, Phi, D, H2;
};

inline Constants evaluate(const mhr::ModelParameters& p, long double omega, long double b_norm,
                          long double c_hat, long double c_emb) {
  using std::abs;
  using std::max;
  using std::min;
  using std::pow;
  using std::sqrt;

  const long double a = p.a, b = p.b, alpha = p.alpha, beta = p.beta, q = p.q, r = p.r,
                    u_e = p.u_e, J_e = p.J_e, k1 = p.k1, k2 = p.k2, c = p.c, gamma = p.gamma,
                    delta = p.delta, eta = p.eta;

  Constants out{};
  out.C1 = (beta * beta + 5.0L) / b;
  out.C2 = pow(out.C1 * a, 4.0L) + out.C1 * J_e * J_e +
           pow(out.C1 * out.C1 * (2.0L + 1.0L / r) + out.C1, 2.0L) + 2.0L * alpha * alpha +
           q * q * u_e * u_e / r + pow(q, 4.0L) / (r * r) + 1.0L / (4.0L * k2 * k2);
  out.C3 = 2.0L * out.C2 +
           4.0L * out.C1 * out.C1 * k1 * k1 * pow(abs(c) + gamma * gamma / (4.0L * delta), 2.0L);
  out.lambda = 0.5L * min({1.0L, (long double)r, (long double)k2});
  out.M = (out.C3 + out.C1 * out.C1 / 4.0L) / out.lambda;
  out.K = out.M * omega / min(out.C1, 1.0L) + 1.0L;

  const long double scaled = b_norm * b_norm * max(out.C1, 1.0L);
  out.T0 = (scaled > 1.0L) ? std::log(scaled) / out.lambda : 0.0L;

  out.C_ab = pow(4.0L / b, 5.0L) * pow((long double)a, 6.0L);
  out.C_b = 3.0L / b;

  const long double mem4 =
      16.0L * pow((long double)k1, 3.0L) / (b * b) * pow(abs(c) + gamma * gamma / delta, 3.0L);
  const long double forcing = out.C_ab + out.C_b * (out.K + J_e * J_e) + mem4;
  const long double transient = c_hat / (out.C1 * min((long double)eta, out.lambda)) *
                                (max(out.C1, 1.0L) * b_norm * b_norm + out.lambda * out.M * omega);
  out.Q = transient * transient + omega / b * (b + forcing);
  out.L = 2.0L / b * out.Q + 4.0L / b * omega * forcing;

  const long double level = max(out.C1, 1.0L) * out.K + out.lambda * out.M * omega;
  out.R = c_emb / (out.C1 * min((long double)eta, out.lambda)) * level;
  const long double rootR = sqrt(out.R);
  out.G = max({abs(alpha - beta * out.R), q / r * (rootR + abs(u_e)), rootR / k2});

  const long double amp = a * out.R + b * out.R * rootR + J_e + k1 * abs(c) + k1 * gamma * gamma;
  out.Phi = 2.0L * eta / (out.C1 * min((long double)eta, out.lambda)) * level +
            4.0L * (amp * amp + k1 * k1 * pow(1.0L + delta, 2.0L) * pow(out.G, 4.0L)) * omega +
            4.0L * (2.0L + r * r + k2 * k2) * out.K +
            4.0L *
                (pow(alpha + beta * out.R, 2.0L) + pow(q * rootR + q * abs(u_e), 2.0L) + out.R) *
                omega;
  const long double phi_g = c + gamma * out.G + delta * out.G * out.G;
  out.D = 2.0L *
          (3.0L + 2.0L * a * rootR + k1 * abs(phi_g) +
           2.0L * k1 * rootR * (abs(gamma) + delta * out.G)) *
          out.Phi;
  out.H2 = sqrt(out.K) + sqrt(out.D) +
           (a * out.R + b * out.R * rootR + 2.0L * out.G + J_e +
            k1 * (abs(c) + abs(gamma) * out.G + delta * out.G * out.G) * rootR) *
               sqrt(omega);
  return out;
}

}  // namespace oracle
