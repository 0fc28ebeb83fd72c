#include <mhr/grid.hpp>

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace mhr {

namespace {

void check_field(const Field& f, const Grid& g, const char* what) {
  if (f.size() != g.size()) {
    throw std::invalid_argument(std::string(what) + ": field size " +
                                std::to_string(f.size()) + " does not match grid size " +
                                std::to_string(g.size()));
  }
}

}  // namespace

Grid make_grid(const std::vector<double>& lengths, const std::vector<int>& cells) {
  if (lengths.empty() || lengths.size() > 3) {
    throw std::invalid_argument("make_grid: need 1 to 3 axis lengths, got " +
                                std::to_string(lengths.size()));
  }
  if (cells.size() != lengths.size()) {
    throw std::invalid_argument("make_grid: lengths and cells describe different dimensions");
  }
  Grid g;
  g.dim = static_cast<int>(lengths.size());
  for (int a = 0; a < g.dim; ++a) {
    if (!(lengths[a] > 0.0) || !std::isfinite(lengths[a])) {
      throw std::invalid_argument("make_grid: axis " + std::to_string(a) +
                                  " length must be positive and finite");
    }
    if (cells[a] < 1) {
      throw std::invalid_argument("make_grid: axis " + std::to_string(a) +
                                  " needs at least one cell");
    }
    g.lengths[a] = lengths[a];
    g.cells[a] = cells[a];
  }
  return g;
}

State make_state(const Grid& g) {
  State s;
  s.u.assign(g.size(), 0.0);
  s.v.assign(g.size(), 0.0);
  s.w.assign(g.size(), 0.0);
  s.rho.assign(g.size(), 0.0);
  return s;
}

Field laplacian_neumann(const Field& f, const Grid& g) {
  check_field(f, g, "laplacian_neumann");
  const auto [c0, c1, c2] = g.cells;
  const auto [s0, s1, s2] = g.strides();
  double inv2[3] = {0.0, 0.0, 0.0};
  for (int a = 0; a < g.dim; ++a) {
    if (g.cells[a] > 1) {
      const double h = g.spacing(a);
      inv2[a] = 1.0 / (h * h);
    }
  }
  Field out(f.size());
  for (long i0 = 0; i0 < c0; ++i0) {
    for (long i1 = 0; i1 < c1; ++i1) {
      for (long i2 = 0; i2 < c2; ++i2) {
        const long idx = i0 * s0 + i1 * s1 + i2 * s2;
        const double fc = f[idx];
        double acc = 0.0;
        // Mirror ghosts: a missing neighbor contributes the cell itself, so
        // the second difference degenerates to a one-sided flux at the wall.
        if (c0 > 1) {
          const double fm = (i0 > 0) ? f[idx - s0] : fc;
          const double fp = (i0 + 1 < c0) ? f[idx + s0] : fc;
          acc += (fm + fp - 2.0 * fc) * inv2[0];
        }
        if (c1 > 1) {
          const double fm = (i1 > 0) ? f[idx - s1] : fc;
          const double fp = (i1 + 1 < c1) ? f[idx + s1] : fc;
          acc += (fm + fp - 2.0 * fc) * inv2[1];
        }
        if (c2 > 1) {
          const double fm = (i2 > 0) ? f[idx - s2] : fc;
          const double fp = (i2 + 1 < c2) ? f[idx + s2] : fc;
          acc += (fm + fp - 2.0 * fc) * inv2[2];
        }
        out[idx] = acc;
      }
    }
  }
  return out;
}

double integral(const Field& f, const Grid& g) {
  check_field(f, g, "integral");
  double acc = 0.0;
  for (double x : f) acc += x;
  return acc * g.cell_volume();
}

double lp_integral(const Field& f, const Grid& g, int p) {
  check_field(f, g, "lp_integral");
  if (p < 2 || p % 2 != 0) {
    throw std::invalid_argument("lp_integral: p must be even and >= 2, got " +
                                std::to_string(p));
  }
  double acc = 0.0;
  if (p == 2) {
    for (double x : f) acc += x * x;
  } else {
    for (double x : f) {
      const double x2 = x * x;
      double term = x2;
      for (int k = 2; k < p; k += 2) term *= x2;
      acc += term;
    }
  }
  return acc * g.cell_volume();
}

double lp_norm(const Field& f, const Grid& g, int p) {
  const double moment = lp_integral(f, g, p);
  if (p == 2) return std::sqrt(moment);
  return std::pow(moment, 1.0 / p);
}

double linf_norm(const Field& f) {
  double m = 0.0;
  for (double x : f) m = std::max(m, std::abs(x));
  return m;
}

double h1_seminorm(const Field& f, const Grid& g) {
  check_field(f, g, "h1_seminorm");
  const auto [c0, c1, c2] = g.cells;
  const auto [s0, s1, s2] = g.strides();
  const double vol = g.cell_volume();
  double acc = 0.0;
  for (long i0 = 0; i0 < c0; ++i0) {
    for (long i1 = 0; i1 < c1; ++i1) {
      for (long i2 = 0; i2 < c2; ++i2) {
        const long idx = i0 * s0 + i1 * s1 + i2 * s2;
        if (i0 + 1 < c0) {
          const double d = (f[idx + s0] - f[idx]) / g.spacing(0);
          acc += d * d;
        }
        if (i1 + 1 < c1) {
          const double d = (f[idx + s1] - f[idx]) / g.spacing(1);
          acc += d * d;
        }
        if (i2 + 1 < c2) {
          const double d = (f[idx + s2] - f[idx]) / g.spacing(2);
          acc += d * d;
        }
      }
    }
  }
  return std::sqrt(acc * vol);
}

double energy(const State& s, const Grid& g, double c1) {
  return c1 * lp_integral(s.u, g, 2) + lp_integral(s.v, g, 2) + lp_integral(s.w, g, 2) +
         lp_integral(s.rho, g, 2);
}

double h2_surrogate_norm(const Field& f, const Grid& g, double eta) {
  const Field lap = laplacian_neumann(f, g);
  return l2_norm(f, g) + eta * l2_norm(lap, g);
}

}  // namespace mhr
