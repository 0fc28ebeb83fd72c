#pragma once

// Cell-centered finite-volume grids on rectangular boxes with zero-flux
// boundaries, plus the discrete calculus the certificates are stated in.
//
// Boundary handling uses mirror ghost cells, which makes the normal flux
// vanish exactly: the discrete Laplacian has zero row sums, is self-adjoint
// under the midpoint inner product, and satisfies the summation-by-parts
// identity <-lap f, f> = |grad f|^2 with the face-centered gradient below.

#include <array>
#include <cstddef>
#include <vector>

namespace mhr {

using Field = std::vector<double>;

struct Grid {
  int dim = 1;                                  // 1, 2, or 3
  std::array<int, 3> cells{1, 1, 1};            // extents; axes >= dim stay 1
  std::array<double, 3> lengths{1.0, 1.0, 1.0}; // box edge lengths

  [[nodiscard]] std::size_t size() const {
    return static_cast<std::size_t>(cells[0]) * cells[1] * cells[2];
  }
  [[nodiscard]] double spacing(int axis) const { return lengths[axis] / cells[axis]; }
  [[nodiscard]] double cell_volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= spacing(a);
    return v;
  }
  [[nodiscard]] double measure() const {
    double m = 1.0;
    for (int a = 0; a < dim; ++a) m *= lengths[a];
    return m;
  }
  // Row-major linearization: the last used axis is contiguous.
  [[nodiscard]] std::array<long, 3> strides() const {
    return {static_cast<long>(cells[1]) * cells[2], static_cast<long>(cells[2]), 1L};
  }
  // Cell-center coordinate along one axis.
  [[nodiscard]] double center(int axis, int i) const { return (i + 0.5) * spacing(axis); }

  bool operator==(const Grid&) const = default;
};

// Throws std::invalid_argument on empty/oversized axis lists, nonpositive
// lengths, or cell counts below one.
[[nodiscard]] Grid make_grid(const std::vector<double>& lengths, const std::vector<int>& cells);
[[nodiscard]] inline Grid make_line(double length, int n) { return make_grid({length}, {n}); }

// Discrete fields of the four model components on a common grid.
struct State {
  Field u, v, w, rho;
  double time = 0.0;
};

[[nodiscard]] State make_state(const Grid& g);

// ---------------------------------------------------------------------------
// Discrete calculus.  All routines check that the field size matches the grid
// and throw std::invalid_argument otherwise.
// ---------------------------------------------------------------------------

// Five/seven-point Laplacian with mirror ghosts (zero-flux boundary).
[[nodiscard]] Field laplacian_neumann(const Field& f, const Grid& g);

// Midpoint-rule integral of f over the box.
[[nodiscard]] double integral(const Field& f, const Grid& g);

// Midpoint-rule integral of f^p for even p >= 2 (the p-th power of the norm,
// computed without the intermediate root).
[[nodiscard]] double lp_integral(const Field& f, const Grid& g, int p);

// L^p norm for even p >= 2 under the midpoint rule.
[[nodiscard]] double lp_norm(const Field& f, const Grid& g, int p);
[[nodiscard]] inline double l2_norm(const Field& f, const Grid& g) { return lp_norm(f, g, 2); }

[[nodiscard]] double linf_norm(const Field& f);

// Face-centered gradient magnitude in L^2; squares to <-lap f, f> exactly.
[[nodiscard]] double h1_seminorm(const Field& f, const Grid& g);

// Weighted squared norm c1*|u|^2 + |v|^2 + |w|^2 + |rho|^2 the decay
// certificate is stated in.
[[nodiscard]] double energy(const State& s, const Grid& g, double c1);

// Surrogate for the second-order Sobolev norm: |f| + eta*|lap f|.
[[nodiscard]] double h2_surrogate_norm(const Field& f, const Grid& g, double eta);

}  // namespace mhr
