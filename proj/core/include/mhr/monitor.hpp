#pragma once

// Per-time diagnostics recorded during a simulation.  The columns are exactly
// the quantities the certificates constrain, so verification never needs the
// full field history.

#include <vector>

#include <mhr/grid.hpp>

namespace mhr {

struct MonitorRow {
  double time = 0.0;
  double energy = 0.0;      // c1*|u|^2 + |v|^2 + |w|^2 + |rho|^2
  double l4_u4 = 0.0;       // |u|_{L^4}^4
  double l6_u6 = 0.0;       // |u|_{L^6}^6
  double linf_u = 0.0;
  double h1semi2_u = 0.0;   // |grad u|^2
  double l2_v = 0.0;
  double l2_w = 0.0;
  double l2_rho = 0.0;
  double sup_v = 0.0;
  double sup_w = 0.0;
  double sup_rho = 0.0;
  double h2surr_u = 0.0;    // |u| + eta*|lap u|
};

using MonitorSeries = std::vector<MonitorRow>;

[[nodiscard]] MonitorRow make_monitor_row(const State& s, const Grid& g, double eta, double c1);

}  // namespace mhr
