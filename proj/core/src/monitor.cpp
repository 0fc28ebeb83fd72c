#include <mhr/monitor.hpp>

#include <cmath>

namespace mhr {

MonitorRow make_monitor_row(const State& s, const Grid& g, double eta, double c1) {
  MonitorRow row;
  row.time = s.time;
  const double u2 = lp_integral(s.u, g, 2);
  const double v2 = lp_integral(s.v, g, 2);
  const double w2 = lp_integral(s.w, g, 2);
  const double rho2 = lp_integral(s.rho, g, 2);
  row.l2_v = std::sqrt(v2);
  row.l2_w = std::sqrt(w2);
  row.l2_rho = std::sqrt(rho2);
  row.energy = c1 * u2 + v2 + w2 + rho2;
  row.l4_u4 = lp_integral(s.u, g, 4);
  row.l6_u6 = lp_integral(s.u, g, 6);
  row.linf_u = linf_norm(s.u);
  const double h1 = h1_seminorm(s.u, g);
  row.h1semi2_u = h1 * h1;
  row.sup_v = linf_norm(s.v);
  row.sup_w = linf_norm(s.w);
  row.sup_rho = linf_norm(s.rho);
  row.h2surr_u = h2_surrogate_norm(s.u, g, eta);
  return row;
}

}  // namespace mhr
