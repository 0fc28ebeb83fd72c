#pragma once

// Time integration of the coupled system.
//
// Operator splitting: diffusion on u is implicit (backward Euler or a
// predictor-corrector Crank-Nicolson), the linear decays on v, w, rho use
// exact integrating factors, and the reaction enters explicitly.  Implicit
// solves factor dimension-wise into tridiagonal systems, so cost is linear in
// the number of cells for every dimension.

#include <stdexcept>
#include <string>
#include <vector>

#include <mhr/grid.hpp>
#include <mhr/model.hpp>
#include <mhr/monitor.hpp>

namespace mhr {

enum class DiffusionScheme {
  BackwardEuler,   // first order; reaction frozen at the step start
  CrankNicolson,   // second order; reaction evaluated at a midpoint predictor
};

struct StepperConfig {
  double dt = 1e-2;
  double t_end = 100.0;
  DiffusionScheme scheme = DiffusionScheme::CrankNicolson;
  int monitor_stride = 10;       // record a row every this many steps
  int snapshot_stride = 0;       // 0 disables state snapshots
  double snapshot_after = 0.0;   // keep snapshots from this time on
  double blowup_threshold = 1e12;
};

// Raised when any field value exceeds the blow-up threshold or stops being
// finite; carries where and when the overflow happened.
class BlowupError : public std::runtime_error {
 public:
  BlowupError(double time, std::string component, double value);

  [[nodiscard]] double time() const noexcept { return time_; }
  [[nodiscard]] const std::string& component() const noexcept { return component_; }
  [[nodiscard]] double value() const noexcept { return value_; }

 private:
  double time_;
  std::string component_;
  double value_;
};

// Advance one step of size cfg.dt.  Exposed for tests; simulate() reuses the
// factored solver across steps and is the right entry point for long runs.
[[nodiscard]] State step(const State& s, const StepperConfig& cfg, const ModelParameters& p,
                         const Grid& g);

struct Trajectory {
  MonitorSeries monitor;        // always includes the initial and final time
  std::vector<State> snapshots; // each State carries its own time
};

[[nodiscard]] Trajectory simulate(State s0, const StepperConfig& cfg, const ModelParameters& p,
                                  const Grid& g);

// Classic fourth-order Runge-Kutta on the spatially homogeneous system; the
// reference the PDE integrator is validated against.  Records every
// record_stride-th step plus the initial and final time.
struct HomogeneousSample {
  double time = 0.0;
  PointState state;
};

[[nodiscard]] std::vector<HomogeneousSample> simulate_homogeneous(const PointState& s0, double dt,
                                                                  double t_end,
                                                                  const ModelParameters& p,
                                                                  int record_stride = 1);

}  // namespace mhr
