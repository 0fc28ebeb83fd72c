#pragma once

// JSON run configuration.  Parsing is strict about the model parameters: all
// of them are required and the positivity constraints are enforced here, so a
// config that parses is safe to hand to every other module.

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <mhr/grid.hpp>
#include <mhr/integrator.hpp>
#include <mhr/model.hpp>

namespace mhr {

class ConfigError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridConfig {
  std::vector<double> lengths{1.0};
  std::vector<int> cells{256};
};

struct EnsembleConfig {
  int n_runs = 8;
  std::uint64_t seed = 20260814;
  double radius = 1.0;
};

// Settings of the constant-data consistency check run by `verify`.  It has
// its own step size and horizon: the tolerance tracks the scheme's order, so
// it is meaningful on a short accurate run, not on the long ensemble horizon.
struct OdeCheckConfig {
  double dt = 1e-3;
  double t_end = 100.0;
  double tol = 1e-3;
  DiffusionScheme scheme = DiffusionScheme::CrankNicolson;
  std::array<double, 4> initial{0.0, 0.0, 0.0, 0.0};
};

struct OutputConfig {
  std::string monitor;          // CSV path; empty keeps the series in memory
  std::string report;           // JSON path; empty prints to stdout only
  std::string snapshot_prefix;  // binary snapshot path prefix; empty disables
};

struct RunConfig {
  ModelParameters params;
  GridConfig grid;
  StepperConfig stepper;
  EnsembleConfig ensemble;
  OdeCheckConfig ode_check;
  OutputConfig outputs;
  double c_hat = 1.0;
  double c_emb = 1.0;
  double tol = 1e-6;
  std::vector<std::string> defaulted;  // parameters that fell back to defaults
};

// Parses and validates.  Collects every problem before throwing, so an empty
// document reports the full list of missing required keys at once.
[[nodiscard]] RunConfig parse_config(const std::string& json_text);
[[nodiscard]] RunConfig load_config(const std::filesystem::path& path);

[[nodiscard]] Grid grid_from_config(const GridConfig& gc);

}  // namespace mhr
