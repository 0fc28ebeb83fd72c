// Command-line front end: evaluate bound constants, run simulations, verify
// certificates on random ensembles, dump the homogeneous reference, and sweep
// a parameter across values.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include <mhr/bounds.hpp>
#include <mhr/config.hpp>
#include <mhr/integrator.hpp>
#include <mhr/io.hpp>
#include <mhr/verify.hpp>

namespace fs = std::filesystem;

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir = ".";
};

mhr::RunConfig load(const CommonArgs& args) { return mhr::load_config(args.config_path); }

fs::path resolve_out(const CommonArgs& args, const std::string& name) {
  fs::path p(name);
  if (!p.is_absolute()) p = fs::path(args.out_dir) / p;
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  return p;
}

void annotate_defaults(const mhr::RunConfig& rc, mhr::VerificationReport& report) {
  for (const std::string& name : rc.defaulted) {
    const double value = (name == "c") ? rc.params.c : rc.params.eta;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%g (built-in default; not supplied in the configuration)",
                  value);
    report.notes.emplace_back(name, buf);
  }
}

void print_defaults(const mhr::RunConfig& rc) {
  for (const std::string& name : rc.defaulted) {
    const double value = (name == "c") ? rc.params.c : rc.params.eta;
    std::printf("note: %s = %g (built-in default; not supplied in the configuration)\n",
                name.c_str(), value);
  }
}

// The full verification pipeline for one configuration: random ensemble plus
// the constant-data consistency check.
mhr::VerificationReport verify_pipeline(const mhr::RunConfig& rc) {
  const mhr::Grid grid = mhr::grid_from_config(rc.grid);

  mhr::EnsembleOptions opts;
  opts.n_runs = rc.ensemble.n_runs;
  opts.seed = rc.ensemble.seed;
  opts.radius = rc.ensemble.radius;
  opts.tol = rc.tol;
  opts.c_hat = rc.c_hat;
  opts.c_emb = rc.c_emb;

  mhr::VerificationReport report = mhr::run_ensemble(opts, rc.stepper, rc.params, grid);

  const mhr::PointState s0{rc.ode_check.initial[0], rc.ode_check.initial[1],
                           rc.ode_check.initial[2], rc.ode_check.initial[3]};
  const mhr::Grid ode_grid = mhr::make_line(1.0, 8);  // constant data, any box works
  report.checks.push_back(mhr::check_ode_equivalence(s0, rc.ode_check.dt, rc.ode_check.t_end,
                                                     rc.ode_check.scheme, rc.params, ode_grid,
                                                     rc.ode_check.tol));
  annotate_defaults(rc, report);
  return report;
}

void print_report(const mhr::VerificationReport& report) {
  for (const mhr::CheckRecord& rec : report.checks) {
    std::printf("%-26s %s  predicted=%.6g observed=%.6g margin=%.6g", rec.name.c_str(),
                rec.pass ? "PASS" : "FAIL", rec.predicted, rec.observed, rec.margin);
    if (rec.entry_time) std::printf(" entry_time=%.6g", *rec.entry_time);
    std::printf("\n");
  }
  std::printf("overall: %s\n", report.all_pass() ? "PASS" : "FAIL");
}

int cmd_bounds(const CommonArgs& args, std::optional<double> omega,
               std::optional<double> b_norm) {
  const mhr::RunConfig rc = load(args);
  const mhr::Grid grid = mhr::grid_from_config(rc.grid);
  const double om = omega.value_or(grid.measure());
  const double bn = b_norm.value_or(rc.ensemble.radius);
  const mhr::BoundSet bs = mhr::compute_bounds(rc.params, om, bn, rc.c_hat, rc.c_emb);
  std::fputs(mhr::bounds_text(bs).c_str(), stdout);
  print_defaults(rc);
  if (!rc.outputs.report.empty()) {
    const fs::path path = resolve_out(args, rc.outputs.report);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open report output: " + path.string());
    out << mhr::bounds_json(bs);
  }
  return 0;
}

int cmd_simulate(const CommonArgs& args, const std::string& init_path) {
  const mhr::RunConfig rc = load(args);
  const mhr::Grid grid = mhr::grid_from_config(rc.grid);

  mhr::State s0;
  if (!init_path.empty()) {
    mhr::SnapshotData snap = mhr::read_snapshot(init_path);
    if (!(snap.grid == grid)) {
      throw std::runtime_error("initial snapshot grid does not match the configured grid");
    }
    s0 = std::move(snap.state);
  } else {
    s0 = mhr::sample_smooth_state(grid, rc.ensemble.seed, rc.ensemble.radius);
  }

  mhr::StepperConfig cfg = rc.stepper;
  if (!rc.outputs.snapshot_prefix.empty() && cfg.snapshot_stride <= 0) {
    cfg.snapshot_stride = std::max(1L, std::lround(cfg.t_end / cfg.dt / 16.0));
  }
  const mhr::Trajectory traj = mhr::simulate(std::move(s0), cfg, rc.params, grid);

  const std::string monitor_name =
      rc.outputs.monitor.empty() ? std::string("monitor.csv") : rc.outputs.monitor;
  const fs::path monitor_path = resolve_out(args, monitor_name);
  mhr::write_monitor_csv(traj.monitor, monitor_path);

  if (!rc.outputs.snapshot_prefix.empty()) {
    int idx = 0;
    for (const mhr::State& s : traj.snapshots) {
      char name[64];
      std::snprintf(name, sizeof name, "%s_%04d.bin", rc.outputs.snapshot_prefix.c_str(), idx++);
      mhr::write_snapshot(s, grid, resolve_out(args, name));
    }
    std::printf("wrote %d snapshots\n", idx);
  }

  const mhr::MonitorRow& last = traj.monitor.back();
  std::printf("t=%g energy=%.6g sup|u|=%.6g sup|v|=%.6g sup|w|=%.6g sup|rho|=%.6g\n", last.time,
              last.energy, last.linf_u, last.sup_v, last.sup_w, last.sup_rho);
  std::printf("monitor: %s\n", monitor_path.string().c_str());
  print_defaults(rc);
  return 0;
}

int cmd_verify(const CommonArgs& args) {
  const mhr::RunConfig rc = load(args);
  const mhr::VerificationReport report = verify_pipeline(rc);
  print_report(report);
  for (const auto& [key, text] : report.notes) {
    std::printf("note: %s = %s\n", key.c_str(), text.c_str());
  }
  if (!rc.outputs.report.empty()) {
    mhr::write_report(report, resolve_out(args, rc.outputs.report));
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_oracle(const CommonArgs& args, std::optional<double> t_end, std::optional<double> dt) {
  const mhr::RunConfig rc = load(args);
  const double step = dt.value_or(rc.ode_check.dt);
  const double horizon = t_end.value_or(rc.ode_check.t_end);
  const mhr::PointState s0{rc.ode_check.initial[0], rc.ode_check.initial[1],
                           rc.ode_check.initial[2], rc.ode_check.initial[3]};
  const auto series = mhr::simulate_homogeneous(s0, step, horizon, rc.params);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!rc.outputs.monitor.empty()) {
    const fs::path path = resolve_out(args, rc.outputs.monitor);
    file.open(path);
    if (!file) throw std::runtime_error("cannot open oracle output: " + path.string());
    out = &file;
  }
  *out << "t,u,v,w,rho\n";
  char line[200];
  for (const auto& sample : series) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", sample.time,
                  sample.state.u, sample.state.v, sample.state.w, sample.state.rho);
    *out << line;
  }
  return 0;
}

struct SweepResult {
  double value = 0.0;
  bool ok = false;
  bool error = false;
  std::string error_text;
  std::string worst_check;
  double min_margin = 0.0;
};

int cmd_sweep(const CommonArgs& args, const std::string& param, const std::string& values_csv) {
  const mhr::RunConfig base = load(args);

  std::vector<double> values;
  std::stringstream ss(values_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) values.push_back(std::stod(item));
  }
  if (values.empty()) throw std::runtime_error("sweep: --values is empty");

  const auto patched = [&](double value) {
    mhr::RunConfig rc = base;
    if (param == "radius") {
      rc.ensemble.radius = value;
    } else if (param == "dt") {
      rc.stepper.dt = value;
    } else if (param == "t_end") {
      rc.stepper.t_end = value;
    } else if (param == "C_hat") {
      rc.c_hat = value;
    } else if (param == "C_emb") {
      rc.c_emb = value;
    } else {
      double* slot = nullptr;
      mhr::ModelParameters& p = rc.params;
      const std::pair<const char*, double*> slots[] = {
          {"eta", &p.eta},     {"a", &p.a},     {"b", &p.b},       {"alpha", &p.alpha},
          {"beta", &p.beta},   {"q", &p.q},     {"r", &p.r},       {"u_e", &p.u_e},
          {"J_e", &p.J_e},     {"k1", &p.k1},   {"k2", &p.k2},     {"c", &p.c},
          {"gamma", &p.gamma}, {"delta", &p.delta},
      };
      for (const auto& [name, ptr] : slots) {
        if (param == name) slot = ptr;
      }
      if (!slot) throw std::runtime_error("sweep: unknown parameter " + param);
      *slot = value;
    }
    const auto bad = mhr::invalid_parameters(rc.params);
    if (!bad.empty()) {
      throw std::runtime_error("sweep: value " + std::to_string(value) + " makes " + bad.front() +
                               " non-admissible");
    }
    return rc;
  };

  // One verification pipeline per value, run concurrently.
  std::vector<std::future<SweepResult>> futures;
  for (double value : values) {
    futures.push_back(std::async(std::launch::async, [&, value] {
      SweepResult res;
      res.value = value;
      try {
        const mhr::RunConfig rc = patched(value);
        const mhr::VerificationReport report = verify_pipeline(rc);
        res.ok = report.all_pass();
        res.min_margin = std::numeric_limits<double>::infinity();
        for (const mhr::CheckRecord& rec : report.checks) {
          if (rec.margin < res.min_margin) {
            res.min_margin = rec.margin;
            res.worst_check = rec.name;
          }
        }
        char dirname[64];
        std::snprintf(dirname, sizeof dirname, "%s=%g", param.c_str(), value);
        const fs::path dir = fs::path(args.out_dir) / dirname;
        fs::create_directories(dir);
        mhr::write_report(report, dir / "report.json");
      } catch (const std::exception& e) {
        res.error = true;
        res.error_text = e.what();
      }
      return res;
    }));
  }

  bool all_ok = true;
  std::printf("%-14s %-8s %-26s %s\n", param.c_str(), "result", "worst_check", "min_margin");
  for (auto& fut : futures) {
    const SweepResult res = fut.get();
    if (res.error) {
      all_ok = false;
      std::printf("%-14g %-8s %s\n", res.value, "ERROR", res.error_text.c_str());
    } else {
      all_ok = all_ok && res.ok;
      std::printf("%-14g %-8s %-26s %.6g\n", res.value, res.ok ? "PASS" : "FAIL",
                  res.worst_check.c_str(), res.min_margin);
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulation and certificate verification for the memristive "
               "Hindmarsh-Rose reaction-diffusion system"};
  app.require_subcommand(1);

  CommonArgs common;
  std::optional<double> omega_override, b_norm_override, t_end_override, dt_override;
  std::string init_path, sweep_param, sweep_values;

  const auto add_common = [&common](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "JSON run configuration")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--out-dir", common.out_dir, "directory for output files");
  };

  CLI::App* bounds = app.add_subcommand("bounds", "print the closed-form bound constants");
  add_common(bounds);
  bounds->add_option("--omega", omega_override, "domain measure override");
  bounds->add_option("--b-norm", b_norm_override, "initial-ball norm radius override");

  CLI::App* simulate = app.add_subcommand("simulate", "integrate one trajectory");
  add_common(simulate);
  simulate->add_option("--init", init_path, "initial state snapshot (default: seeded sample)")
      ->check(CLI::ExistingFile);

  CLI::App* verify = app.add_subcommand("verify", "check certificates on a random ensemble");
  add_common(verify);

  CLI::App* oracle = app.add_subcommand("oracle", "homogeneous Runge-Kutta reference series");
  add_common(oracle);
  oracle->add_option("--t-end", t_end_override, "horizon override");
  oracle->add_option("--dt", dt_override, "step size override");

  CLI::App* sweep = app.add_subcommand("sweep", "verify across one parameter's values");
  add_common(sweep);
  sweep->add_option("--param", sweep_param, "parameter name")->required();
  sweep->add_option("--values", sweep_values, "comma-separated values")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (bounds->parsed()) return cmd_bounds(common, omega_override, b_norm_override);
    if (simulate->parsed()) return cmd_simulate(common, init_path);
    if (verify->parsed()) return cmd_verify(common);
    if (oracle->parsed()) return cmd_oracle(common, t_end_override, dt_override);
    if (sweep->parsed()) return cmd_sweep(common, sweep_param, sweep_values);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
