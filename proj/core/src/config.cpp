#include <mhr/config.hpp>

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mhr {

namespace {

using nlohmann::json;

const char* const kRequiredParams[] = {"a",  "b",  "alpha", "beta",  "q",    "r",
                                       "u_e", "J_e", "k1",    "k2",    "gamma", "delta"};

// Parameters that must be strictly positive in a config.  u_e and gamma may
// take any sign; c may too (its absolute value enters the bounds).
const char* const kPositiveParams[] = {"eta", "a",  "b",  "alpha", "beta", "q",
                                       "r",   "J_e", "k1", "k2",    "delta"};

struct Problems {
  std::vector<std::string> missing;
  std::vector<std::string> bad;

  void raise_if_any() const {
    if (missing.empty() && bad.empty()) return;
    std::ostringstream msg;
    msg << "invalid configuration";
    if (!missing.empty()) {
      msg << "; missing required keys:";
      for (const auto& k : missing) msg << " " << k;
    }
    for (const auto& b : bad) msg << "; " << b;
    throw ConfigError(msg.str());
  }
};

double get_number(const json& j, const std::string& key, Problems& problems, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) {
    problems.bad.push_back(key + " must be a number");
    return fallback;
  }
  return j.at(key).get<double>();
}

double* param_slot(ModelParameters& p, const std::string& name) {
  if (name == "eta") return &p.eta;
  if (name == "a") return &p.a;
  if (name == "b") return &p.b;
  if (name == "alpha") return &p.alpha;
  if (name == "beta") return &p.beta;
  if (name == "q") return &p.q;
  if (name == "r") return &p.r;
  if (name == "u_e") return &p.u_e;
  if (name == "J_e") return &p.J_e;
  if (name == "k1") return &p.k1;
  if (name == "k2") return &p.k2;
  if (name == "c") return &p.c;
  if (name == "gamma") return &p.gamma;
  if (name == "delta") return &p.delta;
  return nullptr;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("configuration is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("configuration must be a JSON object");

  Problems problems;
  RunConfig rc;

  // --- model parameters (flat keys) ---------------------------------------
  for (const char* name : kRequiredParams) {
    if (!doc.contains(name)) {
      problems.missing.emplace_back(name);
    } else if (!doc.at(name).is_number()) {
      problems.bad.push_back(std::string(name) + " must be a number");
    } else {
      *param_slot(rc.params, name) = doc.at(name).get<double>();
    }
  }
  for (const char* name : {"c", "eta"}) {
    if (doc.contains(name)) {
      if (!doc.at(name).is_number()) {
        problems.bad.push_back(std::string(name) + " must be a number");
      } else {
        *param_slot(rc.params, name) = doc.at(name).get<double>();
      }
    } else {
      rc.defaulted.emplace_back(name);
    }
  }
  for (const char* name : kPositiveParams) {
    if (doc.contains(name) && doc.at(name).is_number() &&
        !(doc.at(name).get<double>() > 0.0)) {
      problems.bad.push_back(std::string(name) + " must be strictly positive");
    }
  }

  if (doc.contains("memristance_kind")) {
    const auto kind = doc.at("memristance_kind");
    if (kind == "quadratic") {
      rc.params.memristance_kind = MemristanceKind::Quadratic;
    } else if (kind == "tanh") {
      rc.params.memristance_kind = MemristanceKind::Tanh;
    } else {
      problems.bad.emplace_back("memristance_kind must be \"quadratic\" or \"tanh\"");
    }
  }
  if (doc.contains("diffusion_scheme")) {
    const auto scheme = doc.at("diffusion_scheme");
    if (scheme == "backward_euler") {
      rc.stepper.scheme = DiffusionScheme::BackwardEuler;
    } else if (scheme == "crank_nicolson") {
      rc.stepper.scheme = DiffusionScheme::CrankNicolson;
    } else {
      problems.bad.emplace_back(
          "diffusion_scheme must be \"backward_euler\" or \"crank_nicolson\"");
    }
  }

  rc.c_hat = get_number(doc, "C_hat", problems, 1.0);
  rc.c_emb = get_number(doc, "C_emb", problems, 1.0);
  rc.tol = get_number(doc, "tolerance", problems, 1e-6);
  if (!(rc.c_hat > 0.0)) problems.bad.emplace_back("C_hat must be strictly positive");
  if (!(rc.c_emb > 0.0)) problems.bad.emplace_back("C_emb must be strictly positive");
  if (rc.tol < 0.0) problems.bad.emplace_back("tolerance must be nonnegative");

  // --- grid ----------------------------------------------------------------
  if (!doc.contains("grid")) {
    problems.missing.emplace_back("grid");
  } else if (!doc.at("grid").is_object()) {
    problems.bad.emplace_back("grid must be an object");
  } else {
    const json& jg = doc.at("grid");
    bool grid_ok = true;
    try {
      if (!jg.contains("lengths") || !jg.at("lengths").is_array()) {
        problems.bad.emplace_back("grid.lengths must be an array of box edge lengths");
        grid_ok = false;
      } else {
        rc.grid.lengths = jg.at("lengths").get<std::vector<double>>();
      }
      if (!jg.contains("cells") || !jg.at("cells").is_array()) {
        problems.bad.emplace_back("grid.cells must be an array of cell counts");
        grid_ok = false;
      } else {
        rc.grid.cells = jg.at("cells").get<std::vector<int>>();
      }
    } catch (const json::exception& e) {
      problems.bad.emplace_back(std::string("grid: ") + e.what());
      grid_ok = false;
    }
    if (grid_ok) {
      try {
        (void)make_grid(rc.grid.lengths, rc.grid.cells);
      } catch (const std::invalid_argument& e) {
        problems.bad.emplace_back(e.what());
      }
    }
  }

  // --- stepper ---------------------------------------------------------------
  if (!doc.contains("stepper")) {
    problems.missing.emplace_back("stepper");
  } else if (!doc.at("stepper").is_object()) {
    problems.bad.emplace_back("stepper must be an object");
  } else {
    const json& js = doc.at("stepper");
    try {
      rc.stepper.dt = get_number(js, "dt", problems, rc.stepper.dt);
      rc.stepper.t_end = get_number(js, "t_end", problems, rc.stepper.t_end);
      if (!js.contains("dt")) problems.missing.emplace_back("stepper.dt");
      if (!js.contains("t_end")) problems.missing.emplace_back("stepper.t_end");
      if (js.contains("monitor_stride")) {
        rc.stepper.monitor_stride = js.at("monitor_stride").get<int>();
      }
      if (js.contains("snapshot_stride")) {
        rc.stepper.snapshot_stride = js.at("snapshot_stride").get<int>();
      }
      if (js.contains("dt") && !(rc.stepper.dt > 0.0)) {
        problems.bad.emplace_back("stepper.dt must be strictly positive");
      }
      if (js.contains("t_end") && rc.stepper.t_end < 0.0) {
        problems.bad.emplace_back("stepper.t_end must be nonnegative");
      }
      if (rc.stepper.monitor_stride < 1) {
        problems.bad.emplace_back("stepper.monitor_stride must be at least 1");
      }
    } catch (const json::exception& e) {
      problems.bad.emplace_back(std::string("stepper: ") + e.what());
    }
  }

  // --- optional blocks -------------------------------------------------------
  if (doc.contains("ensemble")) {
    const json& je = doc.at("ensemble");
    try {
      if (je.contains("n_runs")) rc.ensemble.n_runs = je.at("n_runs").get<int>();
      if (je.contains("seed")) rc.ensemble.seed = je.at("seed").get<std::uint64_t>();
      rc.ensemble.radius = get_number(je, "radius", problems, rc.ensemble.radius);
      if (rc.ensemble.n_runs < 1) problems.bad.emplace_back("ensemble.n_runs must be at least 1");
      if (rc.ensemble.radius < 0.0) {
        problems.bad.emplace_back("ensemble.radius must be nonnegative");
      }
    } catch (const json::exception& e) {
      problems.bad.emplace_back(std::string("ensemble: ") + e.what());
    }
  }

  if (doc.contains("ode_check")) {
    const json& jo = doc.at("ode_check");
    try {
      rc.ode_check.dt = get_number(jo, "dt", problems, rc.ode_check.dt);
      rc.ode_check.t_end = get_number(jo, "t_end", problems, rc.ode_check.t_end);
      rc.ode_check.tol = get_number(jo, "tol", problems, rc.ode_check.tol);
      if (jo.contains("initial")) {
        const auto init = jo.at("initial").get<std::vector<double>>();
        if (init.size() != 4) {
          problems.bad.emplace_back(
              "ode_check.initial must list the four components u, v, w, rho");
        } else {
          std::copy(init.begin(), init.end(), rc.ode_check.initial.begin());
        }
      }
      if (jo.contains("scheme")) {
        const auto scheme = jo.at("scheme");
        if (scheme == "backward_euler") {
          rc.ode_check.scheme = DiffusionScheme::BackwardEuler;
        } else if (scheme == "crank_nicolson") {
          rc.ode_check.scheme = DiffusionScheme::CrankNicolson;
        } else {
          problems.bad.emplace_back(
              "ode_check.scheme must be \"backward_euler\" or \"crank_nicolson\"");
        }
      }
      if (!(rc.ode_check.dt > 0.0)) {
        problems.bad.emplace_back("ode_check.dt must be strictly positive");
      }
      if (rc.ode_check.t_end < 0.0) {
        problems.bad.emplace_back("ode_check.t_end must be nonnegative");
      }
      if (!(rc.ode_check.tol > 0.0)) {
        problems.bad.emplace_back("ode_check.tol must be strictly positive");
      }
    } catch (const json::exception& e) {
      problems.bad.emplace_back(std::string("ode_check: ") + e.what());
    }
  }

  if (doc.contains("outputs")) {
    const json& jo = doc.at("outputs");
    try {
      if (jo.contains("monitor")) rc.outputs.monitor = jo.at("monitor").get<std::string>();
      if (jo.contains("report")) rc.outputs.report = jo.at("report").get<std::string>();
      if (jo.contains("snapshot_prefix")) {
        rc.outputs.snapshot_prefix = jo.at("snapshot_prefix").get<std::string>();
      }
    } catch (const json::exception& e) {
      problems.bad.emplace_back(std::string("outputs: ") + e.what());
    }
  }

  problems.raise_if_any();
  return rc;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open configuration file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

Grid grid_from_config(const GridConfig& gc) { return make_grid(gc.lengths, gc.cells); }

}  // namespace mhr
