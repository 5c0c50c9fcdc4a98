#include "peakon/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>

namespace peakon {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Field InitialData::build(const PeriodicGrid& grid, const std::optional<Field>& u0) const {
  Field f = Field::zeros(grid);
  switch (kind) {
    case Kind::Zero:
      break;
    case Kind::Modes:
      for (const auto& [k, ca, sa] : modes) {
        f += Field::harmonic(grid, static_cast<int>(k), ca, sa);
      }
      break;
    case Kind::Peakon:
      f = peakon_profile(peakon_c, 0.0, grid);
      break;
    case Kind::SameAsU0:
      if (!u0) throw std::invalid_argument("initial data: same_as_u0 used for u0 itself");
      f = *u0;
      break;
    case Kind::ReflectU0:
      if (!u0) throw std::invalid_argument("initial data: reflect_u0 used for u0 itself");
      f = reflect(*u0);
      break;
  }
  if (mollify_eps > 0.0) f = mollify(f, mollify_eps);
  return f;
}

ordered_json InitialData::to_json() const {
  ordered_json j;
  switch (kind) {
    case Kind::Zero:
      j["kind"] = "zero";
      break;
    case Kind::Modes: {
      j["kind"] = "modes";
      json rows = json::array();
      for (const auto& m : modes) rows.push_back({m[0], m[1], m[2]});
      j["modes"] = rows;
      break;
    }
    case Kind::Peakon:
      j["kind"] = "peakon";
      j["c"] = peakon_c;
      break;
    case Kind::SameAsU0:
      j["kind"] = "same_as_u0";
      break;
    case Kind::ReflectU0:
      j["kind"] = "reflect_u0";
      break;
  }
  j["mollify_eps"] = mollify_eps;
  return j;
}

InitialData InitialData::from_json(const json& j, const char* key) {
  InitialData d;
  if (!j.is_object() || !j.contains("kind")) {
    throw std::invalid_argument(std::string("config: ") + key +
                                " must be an object with a \"kind\" field");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zero") {
    d.kind = Kind::Zero;
  } else if (kind == "modes") {
    d.kind = Kind::Modes;
    for (const auto& row : j.at("modes")) {
      if (!row.is_array() || row.size() != 3) {
        throw std::invalid_argument(std::string("config: ") + key +
                                    ".modes rows must be [k, cos_amp, sin_amp]");
      }
      d.modes.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
  } else if (kind == "peakon") {
    d.kind = Kind::Peakon;
    d.peakon_c = j.at("c").get<double>();
  } else if (kind == "same_as_u0") {
    d.kind = Kind::SameAsU0;
  } else if (kind == "reflect_u0") {
    d.kind = Kind::ReflectU0;
  } else {
    throw std::invalid_argument(std::string("config: unknown ") + key + ".kind \"" + kind +
                                "\"");
  }
  d.mollify_eps = j.value("mollify_eps", 0.0);
  return d;
}

std::string InitialData::describe() const {
  switch (kind) {
    case Kind::Zero:
      return "zero";
    case Kind::Modes: {
      std::string s = "trigonometric modes";
      for (const auto& m : modes) {
        s += " [k=" + format_double(m[0]) + ", cos=" + format_double(m[1]) +
             ", sin=" + format_double(m[2]) + "]";
      }
      return s;
    }
    case Kind::Peakon:
      return "periodized peakon, c = " + format_double(peakon_c);
    case Kind::SameAsU0:
      return "same as u0";
    case Kind::ReflectU0:
      return "u0 reflected through x -> -x";
  }
  return "?";
}

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) {
      throw std::invalid_argument("config: unknown key \"" + key + "\" in " + where);
    }
  }
}

}  // namespace

RunSpec parse_config_json(const json& j) {
  reject_unknown_keys(j,
                      {"s", "delta0", "c_s", "eps", "dt", "t_final", "n_points", "record_every",
                       "cfl", "allow_beyond_lifespan", "u0", "v0", "sweep"},
                      "config");
  RunSpec spec;
  spec.solve.s = j.value("s", 3.0);
  spec.solve.delta0 = j.value("delta0", 0.5);
  spec.solve.c_s = j.value("c_s", 0.0);
  spec.solve.eps = j.value("eps", 0.0);
  spec.solve.dt = j.value("dt", 0.0);
  spec.solve.t_final = j.value("t_final", 0.0);
  spec.solve.n_points = j.value("n_points", 128);
  spec.solve.record_every = j.value("record_every", 1);
  spec.solve.cfl = j.value("cfl", 0.3);
  spec.solve.allow_beyond_lifespan = j.value("allow_beyond_lifespan", false);

  spec.u0 = j.contains("u0") ? InitialData::from_json(j.at("u0"), "u0") : InitialData{};
  if (spec.u0.kind == InitialData::Kind::SameAsU0 ||
      spec.u0.kind == InitialData::Kind::ReflectU0) {
    throw std::invalid_argument("config: u0 cannot reference itself");
  }
  spec.v0 = j.contains("v0") ? InitialData::from_json(j.at("v0"), "v0") : InitialData{};

  if (j.contains("sweep")) {
    const json& sj = j.at("sweep");
    reject_unknown_keys(sj, {"mode", "x", "rho", "deltas", "eps_region", "record_every"},
                        "sweep");
    SweepConfig sc;
    const std::string mode = sj.value("mode", "gamma");
    if (mode == "gamma") {
      sc.mu_mode = false;
    } else if (mode == "mu") {
      sc.mu_mode = true;
    } else {
      throw std::invalid_argument("config: sweep.mode must be \"gamma\" or \"mu\"");
    }
    sc.s = spec.solve.s;
    sc.delta0 = spec.solve.delta0;
    sc.c_s = spec.solve.c_s;
    sc.cfl = spec.solve.cfl;
    sc.x = sj.at("x").get<double>();
    sc.rho = sj.value("rho", 0.0);
    sc.eps_region = sj.value("eps_region", -1.0);
    sc.record_every = sj.value("record_every", 1);
    for (const auto& d : sj.at("deltas")) sc.deltas.push_back(d.get<double>());
    spec.sweep = sc;
  }
  return spec;
}

RunSpec parse_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open \"" + path.string() + "\"");
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("config: \"" + path.string() + "\" is not valid JSON: " +
                                e.what());
  }
  return parse_config_json(j);
}

ordered_json resolved_config(const RunSpec& spec) {
  // resolve the deferred defaults to the numbers the run will use
  const double c_s = spec.solve.c_s > 0.0 ? spec.solve.c_s : calibrated_cs();
  const PeriodicGrid grid(spec.solve.n_points);
  const Field u0 = spec.u0.build(grid, std::nullopt);
  const Field v0 = spec.v0.build(grid, u0);
  const double dt = spec.solve.dt > 0.0 ? spec.solve.dt : auto_dt(u0, v0, spec.solve.cfl);

  ordered_json cfg;
  cfg["s"] = spec.solve.s;
  cfg["delta0"] = spec.solve.delta0;
  cfg["c_s"] = c_s;
  cfg["eps"] = spec.solve.eps;
  cfg["dt"] = dt;
  cfg["t_final"] = spec.solve.t_final;
  cfg["n_points"] = spec.solve.n_points;
  cfg["record_every"] = spec.solve.record_every;
  cfg["cfl"] = spec.solve.cfl;
  cfg["allow_beyond_lifespan"] = spec.solve.allow_beyond_lifespan;
  cfg["u0"] = spec.u0.to_json();
  cfg["v0"] = spec.v0.to_json();
  if (spec.sweep) {
    ordered_json sj;
    sj["mode"] = spec.sweep->mu_mode ? "mu" : "gamma";
    sj["x"] = spec.sweep->x;
    sj["rho"] = spec.sweep->rho;
    sj["deltas"] = spec.sweep->deltas;
    sj["eps_region"] = spec.sweep->eps_region;
    sj["record_every"] = spec.sweep->record_every;
    cfg["sweep"] = sj;
  }
  return cfg;
}

ordered_json make_manifest(const std::string& command, const RunSpec& spec) {
  ordered_json m;
  m["command"] = command;
  m["version"] = kVersion;
  m["seed"] = 0;  // default experiments are fully deterministic
  m["input"] = "u0: " + spec.u0.describe() + "; v0: " + spec.v0.describe();
  m["config"] = resolved_config(spec);
  return m;
}

void write_manifest(const fs::path& out_dir, const ordered_json& manifest) {
  fs::create_directories(out_dir);
  std::ofstream out(out_dir / "manifest.json");
  if (!out) {
    throw std::runtime_error("cannot write " + (out_dir / "manifest.json").string());
  }
  out << manifest.dump(2) << "\n";
}

void write_trajectory_csv(const fs::path& out_dir, const Trajectory& traj) {
  std::ofstream out(out_dir / "trajectory.csv");
  out << "t,norm_u_Hs,norm_v_Hs,norm_UV_Hs1,H1,H2,consistency_residual\n";
  for (size_t i = 0; i < traj.times.size(); ++i) {
    out << format_double(traj.times[i]) << ',' << format_double(traj.norm_u[i]) << ','
        << format_double(traj.norm_v[i]) << ',' << format_double(traj.norm_uv_pair[i]) << ','
        << format_double(traj.h1[i]) << ',' << format_double(traj.h2[i]) << ','
        << format_double(traj.consistency[i]) << '\n';
  }
}

void write_field_snapshots(const fs::path& out_dir, const Trajectory& traj) {
  for (size_t i = 0; i < traj.states.size(); ++i) {
    std::ofstream out(out_dir / ("fields_" + std::to_string(i) + ".csv"));
    out << "x,u,w,v,z\n";
    const State& st = traj.states[i];
    for (int j = 0; j < st.grid().size(); ++j) {
      out << format_double(st.grid().node(j)) << ',' << format_double(st.u.sample(j)) << ','
          << format_double(st.w.sample(j)) << ',' << format_double(st.v.sample(j)) << ','
          << format_double(st.z.sample(j)) << '\n';
    }
  }
}

void write_sweep_csv(const fs::path& out_dir, const SweepResult& res) {
  std::ofstream out(out_dir / "sweep.csv");
  out << "delta,distance,log_delta,log_distance\n";
  for (size_t i = 0; i < res.deltas.size(); ++i) {
    const double ld = res.deltas[i] > 0.0 ? std::log(res.deltas[i]) : 0.0;
    const double lx = res.distances[i] > 0.0 ? std::log(res.distances[i]) : 0.0;
    out << format_double(res.deltas[i]) << ',' << format_double(res.distances[i]) << ','
        << format_double(ld) << ',' << format_double(lx) << '\n';
  }
}

ordered_json sweep_summary(const SweepResult& res, double slope_floor) {
  ordered_json j;
  j["fitted_slope"] = res.fitted_slope;
  j["predicted_exponent"] = res.predicted_exponent;
  j["region"] = res.region_id;
  j["rho"] = res.rho;
  j["horizon"] = res.horizon;
  j["slope_floor"] = slope_floor;
  j["pass"] = !res.aborted && res.fitted_slope >= slope_floor;
  j["aborted"] = res.aborted;
  return j;
}

}  // namespace peakon
