#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "peakon/experiments.hpp"

namespace peakon {

inline constexpr const char* kVersion = "0.1.0";

// Declarative initial data, reproducible from the manifest alone.
struct InitialData {
  enum class Kind { Zero, Modes, Peakon, SameAsU0, ReflectU0 };
  Kind kind = Kind::Zero;
  // rows [k, cos_amp, sin_amp]
  std::vector<std::array<double, 3>> modes;
  double peakon_c = 1.0;
  double mollify_eps = 0.0;  // optional J_eps applied to the built field

  Field build(const PeriodicGrid& grid, const std::optional<Field>& u0) const;
  nlohmann::ordered_json to_json() const;
  static InitialData from_json(const nlohmann::json& j, const char* key);
  std::string describe() const;
};

struct RunSpec {
  SolveConfig solve;
  InitialData u0;
  InitialData v0;
  std::optional<SweepConfig> sweep;
};

// Parses the flat-key JSON config; unknown keys are rejected to keep
// manifests honest. Throws std::invalid_argument with a diagnostic.
RunSpec parse_config(const std::filesystem::path& path);
RunSpec parse_config_json(const nlohmann::json& j);

// Fully materialized config: every default spelled out, c_s and dt resolved
// to the numbers the run will actually use.
nlohmann::ordered_json resolved_config(const RunSpec& spec);

nlohmann::ordered_json make_manifest(const std::string& command, const RunSpec& spec);

// manifest.json is always the first file written into the run directory.
void write_manifest(const std::filesystem::path& out_dir, const nlohmann::ordered_json& manifest);

// trajectory.csv: t,norm_u_Hs,norm_v_Hs,norm_UV_Hs1,H1,H2,consistency_residual
void write_trajectory_csv(const std::filesystem::path& out_dir, const Trajectory& traj);

// fields_<index>.csv: x,u,w,v,z (one file per recorded state)
void write_field_snapshots(const std::filesystem::path& out_dir, const Trajectory& traj);

// sweep.csv: delta,distance,log_delta,log_distance
void write_sweep_csv(const std::filesystem::path& out_dir, const SweepResult& res);

nlohmann::ordered_json sweep_summary(const SweepResult& res, double slope_floor);

// Round-trip-exact float formatting (17 significant digits) shared by every
// CSV writer.
std::string format_double(double v);

}  // namespace peakon
