#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "uavplan/endurance.hpp"
#include "uavplan/flying_range.hpp"

namespace uavplan::io {

struct UavSpec {
  double u_max = 16.0;     // m/s
  double u_wind = 15.0;    // m/s
  int p = 5;               // turbines per UAV
  double d = 5000.0;       // communication distance, m
  double t_max_s = 1200.0; // planning endurance, s

  friend bool operator==(const UavSpec&, const UavSpec&) = default;
};

struct RangeConfig {
  int mu = 36;
  EpsilonMode epsilon_mode = EpsilonMode::Override;
  std::optional<double> epsilon_v = 8.0;
  double gust_factor = 2.0;
  double granularity = 1.0;
};

struct ProjectionConfig {
  std::optional<double> ref_lat_deg;  // layout centroid when absent
};

struct PlannerConfig {
  UavSpec uav;
  AirframeParams airframe = reference_airframe();
  RangeConfig range;
  ProjectionConfig projection;
};

/// Missing keys take defaults. Throws InvalidInput on bad values.
PlannerConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PlannerConfig& config);
nlohmann::json to_json(const UavSpec& spec);
UavSpec uav_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AirframeParams& a);
AirframeParams airframe_from_json(const nlohmann::json& j, const AirframeParams& defaults);
void validate(const PlannerConfig& config);

PlannerConfig load_config(const std::string& path);

const char* to_string(EpsilonMode mode);
EpsilonMode epsilon_mode_from_string(const std::string& s);

}  // namespace uavplan::io
