#include "uavplan/io/config.hpp"

#include <fstream>

#include "uavplan/errors.hpp"

namespace uavplan::io {
namespace {

template <typename T>
T get_or(const nlohmann::json& j, const char* key, T fallback) {
  if (!j.contains(key) || j.at(key).is_null()) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw PlanError(ErrorKind::InvalidInput, std::string("config key '") + key + "' has the wrong type");
  }
}

struct AirframeField {
  const char* key;
  double AirframeParams::*member;
};

constexpr AirframeField kAirframeFields[] = {
    {"weight_newton", &AirframeParams::weight_newton},
    {"rotor_radius_m", &AirframeParams::rotor_radius_m},
    {"air_density_kg_m3", &AirframeParams::air_density_kg_m3},
    {"disc_area_m2", &AirframeParams::disc_area_m2},
    {"blade_angular_velocity_rad_s", &AirframeParams::blade_angular_velocity_rad_s},
    {"tip_speed_m_s", &AirframeParams::tip_speed_m_s},
    {"blade_count", &AirframeParams::blade_count},
    {"chord_m", &AirframeParams::chord_m},
    {"rotor_solidity", &AirframeParams::rotor_solidity},
    {"induced_power_correction", &AirframeParams::induced_power_correction},
    {"hover_induced_velocity_m_s", &AirframeParams::hover_induced_velocity_m_s},
    {"profile_drag_coeff", &AirframeParams::profile_drag_coeff},
    {"flat_plate_area_m2", &AirframeParams::flat_plate_area_m2},
    {"fuselage_drag_ratio", &AirframeParams::fuselage_drag_ratio},
    {"battery_energy_wh", &AirframeParams::battery_energy_wh},
};

}  // namespace

const char* to_string(EpsilonMode mode) {
  switch (mode) {
    case EpsilonMode::Override: return "override";
    case EpsilonMode::Floor: return "floor";
    case EpsilonMode::Nearest: return "nearest";
  }
  return "override";
}

EpsilonMode epsilon_mode_from_string(const std::string& s) {
  if (s == "override") return EpsilonMode::Override;
  if (s == "floor") return EpsilonMode::Floor;
  if (s == "nearest") return EpsilonMode::Nearest;
  throw PlanError(ErrorKind::InvalidInput, "unknown epsilon mode '" + s + "'");
}

nlohmann::json to_json(const AirframeParams& a) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& f : kAirframeFields) j[f.key] = a.*(f.member);
  return j;
}

AirframeParams airframe_from_json(const nlohmann::json& j, const AirframeParams& defaults) {
  AirframeParams a = defaults;
  for (const auto& f : kAirframeFields) a.*(f.member) = get_or<double>(j, f.key, a.*(f.member));
  return a;
}

nlohmann::json to_json(const UavSpec& s) {
  return {{"u_max", s.u_max}, {"u_wind", s.u_wind}, {"p", s.p}, {"d", s.d}, {"t_max_s", s.t_max_s}};
}

UavSpec uav_spec_from_json(const nlohmann::json& j) {
  UavSpec s;
  s.u_max = get_or<double>(j, "u_max", s.u_max);
  s.u_wind = get_or<double>(j, "u_wind", s.u_wind);
  s.p = get_or<int>(j, "p", s.p);
  s.d = get_or<double>(j, "d", s.d);
  s.t_max_s = get_or<double>(j, "t_max_s", s.t_max_s);
  return s;
}

PlannerConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw PlanError(ErrorKind::InvalidInput, "config must be a JSON object");
  PlannerConfig c;
  if (j.contains("uav")) c.uav = uav_spec_from_json(j.at("uav"));
  if (j.contains("airframe")) c.airframe = airframe_from_json(j.at("airframe"), c.airframe);
  if (j.contains("range")) {
    const auto& r = j.at("range");
    c.range.mu = get_or<int>(r, "mu", c.range.mu);
    c.range.epsilon_mode =
        epsilon_mode_from_string(get_or<std::string>(r, "epsilon_mode", to_string(c.range.epsilon_mode)));
    if (r.contains("epsilon_v")) {
      c.range.epsilon_v = r.at("epsilon_v").is_null() ? std::nullopt
                                                      : std::optional<double>(get_or<double>(r, "epsilon_v", 0.0));
    }
    c.range.gust_factor = get_or<double>(r, "gust_factor", c.range.gust_factor);
    c.range.granularity = get_or<double>(r, "granularity", c.range.granularity);
  }
  if (j.contains("projection")) {
    const auto& p = j.at("projection");
    if (p.contains("ref_lat_deg") && !p.at("ref_lat_deg").is_null())
      c.projection.ref_lat_deg = get_or<double>(p, "ref_lat_deg", 0.0);
  }
  validate(c);
  return c;
}

nlohmann::json to_json(const PlannerConfig& c) {
  nlohmann::json j;
  j["uav"] = to_json(c.uav);
  j["airframe"] = to_json(c.airframe);
  j["range"] = {{"mu", c.range.mu},
                {"epsilon_mode", to_string(c.range.epsilon_mode)},
                {"epsilon_v", c.range.epsilon_v ? nlohmann::json(*c.range.epsilon_v) : nlohmann::json()},
                {"gust_factor", c.range.gust_factor},
                {"granularity", c.range.granularity}};
  j["projection"] = {{"ref_lat_deg", c.projection.ref_lat_deg ? nlohmann::json(*c.projection.ref_lat_deg)
                                                               : nlohmann::json()}};
  return j;
}

void validate(const PlannerConfig& c) {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0)) throw PlanError(ErrorKind::InvalidInput, std::string(name) + " must be positive");
  };
  positive(c.uav.u_max, "uav.u_max");
  positive(c.uav.u_wind, "uav.u_wind");
  positive(c.uav.d, "uav.d");
  positive(c.uav.t_max_s, "uav.t_max_s");
  if (c.uav.p < 1) throw PlanError(ErrorKind::InvalidInput, "uav.p must be >= 1");
  if (c.range.mu < 4) throw PlanError(ErrorKind::InvalidInput, "range.mu must be >= 4");
  if (c.range.epsilon_v && *c.range.epsilon_v < 0.0)
    throw PlanError(ErrorKind::InvalidInput, "range.epsilon_v must be non-negative");
  positive(c.range.granularity, "range.granularity");
  if (!(c.range.gust_factor >= 1.0)) throw PlanError(ErrorKind::InvalidInput, "range.gust_factor must be >= 1");
  validate(c.airframe);
}

PlannerConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PlanError(ErrorKind::IoError, "cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw PlanError(ErrorKind::InvalidInput, "config " + path + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace uavplan::io
