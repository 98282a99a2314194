#include "uavplan/endurance.hpp"

#include <cmath>
#include <cstdio>

#include "uavplan/errors.hpp"
#include "uavplan/geometry.hpp"

namespace uavplan {

AirframeParams reference_airframe() {
  AirframeParams a;
  a.weight_newton = 16.0;
  a.rotor_radius_m = 0.1016;
  a.air_density_kg_m3 = 1.2250;
  a.disc_area_m2 = 0.0314;
  a.blade_angular_velocity_rad_s = 300.0;
  a.tip_speed_m_s = 30.0;
  a.blade_count = 8.0;
  a.chord_m = 0.09;
  a.rotor_solidity = 2.5464;
  a.induced_power_correction = 0.1;
  a.hover_induced_velocity_m_s = 14.4179;
  a.profile_drag_coeff = 0.0120;
  a.flat_plate_area_m2 = 0.0063;
  a.fuselage_drag_ratio = 0.0787;
  a.battery_energy_wh = 71.0;
  return a;
}

void validate(const AirframeParams& p) {
  const struct {
    const char* name;
    double value;
  } fields[] = {
      {"weight_newton", p.weight_newton},
      {"rotor_radius_m", p.rotor_radius_m},
      {"air_density_kg_m3", p.air_density_kg_m3},
      {"disc_area_m2", p.disc_area_m2},
      {"blade_angular_velocity_rad_s", p.blade_angular_velocity_rad_s},
      {"tip_speed_m_s", p.tip_speed_m_s},
      {"blade_count", p.blade_count},
      {"chord_m", p.chord_m},
      {"rotor_solidity", p.rotor_solidity},
      {"induced_power_correction", p.induced_power_correction},
      {"hover_induced_velocity_m_s", p.hover_induced_velocity_m_s},
      {"profile_drag_coeff", p.profile_drag_coeff},
      {"flat_plate_area_m2", p.flat_plate_area_m2},
      {"fuselage_drag_ratio", p.fuselage_drag_ratio},
      {"battery_energy_wh", p.battery_energy_wh},
  };
  for (const auto& f : fields) {
    if (!(f.value > 0.0) || !std::isfinite(f.value)) {
      throw PlanError(ErrorKind::InvalidInput,
                      std::string("airframe field ") + f.name + " must be positive");
    }
  }
}

namespace {

void check_relation(std::vector<std::string>& out, const char* name, double stored,
                    double derived, double rel_tol) {
  const double rel = std::abs(stored - derived) / std::abs(derived);
  if (rel > rel_tol) {
    char buf[192];
    std::snprintf(buf, sizeof(buf), "%s: stored %.6g, derived %.6g (relative error %.3g > %.0e)",
                  name, stored, derived, rel, rel_tol);
    out.emplace_back(buf);
  }
}

}  // namespace

std::vector<std::string> consistency_warnings(const AirframeParams& p) {
  std::vector<std::string> out;
  check_relation(out, "tip_speed_m_s", p.tip_speed_m_s,
                 p.blade_angular_velocity_rad_s * p.rotor_radius_m, 1e-6);
  check_relation(out, "disc_area_m2", p.disc_area_m2,
                 kPi * p.rotor_radius_m * p.rotor_radius_m, 1e-6);
  check_relation(out, "rotor_solidity", p.rotor_solidity,
                 p.blade_count * p.chord_m / (kPi * p.rotor_radius_m), 1e-4);
  check_relation(out, "hover_induced_velocity_m_s", p.hover_induced_velocity_m_s,
                 std::sqrt(p.weight_newton / (2.0 * p.air_density_kg_m3 * p.disc_area_m2)),
                 1e-3);
  check_relation(out, "fuselage_drag_ratio", p.fuselage_drag_ratio,
                 p.flat_plate_area_m2 / (p.disc_area_m2 * p.rotor_solidity), 1e-3);
  return out;
}

HoverConstants hover_constants(const AirframeParams& p) {
  const double omega_r = p.blade_angular_velocity_rad_s * p.rotor_radius_m;
  HoverConstants h;
  h.profile_w = p.profile_drag_coeff / 8.0 * p.rotor_solidity * p.air_density_kg_m3 *
                p.disc_area_m2 * omega_r * omega_r * omega_r;
  h.induced_w = (1.0 + p.induced_power_correction) * std::pow(p.weight_newton, 1.5) /
                std::sqrt(2.0 * p.air_density_kg_m3 * p.disc_area_m2);
  return h;
}

PowerBreakdown power(double v, const AirframeParams& p, InducedForm form) {
  if (v < 0.0) {
    throw PlanError(ErrorKind::NegativeSpeed, "airspeed must be non-negative");
  }
  const HoverConstants h = hover_constants(p);
  const double v2 = v * v;
  const double v0_2 = p.hover_induced_velocity_m_s * p.hover_induced_velocity_m_s;

  PowerBreakdown out;
  out.blade_profile_w = h.profile_w * (1.0 + 3.0 * v2 / (p.tip_speed_m_s * p.tip_speed_m_s));
  // sqrt(1 + x^2) - x written without the cancellation at large x.
  const double x = v2 / (2.0 * v0_2);
  const double f = 1.0 / (std::sqrt(1.0 + x * x) + x);
  out.induced_w = h.induced_w * (form == InducedForm::OuterRoot ? std::sqrt(f) : f);
  out.parasite_w = 0.5 * p.fuselage_drag_ratio * p.rotor_solidity * p.air_density_kg_m3 *
                   p.disc_area_m2 * v2 * v;
  out.total_w = out.blade_profile_w + out.induced_w + out.parasite_w;
  return out;
}

double max_flight_time(double battery_energy_wh, double power_w) {
  if (!(power_w > 0.0)) {
    throw PlanError(ErrorKind::InvalidInput, "power must be positive");
  }
  return battery_energy_wh * 3600.0 / power_w;
}

double max_flight_time(const AirframeParams& params, double airspeed) {
  return max_flight_time(params.battery_energy_wh, power(airspeed, params).total_w);
}

double flying_distance(double u_max, double t_max) { return u_max * t_max / 2.0; }

}  // namespace uavplan
