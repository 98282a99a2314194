#pragma once

#include <string>
#include <vector>

namespace uavplan {

/// Rotor-craft constants for the forward-flight power model. All SI.
struct AirframeParams {
  double weight_newton = 0.0;
  double rotor_radius_m = 0.0;
  double air_density_kg_m3 = 0.0;
  double disc_area_m2 = 0.0;
  double blade_angular_velocity_rad_s = 0.0;
  double tip_speed_m_s = 0.0;
  double blade_count = 0.0;
  double chord_m = 0.0;
  double rotor_solidity = 0.0;
  double induced_power_correction = 0.0;
  double hover_induced_velocity_m_s = 0.0;
  double profile_drag_coeff = 0.0;
  double flat_plate_area_m2 = 0.0;
  double fuselage_drag_ratio = 0.0;
  double battery_energy_wh = 0.0;
};

/// Octocopter inspection airframe (8 blades, 16 N). Battery is stored as
/// energy: 71.0 Wh corresponds to the rated 6.25 Ah pack at about 11.4 V.
AirframeParams reference_airframe();

/// Published cruise power of the reference airframe at 16 m/s.
inline constexpr double kReferenceCruisePowerW = 212.82;
/// Published endurance of the reference airframe, minutes.
inline constexpr double kReferenceEnduranceMin = 20.02;

/// Throws PlanError(InvalidInput) if any field is not strictly positive.
void validate(const AirframeParams& params);

/// Derived fields that disagree with their defining relation beyond the
/// allowed relative tolerance. Empty when the record is self-consistent.
std::vector<std::string> consistency_warnings(const AirframeParams& params);

struct HoverConstants {
  double profile_w = 0.0;  // blade profile power in hover, P0
  double induced_w = 0.0;  // induced power in hover, Pi
};

HoverConstants hover_constants(const AirframeParams& params);

struct PowerBreakdown {
  double blade_profile_w = 0.0;
  double induced_w = 0.0;
  double parasite_w = 0.0;
  double total_w = 0.0;
};

/// Shape of the induced-power factor f(x) = sqrt(1 + x^2) - x, x = V^2 / 2v0^2.
enum class InducedForm {
  AsWritten,  // Pi * f(x)
  OuterRoot,  // Pi * sqrt(f(x)), the usual rotary-wing form
};

/// Power drawn at the given airspeed (m/s).
PowerBreakdown power(double airspeed, const AirframeParams& params,
                     InducedForm form = InducedForm::AsWritten);

/// Endurance in seconds at a constant airspeed using the model power.
double max_flight_time(const AirframeParams& params, double airspeed);

/// Endurance in seconds for a given battery energy and power draw.
double max_flight_time(double battery_energy_wh, double power_w);

/// One-way flying distance: out-and-back at u_max within t_max.
double flying_distance(double u_max, double t_max);

}  // namespace uavplan
