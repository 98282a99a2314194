#pragma once

#include "uavplan/geometry.hpp"

namespace uavplan {

/// Instantaneous wind velocity in the polar (counter-clockwise from +x)
/// convention. Components in m/s.
struct WindVector {
  double wx = 0.0;
  double wy = 0.0;

  double speed() const { return std::hypot(wx, wy); }
  /// Direction the air moves toward, in [0, 2pi). Zero for calm air.
  double pol_direction() const {
    if (wx == 0.0 && wy == 0.0) return 0.0;
    return normalize_angle(std::atan2(wy, wx));
  }
  Vec2 vec() const { return {wx, wy}; }
  friend bool operator==(const WindVector&, const WindVector&) = default;
};

/// Meteorological bearing (clockwise from north) to polar angle.
double met_to_pol(double theta_met);

/// Builds the wind vector for a speed and a meteorological direction.
/// Throws PlanError(NegativeSpeed) for speed < 0.
WindVector wind_from_met(double speed, double theta_met);

enum class WindRegime { Tail, Head };

struct LegKinematics {
  Vec2 resultant;     // ground velocity s
  Vec2 uav_velocity;  // air-relative velocity v = s - w
  double groundspeed = 0.0;
  double airspeed = 0.0;
  double theta_sw = 0.0;  // angle between course and wind
  double theta_sv = 0.0;  // angle between ground and air velocity (head branch)
  double time = 0.0;      // seconds
  WindRegime regime = WindRegime::Tail;
  // Tail branch fixes groundspeed at u_max; a strong crosswind can then imply
  // an airspeed above u_max. Reported, not rejected.
  bool airspeed_over_limit = false;
};

/// Velocity triangle and travel time for one straight leg.
///
/// Tail wind (angle between course and wind <= pi/2): groundspeed is u_max
/// along the course. Head wind: the UAV flies at airspeed u_max, crabbing so
/// the crosswind component cancels, and the along-course groundspeed is what
/// remains after subtracting the head-wind component.
///
/// Throws DegenerateLeg when from == to and InfeasibleLeg when the head wind
/// leaves no forward progress.
LegKinematics leg_kinematics(Point2D from, Point2D to, WindVector wind, double u_max);

/// True iff wind speed does not exceed the UAV's wind resistance.
bool is_flyable(WindVector wind, double u_wind);

}  // namespace uavplan
