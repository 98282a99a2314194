#include "uavplan/wind_model.hpp"

#include <algorithm>
#include <string>

#include "uavplan/errors.hpp"

namespace uavplan {

double met_to_pol(double theta_met) {
  return normalize_angle(1.5 * kPi - normalize_angle(theta_met));
}

WindVector wind_from_met(double speed, double theta_met) {
  if (speed < 0.0) {
    throw PlanError(ErrorKind::NegativeSpeed,
                    "wind speed must be non-negative, got " + std::to_string(speed));
  }
  const double pol = met_to_pol(theta_met);
  return {speed * std::cos(pol), speed * std::sin(pol)};
}

LegKinematics leg_kinematics(Point2D from, Point2D to, WindVector wind, double u_max) {
  if (!(u_max > 0.0)) {
    throw PlanError(ErrorKind::InvalidInput, "u_max must be positive");
  }
  const Vec2 delta = to - from;
  const double dist = delta.norm();
  if (dist == 0.0) {
    throw PlanError(ErrorKind::DegenerateLeg, "leg endpoints coincide");
  }

  const double course = std::atan2(delta.y, delta.x);
  const Vec2 dir{std::cos(course), std::sin(course)};
  const double ws = wind.speed();

  LegKinematics leg;
  leg.theta_sw = 0.0;
  if (ws > 0.0) {
    const double c = std::clamp(dir.dot(wind.vec()) / ws, -1.0, 1.0);
    leg.theta_sw = std::acos(c);
  }

  double ground = u_max;
  if (leg.theta_sw <= kPi / 2.0) {
    leg.regime = WindRegime::Tail;
  } else {
    leg.regime = WindRegime::Head;
    const double cross = ws * std::sin(kPi - leg.theta_sw) / u_max;
    if (cross > 1.0) {
      throw PlanError(ErrorKind::InfeasibleLeg, "crosswind exceeds u_max");
    }
    leg.theta_sv = std::asin(cross);
    ground = u_max * std::cos(leg.theta_sv) - ws * std::cos(kPi - leg.theta_sw);
    if (!(ground > 0.0)) {
      throw PlanError(ErrorKind::InfeasibleLeg, "head wind leaves no forward groundspeed");
    }
  }

  leg.groundspeed = ground;
  leg.resultant = ground * dir;
  leg.uav_velocity = leg.resultant - wind.vec();
  leg.airspeed = leg.uav_velocity.norm();
  if (leg.regime == WindRegime::Tail && leg.airspeed > 0.0) {
    const double c = leg.resultant.dot(leg.uav_velocity) / (ground * leg.airspeed);
    leg.theta_sv = std::acos(std::clamp(c, -1.0, 1.0));
  }
  leg.airspeed_over_limit = leg.airspeed > u_max + 1e-6;
  leg.time = dist / ground;
  return leg;
}

bool is_flyable(WindVector wind, double u_wind) { return wind.speed() <= u_wind; }

}  // namespace uavplan
