#include <cmath>
#include <random>

#include "doctest.h"
#include "uavplan/errors.hpp"
#include "uavplan/wind_model.hpp"

using namespace uavplan;

TEST_SUITE("wind_model") {
  TEST_CASE("met_to_pol cardinal directions") {
    CHECK(met_to_pol(0.0) == doctest::Approx(1.5 * kPi));          // from north, blows south
    CHECK(met_to_pol(kPi / 2) == doctest::Approx(kPi));            // from east, blows west
    CHECK(met_to_pol(kPi) == doctest::Approx(kPi / 2));            // from south, blows north
    CHECK(met_to_pol(1.5 * kPi) == doctest::Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("met_to_pol result stays in [0, 2pi)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int i = 0; i < 1000; ++i) {
      const double p = met_to_pol(u(rng));
      CHECK(p >= 0.0);
      CHECK(p < kTwoPi);
    }
  }

  TEST_CASE("wind_from_met vector components") {
    const WindVector w = wind_from_met(8.0, kPi / 2);
    CHECK(w.wx == doctest::Approx(-8.0));
    CHECK(w.wy == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(w.speed() == doctest::Approx(8.0));
    CHECK_THROWS_AS(wind_from_met(-1.0, 0.0), PlanError);
    CHECK(wind_from_met(0.0, 1.0).pol_direction() == 0.0);
  }

  TEST_CASE("calm air flies at u_max") {
    const auto leg = leg_kinematics({0, 0}, {1600, 0}, {0, 0}, 16.0);
    CHECK(leg.groundspeed == doctest::Approx(16.0));
    CHECK(leg.airspeed == doctest::Approx(16.0));
    CHECK(leg.time == doctest::Approx(100.0));
    CHECK(leg.regime == WindRegime::Tail);
    CHECK_FALSE(leg.airspeed_over_limit);
  }

  TEST_CASE("pure head wind subtracts") {
    const auto leg = leg_kinematics({0, 0}, {1000, 0}, {-6.0, 0.0}, 16.0);
    CHECK(leg.regime == WindRegime::Head);
    CHECK(leg.theta_sw == doctest::Approx(kPi));
    CHECK(leg.theta_sv == doctest::Approx(0.0));
    CHECK(leg.groundspeed == doctest::Approx(10.0));
    CHECK(leg.airspeed == doctest::Approx(16.0));
    CHECK(leg.time == doctest::Approx(100.0));
  }

  TEST_CASE("pure tail wind keeps groundspeed at u_max") {
    const auto leg = leg_kinematics({0, 0}, {1000, 0}, {6.0, 0.0}, 16.0);
    CHECK(leg.regime == WindRegime::Tail);
    CHECK(leg.groundspeed == doctest::Approx(16.0));
    CHECK(leg.airspeed == doctest::Approx(10.0));
  }

  TEST_CASE("oblique head wind matches the velocity triangle") {
    // Wind at 135 degrees to the course, 8 m/s.
    const double ws = 8.0, a = 0.75 * kPi;
    const WindVector w{ws * std::cos(a), ws * std::sin(a)};
    const auto leg = leg_kinematics({0, 0}, {2000, 0}, w, 16.0);
    const double cross = ws * std::sin(kPi - a);
    const double expect = std::sqrt(16.0 * 16.0 - cross * cross) - ws * std::cos(kPi - a);
    CHECK(leg.regime == WindRegime::Head);
    CHECK(leg.groundspeed == doctest::Approx(expect));
    // The airspeed is u_max and the ground velocity lies on the course.
    CHECK(leg.airspeed == doctest::Approx(16.0));
    CHECK(leg.resultant.y == doctest::Approx(0.0).epsilon(1e-12));
  }

  TEST_CASE("exactly perpendicular wind is a tail case") {
    const auto leg = leg_kinematics({0, 0}, {1000, 0}, {0.0, 5.0}, 16.0);
    CHECK(leg.regime == WindRegime::Tail);
    CHECK(leg.theta_sw == doctest::Approx(kPi / 2));
    CHECK(leg.groundspeed == doctest::Approx(16.0));
    CHECK(leg.airspeed == doctest::Approx(std::hypot(16.0, 5.0)));
    CHECK(leg.airspeed_over_limit);
  }

  TEST_CASE("degenerate and infeasible legs") {
    CHECK_THROWS_AS(leg_kinematics({1, 1}, {1, 1}, {0, 0}, 16.0), PlanError);
    try {
      leg_kinematics({0, 0}, {100, 0}, {-16.0, 0.0}, 16.0);
      FAIL("expected InfeasibleLeg");
    } catch (const PlanError& e) {
      CHECK(e.kind() == ErrorKind::InfeasibleLeg);
    }
    try {
      leg_kinematics({0, 0}, {100, 0}, {0, 0}, 0.0);
      FAIL("expected InvalidInput");
    } catch (const PlanError& e) {
      CHECK(e.kind() == ErrorKind::InvalidInput);
    }
  }

  TEST_CASE("head wind never beats calm air, tail wind never loses") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi), spd(0.0, 12.0), pos(-3000.0, 3000.0);
    for (int i = 0; i < 2000; ++i) {
      const Point2D a{pos(rng), pos(rng)}, b{pos(rng), pos(rng)};
      const double th = ang(rng), s = spd(rng);
      const auto leg = leg_kinematics(a, b, {s * std::cos(th), s * std::sin(th)}, 16.0);
      CHECK(leg.groundspeed <= 16.0 + 1e-9);
      CHECK(leg.groundspeed > 0.0);
      CHECK(leg.time == doctest::Approx(distance(a, b) / leg.groundspeed));
      if (leg.regime == WindRegime::Head) CHECK(leg.airspeed == doctest::Approx(16.0));
      // s = v + w in both branches.
      CHECK((leg.uav_velocity + Vec2{s * std::cos(th), s * std::sin(th)}).x == doctest::Approx(leg.resultant.x));
    }
  }

  TEST_CASE("is_flyable threshold is inclusive") {
    CHECK(is_flyable({15.0, 0.0}, 15.0));
    CHECK_FALSE(is_flyable({15.0, 0.1}, 15.0));
  }
}
