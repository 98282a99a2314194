// Shared test fixtures built with the library's own constructors.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "uavplan/flying_range.hpp"
#include "uavplan/placement.hpp"
#include "uavplan/routing.hpp"

namespace fixture {

inline std::string code(std::size_t i) { return "T" + std::to_string(100 + i); }

inline uavplan::PlacementProblem problem_from(const std::vector<uavplan::Point2D>& pts,
                                              const uavplan::FlyingRange& base, int p, double d) {
  uavplan::PlacementProblem pb;
  pb.p = p;
  pb.d = d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    pb.turbines.push_back({code(i), pts[i]});
    pb.ranges.push_back(base.translated(pts[i]));
  }
  return pb;
}

inline uavplan::FlyingRange calm_range(double rho) {
  std::vector<uavplan::WindVector> env(36);
  return uavplan::build_range({0, 0}, env, rho / 8.0, 16.0);  // u_max * t / 2 = rho
}

struct RandomPlacementSpec {
  std::size_t turbines = 10;
  int p = 5;
  double d = 5000;
  double box = 10000;      // square side, meters
  double t_max = 300;      // sets rho = 8 * t_max
  double epsilon_v = 4;
};

// Wind history of random speeds and directions; envelope capped at epsilon_v.
inline uavplan::PlacementProblem random_placement(std::mt19937_64& rng, const RandomPlacementSpec& s) {
  std::uniform_real_distribution<double> pos(0.0, s.box), spd(0.0, 12.0), ang(0.0, 2 * M_PI);
  std::vector<uavplan::WindSample> samples;
  const int n_samples = 40 + static_cast<int>(rng() % 200);
  for (int i = 0; i < n_samples; ++i) samples.push_back({spd(rng), ang(rng), std::nullopt, std::nullopt});
  const auto base =
      uavplan::build_range({0, 0}, samples, uavplan::RangeParams{36, s.epsilon_v, s.t_max, 16.0});
  std::vector<uavplan::Point2D> pts;
  for (std::size_t i = 0; i < s.turbines; ++i) pts.push_back({std::round(pos(rng)), std::round(pos(rng))});
  // Distinct positions keep turbines distinguishable.
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (pts[i] == pts[j]) pts[i].x += 1.0;
  // Every turbine gets a neighbour within d so the all-active start is linked.
  double d = s.d;
  for (std::size_t i = 0; i < pts.size() && pts.size() > 1; ++i) {
    double nearest = 1e300;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (i != j) nearest = std::min(nearest, uavplan::distance(pts[i], pts[j]));
    d = std::max(d, std::ceil(nearest));
  }
  return problem_from(pts, base, s.p, d);
}

inline RandomPlacementSpec random_spec(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  RandomPlacementSpec s;
  s.turbines = lo + rng() % (hi - lo + 1);
  s.p = 1 + static_cast<int>(rng() % 6);
  s.d = 1000.0 + static_cast<double>(rng() % 9000);
  s.box = 2000.0 + static_cast<double>(rng() % 18000);
  s.t_max = 60.0 + static_cast<double>(rng() % 1200);
  s.epsilon_v = static_cast<double>(rng() % 9);  // up to 8 = u_max / 2
  return s;
}

// Five sites whose calm-free optimal closed tour under an 8 m/s easterly
// (blowing west) at 16 m/s takes about 15.3 minutes.
inline std::vector<uavplan::Site> endurance_sites() {
  return {{"C", {-225, 2834}}, {"E", {-2992, -952}}, {"A106", {-549, -667}}, {"A411", {322, -310}}};
}
inline uavplan::Site endurance_start() { return {"S", {0, 0}}; }

}  // namespace fixture
