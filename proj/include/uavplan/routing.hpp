#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uavplan/geometry.hpp"
#include "uavplan/wind_model.hpp"

namespace uavplan {

struct Site {
  std::string code;
  Point2D pos;
};

/// Asymmetric flight-time matrix over [start, turbines...]. Node 0 is the
/// start (UAV base).
class LegCostMatrix {
 public:
  LegCostMatrix(std::vector<Site> nodes, std::vector<double> times,
                std::vector<std::optional<LegKinematics>> legs);

  /// Matrix built directly from times (no kinematics), row-major n x n.
  static LegCostMatrix from_times(std::size_t n, std::vector<double> times);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<Site>& nodes() const { return nodes_; }
  double operator()(std::size_t from, std::size_t to) const { return times_[from * size() + to]; }
  const std::optional<LegKinematics>& leg(std::size_t from, std::size_t to) const {
    return legs_[from * size() + to];
  }
  bool symmetric(double tol = 0.0) const;

 private:
  std::vector<Site> nodes_;
  std::vector<double> times_;
  std::vector<std::optional<LegKinematics>> legs_;
};

struct UavLimits {
  double u_max = 16.0;
  double u_wind = 15.0;
};

/// Evaluates every ordered leg with the wind model. A turbine located at the
/// start position is the start node itself and is not repeated.
/// Throws NoFly when the wind exceeds u_wind and InfeasibleLeg (naming the
/// pair) when a leg cannot be flown.
LegCostMatrix build_cost_matrix(const Site& start, std::span<const Site> turbines,
                                WindVector wind, const UavLimits& limits);

struct TourStats {
  std::size_t subsets = 0;  // distinct remaining-sets evaluated
  std::size_t states = 0;   // (node, remaining-set) values computed
};

struct Tour {
  std::vector<int> path;  // 0, ..., 0
  double total = 0.0;     // seconds
  TourStats stats;
};

/// Flight time of a node sequence, summed left to right.
double path_duration(const LegCostMatrix& costs, std::span<const int> path);

/// Optimal closed tour from node 0 through every other node (subset dynamic
/// programme over remaining-turbine sets). Ties go to the lowest node index.
/// Throws TooLarge above 20 turbines.
Tour held_karp_path(const LegCostMatrix& costs);

/// Exhaustive search over visiting orders; ties resolved to the
/// lexicographically smallest order. Throws TooLarge above max_turbines.
Tour brute_force_path(const LegCostMatrix& costs, std::size_t max_turbines = 10);

struct Route {
  std::vector<int> nodes;  // 0, ..., 0
  double duration = 0.0;
};

struct RoutePlan {
  std::vector<Route> routes;
  double total_duration = 0.0;

  std::size_t route_count() const { return routes.size(); }
};

/// Cuts a tour into sorties that each finish strictly before t_max, keeping
/// the visiting order and inserting returns to the start.
/// Throws TurbineUnreachable if a single out-and-back does not fit.
RoutePlan split_by_endurance(std::span<const int> path, const LegCostMatrix& costs, double t_max);

struct RouteResult {
  LegCostMatrix costs;
  Tour tour;
  RoutePlan plan;
};

RouteResult plan_route(const Site& start, std::span<const Site> turbines, WindVector wind,
                       const UavLimits& limits, double t_max);

}  // namespace uavplan
