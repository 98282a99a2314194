#include "uavplan/routing.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "uavplan/errors.hpp"

namespace uavplan {

LegCostMatrix::LegCostMatrix(std::vector<Site> nodes, std::vector<double> times,
                             std::vector<std::optional<LegKinematics>> legs)
    : nodes_(std::move(nodes)), times_(std::move(times)), legs_(std::move(legs)) {
  const std::size_t n = nodes_.size();
  if (times_.size() != n * n || legs_.size() != n * n) {
    throw PlanError(ErrorKind::InvalidInput, "cost matrix dimensions do not match node count");
  }
}

LegCostMatrix LegCostMatrix::from_times(std::size_t n, std::vector<double> times) {
  std::vector<Site> nodes(n);
  for (std::size_t i = 0; i < n; ++i) nodes[i].code = std::to_string(i);
  return LegCostMatrix(std::move(nodes), std::move(times),
                       std::vector<std::optional<LegKinematics>>(n * n));
}

bool LegCostMatrix::symmetric(double tol) const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

LegCostMatrix build_cost_matrix(const Site& start, std::span<const Site> turbines,
                                WindVector wind, const UavLimits& limits) {
  if (!is_flyable(wind, limits.u_wind)) {
    throw PlanError(ErrorKind::NoFly, "wind speed " + std::to_string(wind.speed()) +
                                          " m/s exceeds wind resistance " +
                                          std::to_string(limits.u_wind) + " m/s");
  }
  std::vector<Site> nodes{start};
  for (const auto& t : turbines) {
    if (t.pos == start.pos) continue;
    nodes.push_back(t);
  }
  const std::size_t n = nodes.size();
  std::vector<double> times(n * n, 0.0);
  std::vector<std::optional<LegKinematics>> legs(n * n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      if (k == l) continue;
      try {
        auto leg = leg_kinematics(nodes[k].pos, nodes[l].pos, wind, limits.u_max);
        times[k * n + l] = leg.time;
        legs[k * n + l] = leg;
      } catch (const PlanError& e) {
        throw PlanError(e.kind(), "leg " + nodes[k].code + " -> " + nodes[l].code + ": " + e.what());
      }
    }
  }
  return LegCostMatrix(std::move(nodes), std::move(times), std::move(legs));
}

double path_duration(const LegCostMatrix& costs, std::span<const int> path) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    total += costs(static_cast<std::size_t>(path[i]), static_cast<std::size_t>(path[i + 1]));
  return total;
}

Tour held_karp_path(const LegCostMatrix& costs) {
  const std::size_t n = costs.size();
  if (n == 0) throw PlanError(ErrorKind::InvalidInput, "cost matrix is empty");
  const std::size_t m = n - 1;  // turbines other than the start
  if (m > 20) throw PlanError(ErrorKind::TooLarge, "too many turbines for the subset programme");

  Tour tour;
  if (m == 0) {
    tour.path = {0, 0};
    return tour;
  }

  // best[mask * m + k]: least time to visit the turbines in `mask` (bits over
  // turbines 1..m) starting at turbine k+1 (not in mask), then return home.
  const std::size_t full = (std::size_t{1} << m) - 1;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> best((full + 1) * m, kInf);
  std::vector<int> next((full + 1) * m, -1);

  // Masks in order of popcount so every subproblem is ready when needed;
  // numerical order already guarantees that (subsets are smaller numbers).
  for (std::size_t mask = 0; mask < full; ++mask) {
    bool counted = false;
    for (std::size_t k = 0; k < m; ++k) {
      if (mask & (std::size_t{1} << k)) continue;
      counted = true;
      ++tour.stats.states;
      const std::size_t from = k + 1;
      if (mask == 0) {
        best[k] = costs(from, 0);
        continue;
      }
      double v = kInf;
      int arg = -1;
      for (std::size_t l = 0; l < m; ++l) {
        const std::size_t bit = std::size_t{1} << l;
        if (!(mask & bit)) continue;
        const double c = costs(from, l + 1) + best[(mask ^ bit) * m + l];
        if (c < v) {
          v = c;
          arg = static_cast<int>(l);
        }
      }
      best[mask * m + k] = v;
      next[mask * m + k] = arg;
    }
    if (counted) ++tour.stats.subsets;
  }

  double v = kInf;
  int first = -1;
  for (std::size_t l = 0; l < m; ++l) {
    const double c = costs(0, l + 1) + best[(full ^ (std::size_t{1} << l)) * m + l];
    if (c < v) {
      v = c;
      first = static_cast<int>(l);
    }
  }

  tour.path.push_back(0);
  std::size_t mask = full;
  int cur = first;
  while (cur >= 0) {
    tour.path.push_back(cur + 1);
    mask ^= std::size_t{1} << cur;
    cur = mask ? next[mask * m + static_cast<std::size_t>(cur)] : -1;
  }
  tour.path.push_back(0);
  tour.total = path_duration(costs, tour.path);
  return tour;
}

Tour brute_force_path(const LegCostMatrix& costs, std::size_t max_turbines) {
  const std::size_t n = costs.size();
  if (n == 0) throw PlanError(ErrorKind::InvalidInput, "cost matrix is empty");
  if (n - 1 > max_turbines) {
    throw PlanError(ErrorKind::TooLarge, "brute force limited to " + std::to_string(max_turbines) +
                                             " turbines, got " + std::to_string(n - 1));
  }
  std::vector<int> order(n - 1);
  std::iota(order.begin(), order.end(), 1);
  std::vector<int> path(n + 1, 0);

  Tour tour;
  tour.total = std::numeric_limits<double>::infinity();
  do {
    std::copy(order.begin(), order.end(), path.begin() + 1);
    const double t = path_duration(costs, path);
    ++tour.stats.states;
    if (t < tour.total) {
      tour.total = t;
      tour.path = path;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return tour;
}

RoutePlan split_by_endurance(std::span<const int> path, const LegCostMatrix& costs, double t_max) {
  if (path.size() < 2 || path.front() != 0 || path.back() != 0) {
    throw PlanError(ErrorKind::InvalidInput, "path must start and end at the start node");
  }
  auto t = [&](int a, int b) { return costs(static_cast<std::size_t>(a), static_cast<std::size_t>(b)); };

  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    const int k = path[i];
    if (!(t(0, k) + t(k, 0) < t_max)) {
      throw PlanError(ErrorKind::TurbineUnreachable,
                      "out-and-back to " + costs.nodes()[static_cast<std::size_t>(k)].code +
                          " takes " + std::to_string(t(0, k) + t(k, 0)) + " s >= t_max " +
                          std::to_string(t_max) + " s");
    }
  }

  RoutePlan plan;
  Route current{{0}, 0.0};
  double accu = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int k = path[i];
    const int l = path[i + 1];
    if (l == 0) {
      current.nodes.push_back(0);
      break;
    }
    const double reach = accu + t(k, l);
    const double back = reach + t(l, 0);
    if (reach < t_max && back < t_max) {
      current.nodes.push_back(l);
      accu = reach;
    } else {
      current.nodes.push_back(0);
      plan.routes.push_back(std::move(current));
      current = Route{{0, l}, 0.0};
      accu = t(0, l);
    }
  }
  if (current.nodes.size() == 1) current.nodes.push_back(0);
  plan.routes.push_back(std::move(current));

  for (auto& r : plan.routes) {
    r.duration = path_duration(costs, r.nodes);
    plan.total_duration += r.duration;
  }
  return plan;
}

RouteResult plan_route(const Site& start, std::span<const Site> turbines, WindVector wind,
                       const UavLimits& limits, double t_max) {
  LegCostMatrix costs = build_cost_matrix(start, turbines, wind, limits);
  Tour tour = held_karp_path(costs);
  RoutePlan plan = split_by_endurance(tour.path, costs, t_max);
  return {std::move(costs), std::move(tour), std::move(plan)};
}

}  // namespace uavplan
