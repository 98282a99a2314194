#pragma once

#include <string>
#include <vector>

#include "uavplan/placement.hpp"
#include "uavplan/routing.hpp"

namespace uavplan::io {

/// Side-by-side panels of the minimisation trace (first step, two
/// intermediate steps, final step): turbines, active UAVs, assignment edges
/// and communication links. Throws InvalidInput for an empty trace.
std::string placement_steps_svg(const PlacementProblem& problem, const std::vector<StepSnapshot>& trace);

/// One stroke group per sortie with arrowed legs. Throws InvalidInput when
/// the plan has no routes.
std::string route_svg(const RouteResult& result);

}  // namespace uavplan::io
