#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uavplan/io/config.hpp"
#include "uavplan/io/csv.hpp"
#include "uavplan/io/plan_io.hpp"

namespace uavplan::io {

/// Wind history and projected layout, ready for range building.
struct PlannerInputs {
  std::vector<WindSample> samples;
  std::vector<Turbine> turbines;
  double ref_lat_deg = 0.0;
  std::vector<std::string> warnings;
};

PlannerInputs load_inputs(const std::string& wind_csv, const std::string& layout_csv, const PlannerConfig& config);
PlannerInputs make_inputs(std::vector<WindSampleRecord> wind, const std::vector<TurbineRecord>& layout,
                          const PlannerConfig& config);

/// Launch threshold for the configured mode.
EpsilonChoice resolve_epsilon(const std::vector<WindSample>& samples, const PlannerConfig& config);

/// Envelope built once at the origin and translated to every turbine.
PlacementProblem build_problem(const PlannerInputs& inputs, const PlannerConfig& config, double epsilon_v);

struct PlacementRun {
  PlacementProblem problem;
  PlacementResult result;
  EpsilonChoice epsilon;
  PlanDocument plan;
};

PlacementRun run_placement(const PlannerInputs& inputs, const PlannerConfig& config);

}  // namespace uavplan::io
