#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "uavplan/io/config.hpp"
#include "uavplan/placement.hpp"
#include "uavplan/routing.hpp"

namespace uavplan::io {

inline constexpr const char* kPlanFormat = "uavplan.plan/1";
inline constexpr const char* kTraceFormat = "uavplan.trace/1";
inline constexpr const char* kRoutesFormat = "uavplan.routes/1";

struct PlannedUav {
  int id = 0;    // candidate index == index of its home turbine
  int home = 0;  // turbine index
  Point2D pos;
  std::vector<int> turbines;  // turbine indices, ascending
  std::vector<int> links;     // UAV ids, ascending

  friend bool operator==(const PlannedUav&, const PlannedUav&) = default;
};

struct RangeSummary {
  int mu = 36;
  double epsilon_v = 0.0;
  double rho_m = 0.0;
  double max_drift_m = 0.0;

  friend bool operator==(const RangeSummary&, const RangeSummary&) = default;
};

/// Everything `route` needs from a placement run.
struct PlanDocument {
  UavSpec uav;
  RangeSummary range;
  std::vector<Turbine> turbines;
  std::vector<PlannedUav> uavs;  // active UAVs, ascending id
  int candidates = 0;
  int steps = 0;
  std::vector<ConstraintCheck> constraints;

  const PlannedUav* find_uav(int id) const;

  friend bool operator==(const PlanDocument&, const PlanDocument&) = default;
};

PlanDocument make_plan_document(const PlacementProblem& problem, const PlacementResult& result,
                                const UavSpec& uav, const RangeSummary& range);

nlohmann::json to_json(const PlanDocument& plan);
/// Throws InvalidInput for a malformed or foreign document.
PlanDocument plan_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const std::vector<StepSnapshot>& trace, const PlacementProblem& problem);

struct RouteReport {
  int uav_id = 0;
  std::string home;
  WindVector wind;
  double wind_speed = 0.0;
  double wind_dir_met_deg = 0.0;
  UavSpec limits;
  const RouteResult* result = nullptr;
};

nlohmann::json to_json(const RouteReport& report);

/// Writes text to a file; refuses empty content. Throws IoError.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace uavplan::io
