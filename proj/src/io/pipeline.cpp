#include "uavplan/io/pipeline.hpp"

#include <fstream>

#include "uavplan/errors.hpp"

namespace uavplan::io {
namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PlanError(ErrorKind::IoError, "cannot open " + path);
  return in;
}

}  // namespace

PlannerInputs make_inputs(std::vector<WindSampleRecord> wind, const std::vector<TurbineRecord>& layout,
                          const PlannerConfig& config) {
  if (layout.empty()) throw PlanError(ErrorKind::EmptyFile, "layout has no turbines");
  PlannerInputs out;
  out.samples = to_samples(wind);
  out.ref_lat_deg = config.projection.ref_lat_deg.value_or(centroid_latitude(layout));
  out.turbines = mercator_project(layout, out.ref_lat_deg);
  return out;
}

PlannerInputs load_inputs(const std::string& wind_csv, const std::string& layout_csv, const PlannerConfig& config) {
  auto win = open_input(wind_csv);
  auto wind = parse_wind_csv(win);
  auto lin = open_input(layout_csv);
  auto layout = parse_layout_csv(lin);
  PlannerInputs out = make_inputs(std::move(wind.records), layout.records, config);
  for (auto& w : wind.warnings) out.warnings.push_back(wind_csv + ": " + w);
  for (auto& w : layout.warnings) out.warnings.push_back(layout_csv + ": " + w);
  return out;
}

EpsilonChoice resolve_epsilon(const std::vector<WindSample>& samples, const PlannerConfig& config) {
  EpsilonOptions opts;
  opts.mode = config.range.epsilon_mode;
  opts.override_value = config.range.epsilon_v;
  opts.granularity = config.range.granularity;
  const WindStats stats = wind_stats(samples);
  return choose_epsilon_v(stats, config.uav.u_wind, config.range.gust_factor, opts);
}

PlacementProblem build_problem(const PlannerInputs& inputs, const PlannerConfig& config, double epsilon_v) {
  const auto envelope = wind_envelope(inputs.samples, config.range.mu, epsilon_v);
  const FlyingRange base = build_range({0.0, 0.0}, envelope, config.uav.t_max_s, config.uav.u_max);
  PlacementProblem problem;
  problem.turbines = inputs.turbines;
  problem.p = config.uav.p;
  problem.d = config.uav.d;
  problem.ranges.reserve(inputs.turbines.size());
  for (const auto& t : inputs.turbines) problem.ranges.push_back(base.translated(t.pos));
  return problem;
}

PlacementRun run_placement(const PlannerInputs& inputs, const PlannerConfig& config) {
  validate(config);
  const EpsilonChoice eps = resolve_epsilon(inputs.samples, config);
  PlacementProblem problem = build_problem(inputs, config, eps.value);
  PlacementResult result = plan_placement(problem);
  const FlyingRange& r0 = problem.ranges.front();
  RangeSummary summary{config.range.mu, eps.value, r0.rho(), r0.max_drift()};
  PlanDocument doc = make_plan_document(problem, result, config.uav, summary);
  return {std::move(problem), std::move(result), eps, std::move(doc)};
}

}  // namespace uavplan::io
