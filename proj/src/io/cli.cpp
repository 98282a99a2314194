#include "uavplan/io/cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "uavplan/errors.hpp"
#include "uavplan/io/canonical_json.hpp"
#include "uavplan/io/pipeline.hpp"
#include "uavplan/io/svg.hpp"
#include "uavplan/io/synthetic.hpp"

namespace uavplan::io {
namespace {

using nlohmann::json;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

PlannerConfig config_or_default(const std::string& path) {
  if (path.empty()) return PlannerConfig{};
  return load_config(path);
}

void warn_all(std::ostream& err, const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

struct StatsArgs {
  std::string wind;
  std::size_t bins = 20;
  std::string out;
};

int cmd_stats(const StatsArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream in(a.wind, std::ios::binary);
  if (!in) throw PlanError(ErrorKind::IoError, "cannot open " + a.wind);
  auto parsed = parse_wind_csv(in);
  warn_all(err, parsed.warnings);
  const auto samples = to_samples(parsed.records);
  const WindStats stats = wind_stats(samples, a.bins);

  json bins = json::array();
  out << "samples " << stats.sample_count() << ", with gust " << stats.ratio_count() << "\n";
  if (stats.ratio_count() > 0) {
    out << "gust/mean ratio histogram\n";
    out << "    lo      hi   count  cumulative\n";
    std::size_t cum = 0;
    for (const auto& b : stats.ratio_histogram()) {
      cum += b.count;
      const double frac = static_cast<double>(cum) / static_cast<double>(stats.ratio_count());
      char line[96];
      std::snprintf(line, sizeof line, "%6.3f  %6.3f  %6zu  %10.4f\n", b.lo, b.hi, b.count, frac);
      out << line;
      bins.push_back({{"lo", b.lo}, {"hi", b.hi}, {"count", b.count}, {"cumulative", frac}});
    }
  }
  json ratio_below = json::object();
  if (stats.ratio_count() > 0) {
    for (double x : {1.5, 2.0, 2.5, 3.0}) {
      const double f = stats.fraction_ratio_below(x);
      ratio_below[fmt("%.2f", x)] = f;
      out << "ratio < " << fmt("%.2f", x) << ": " << fmt("%.4f", f) << '\n';
    }
  }
  json mean_below = json::object();
  for (int v = 2; v <= 16; v += 2) {
    const double f = stats.fraction_mean_below(v);
    mean_below[fmt("%02.0f", v)] = f;
    out << "mean < " << v << " m/s: " << fmt("%.4f", f) << '\n';
  }
  if (!a.out.empty()) {
    json j = {{"format", "uavplan.stats/1"},
              {"samples", stats.sample_count()},
              {"ratio_samples", stats.ratio_count()},
              {"histogram", bins},
              {"fraction_ratio_below", ratio_below},
              {"fraction_mean_below", mean_below}};
    write_text_file(a.out, dump_canonical(j));
  }
  return 0;
}

struct RangeArgs {
  std::string wind, layout, config, uav_at, out;
};

int cmd_range(const RangeArgs& a, std::ostream& out, std::ostream& err) {
  const PlannerConfig config = config_or_default(a.config);
  validate(config);
  const PlannerInputs inputs = load_inputs(a.wind, a.layout, config);
  warn_all(err, inputs.warnings);
  const EpsilonChoice eps = resolve_epsilon(inputs.samples, config);
  const PlacementProblem problem = build_problem(inputs, config, eps.value);

  std::optional<std::size_t> at;
  for (std::size_t i = 0; i < problem.turbines.size(); ++i)
    if (problem.turbines[i].code == a.uav_at) at = i;
  if (!at) throw PlanError(ErrorKind::InvalidInput, "unknown turbine code " + a.uav_at);
  const FlyingRange& range = problem.ranges[*at];

  json discs = json::array();
  for (const auto& s : range.segments()) {
    discs.push_back({{"segment", s.index},
                     {"wx", s.wind.wx},
                     {"wy", s.wind.wy},
                     {"cx", s.disc.center.x},
                     {"cy", s.disc.center.y},
                     {"radius", s.disc.radius}});
  }
  json covered = json::array();
  for (const auto& t : problem.turbines)
    if (range.contains(t.pos)) covered.push_back(t.code);
  json j = {{"format", "uavplan.range/1"},
            {"uav_at", a.uav_at},
            {"anchor", {{"x", range.anchor().x}, {"y", range.anchor().y}}},
            {"rho_m", range.rho()},
            {"max_drift_m", range.max_drift()},
            {"mu", config.range.mu},
            {"epsilon_v", eps.value},
            {"discs", discs},
            {"covered_turbines", covered}};
  if (eps.gust_coverage) j["gust_coverage"] = *eps.gust_coverage;
  write_text_file(a.out, dump_canonical(j));
  out << "range at " << a.uav_at << ": rho " << fmt("%.1f", range.rho()) << " m, max drift "
      << fmt("%.1f", range.max_drift()) << " m, epsilon_v " << fmt("%.3f", eps.value) << ", covers "
      << covered.size() << " turbines\n";
  return 0;
}

struct PlaceArgs {
  std::string wind, layout, config, out, trace, svg;
};

int cmd_place(const PlaceArgs& a, std::ostream& out, std::ostream& err) {
  const PlannerConfig config = config_or_default(a.config);
  const PlannerInputs inputs = load_inputs(a.wind, a.layout, config);
  warn_all(err, inputs.warnings);
  const PlacementRun run = run_placement(inputs, config);

  write_text_file(a.out, dump_canonical(to_json(run.plan)));
  if (!a.trace.empty()) write_text_file(a.trace, dump_canonical(trace_to_json(run.result.trace, run.problem)));
  if (!a.svg.empty()) write_text_file(a.svg, placement_steps_svg(run.problem, run.result.trace));

  out << "turbines " << run.problem.turbines.size() << ", uavs " << run.plan.uavs.size() << ", steps "
      << run.plan.steps << ", epsilon_v " << fmt("%.3f", run.epsilon.value) << "\n";
  out << run.result.report.summary() << "\n";
  return 0;
}

struct RouteArgs {
  std::string plan, out, svg;
  int uav = -1;
  double wind_speed = 0.0;
  double wind_dir_met = 0.0;  // degrees
  std::optional<double> t_max_s;
  bool oracle = false;
};

int cmd_route(const RouteArgs& a, std::ostream& out, std::ostream&) {
  json pj;
  try {
    pj = json::parse(read_text_file(a.plan));
  } catch (const json::parse_error& e) {
    throw PlanError(ErrorKind::InvalidInput, std::string("plan is not valid JSON: ") + e.what());
  }
  const PlanDocument plan = plan_from_json(pj);
  const PlannedUav* uav = plan.find_uav(a.uav);
  if (!uav) throw PlanError(ErrorKind::InvalidInput, "plan has no active UAV with id " + std::to_string(a.uav));

  const auto& home = plan.turbines.at(static_cast<std::size_t>(uav->home));
  const Site start{home.code, home.pos};
  std::vector<Site> sites;
  for (int k : uav->turbines) {
    const auto& t = plan.turbines.at(static_cast<std::size_t>(k));
    sites.push_back({t.code, t.pos});
  }
  const WindVector wind = wind_from_met(a.wind_speed, deg_to_rad(a.wind_dir_met));
  const UavLimits limits{plan.uav.u_max, plan.uav.u_wind};
  UavSpec used = plan.uav;
  if (a.t_max_s) used.t_max_s = *a.t_max_s;
  if (used.t_max_s <= 0) throw PlanError(ErrorKind::InvalidInput, "t_max must be positive");

  const RouteResult result = plan_route(start, sites, wind, limits, used.t_max_s);

  RouteReport rep{uav->id, home.code, wind, a.wind_speed, a.wind_dir_met, used, &result};
  write_text_file(a.out, dump_canonical(to_json(rep)));
  if (!a.svg.empty()) write_text_file(a.svg, route_svg(result));

  out << "uav " << uav->id << " at " << home.code << ": " << sites.size() << " turbines, tour "
      << fmt("%.4f", result.tour.total / 60.0) << " min, routes " << result.plan.route_count() << ", total "
      << fmt("%.4f", result.plan.total_duration / 60.0) << " min\n";
  for (std::size_t r = 0; r < result.plan.routes.size(); ++r) {
    out << "  route " << r + 1 << ":";
    for (int n : result.plan.routes[r].nodes) out << ' ' << result.costs.nodes()[static_cast<std::size_t>(n)].code;
    out << "  " << fmt("%.4f", result.plan.routes[r].duration / 60.0) << " min\n";
  }
  if (a.oracle) {
    const std::size_t n = result.costs.size() - 1;
    if (n > 8) {
      out << "oracle: skipped (" << n << " turbines > 8)\n";
    } else {
      const Tour brute = brute_force_path(result.costs, 8);
      if (brute.total != result.tour.total) {
        throw PlanError(ErrorKind::ValidationFailed, "oracle mismatch: dynamic programme " +
                                                         fmt("%.9f", result.tour.total) + " s, brute force " +
                                                         fmt("%.9f", brute.total) + " s");
      }
      out << "oracle: match\n";
    }
  }
  return 0;
}

struct EnergyArgs {
  std::string config, out;
  double airspeed = 16.0;
};

int cmd_energy(const EnergyArgs& a, std::ostream& out, std::ostream&) {
  const PlannerConfig config = config_or_default(a.config);
  const AirframeParams& af = config.airframe;
  validate(af);
  const HoverConstants hc = hover_constants(af);
  const PowerBreakdown pb = power(a.airspeed, af);
  const PowerBreakdown hover = power(0.0, af);
  const PowerBreakdown root = power(a.airspeed, af, InducedForm::OuterRoot);
  const double t_root = max_flight_time(af.battery_energy_wh, root.total_w);
  const double t_model = max_flight_time(af, a.airspeed);
  const double t_pub = max_flight_time(af.battery_energy_wh, kReferenceCruisePowerW);
  const auto warnings = consistency_warnings(af);

  out << "airspeed " << fmt("%.2f", a.airspeed) << " m/s\n";
  out << "hover profile P0     " << fmt("%10.4f", hc.profile_w) << " W\n";
  out << "hover induced Pi     " << fmt("%10.4f", hc.induced_w) << " W\n";
  out << "blade profile        " << fmt("%10.4f", pb.blade_profile_w) << " W\n";
  out << "induced              " << fmt("%10.4f", pb.induced_w) << " W\n";
  out << "parasite             " << fmt("%10.4f", pb.parasite_w) << " W\n";
  out << "total (computed)     " << fmt("%10.4f", pb.total_w) << " W\n";
  out << "total (published)    " << fmt("%10.4f", kReferenceCruisePowerW) << " W\n";
  out << "induced, outer root  " << fmt("%10.4f", root.induced_w) << " W\n";
  out << "total, outer root    " << fmt("%10.4f", root.total_w) << " W\n";
  out << "hover total          " << fmt("%10.4f", hover.total_w) << " W\n";
  out << "battery              " << fmt("%10.4f", af.battery_energy_wh) << " Wh\n";
  out << "t_max (computed)     " << fmt("%10.4f", t_model / 60.0) << " min\n";
  out << "t_max (outer root)   " << fmt("%10.4f", t_root / 60.0) << " min\n";
  out << "t_max (published P)  " << fmt("%10.4f", t_pub / 60.0) << " min (reference "
      << fmt("%.2f", kReferenceEnduranceMin) << ")\n";
  for (const auto& w : warnings) out << "warning: " << w << '\n';

  if (!a.out.empty()) {
    json j = {{"format", "uavplan.energy/1"},
              {"airspeed", a.airspeed},
              {"hover", {{"profile_w", hc.profile_w}, {"induced_w", hc.induced_w}, {"total_w", hover.total_w}}},
              {"computed",
               {{"blade_profile_w", pb.blade_profile_w},
                {"induced_w", pb.induced_w},
                {"parasite_w", pb.parasite_w},
                {"total_w", pb.total_w},
                {"t_max_min", t_model / 60.0}}},
              {"outer_root",
               {{"induced_w", root.induced_w}, {"total_w", root.total_w}, {"t_max_min", t_root / 60.0}}},
              {"published", {{"total_w", kReferenceCruisePowerW}, {"t_max_min", t_pub / 60.0}}},
              {"battery_energy_wh", af.battery_energy_wh},
              {"warnings", warnings}};
    write_text_file(a.out, dump_canonical(j));
  }
  return 0;
}

struct SynthLayoutArgs {
  std::string out;
  GridLayoutParams params;
};

int cmd_synth_layout(const SynthLayoutArgs& a, std::ostream& out) {
  const auto records = grid_layout(a.params);
  std::ostringstream ss;
  write_layout_csv(ss, records);
  write_text_file(a.out, ss.str());
  out << "wrote " << records.size() << " turbines to " << a.out << '\n';
  return 0;
}

struct SynthWindArgs {
  std::string out;
  SyntheticWindParams params;
};

int cmd_synth_wind(const SynthWindArgs& a, std::ostream& out) {
  const auto records = synthetic_wind(a.params);
  std::ostringstream ss;
  write_wind_csv(ss, records);
  write_text_file(a.out, ss.str());
  out << "wrote " << records.size() << " wind records to " << a.out << '\n';
  return 0;
}

void report_error(std::ostream& err, const std::string& kind, const std::string& message, int code) {
  json j = {{"error", kind}, {"message", message}, {"exit_code", code}};
  err << j.dump() << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inspection UAV placement and routing for offshore wind farms", "uavplan"};
  app.require_subcommand(1);

  StatsArgs stats;
  auto* s = app.add_subcommand("stats", "Gust/mean ratio statistics of a wind record");
  s->add_option("--wind", stats.wind, "wind CSV")->required();
  s->add_option("--bins", stats.bins, "histogram bins")->check(CLI::PositiveNumber);
  s->add_option("--out", stats.out, "also write the report as JSON");

  RangeArgs range;
  auto* r = app.add_subcommand("range", "Flying range of a UAV based at one turbine");
  r->add_option("--wind", range.wind)->required();
  r->add_option("--layout", range.layout)->required();
  r->add_option("--config", range.config);
  r->add_option("--uav-at", range.uav_at, "turbine code")->required();
  r->add_option("--out", range.out)->required();

  PlaceArgs place;
  auto* p = app.add_subcommand("place", "Minimum UAV placement covering the farm");
  p->add_option("--wind", place.wind)->required();
  p->add_option("--layout", place.layout)->required();
  p->add_option("--config", place.config);
  p->add_option("--out", place.out, "plan JSON")->required();
  p->add_option("--trace", place.trace, "per-step trace JSON");
  p->add_option("--svg", place.svg, "step figure");

  RouteArgs route;
  double t_max_s = 0.0;
  auto* rt = app.add_subcommand("route", "Inspection sorties for one UAV of a plan");
  rt->add_option("--plan", route.plan)->required();
  rt->add_option("--uav", route.uav, "UAV id from the plan")->required();
  rt->add_option("--wind-speed", route.wind_speed, "m/s")->required();
  rt->add_option("--wind-dir-met", route.wind_dir_met, "degrees, direction the wind blows from")->required();
  auto* tmax_opt = rt->add_option("--t-max", t_max_s, "endurance override, seconds");
  rt->add_option("--out", route.out, "routes JSON")->required();
  rt->add_option("--svg", route.svg, "route figure");
  rt->add_flag("--oracle", route.oracle, "check the tour against exhaustive search");

  EnergyArgs energy;
  auto* e = app.add_subcommand("energy", "Power breakdown and endurance of the airframe");
  e->add_option("--config", energy.config);
  e->add_option("--airspeed", energy.airspeed, "m/s")->check(CLI::NonNegativeNumber);
  e->add_option("--out", energy.out, "also write the report as JSON");

  SynthLayoutArgs sl;
  auto* l = app.add_subcommand("synth-layout", "Write a synthetic grid layout CSV");
  l->add_option("--out", sl.out)->required();
  l->add_option("--rows", sl.params.rows);
  l->add_option("--cols", sl.params.cols);
  l->add_option("--count", sl.params.count);
  l->add_option("--spacing", sl.params.spacing_m, "meters");

  SynthWindArgs sw;
  auto* w = app.add_subcommand("synth-wind", "Write a synthetic hourly wind CSV");
  w->add_option("--out", sw.out)->required();
  w->add_option("--count", sw.params.count);
  w->add_option("--seed", sw.params.seed);
  w->add_option("--fraction-below-two", sw.params.fraction_below_two);
  w->add_option("--weibull-lambda", sw.params.weibull_lambda);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    report_error(err, "Usage", ex.what(), 2);
    return 2;
  }

  try {
    if (s->parsed()) return cmd_stats(stats, out, err);
    if (r->parsed()) return cmd_range(range, out, err);
    if (p->parsed()) return cmd_place(place, out, err);
    if (rt->parsed()) {
      if (tmax_opt->count() > 0) route.t_max_s = t_max_s;
      return cmd_route(route, out, err);
    }
    if (e->parsed()) return cmd_energy(energy, out, err);
    if (l->parsed()) return cmd_synth_layout(sl, out);
    if (w->parsed()) return cmd_synth_wind(sw, out);
  } catch (const PlanError& ex) {
    const int code = exit_code(ex.kind());
    report_error(err, to_string(ex.kind()), ex.what(), code);
    return code;
  } catch (const std::exception& ex) {
    report_error(err, "Internal", ex.what(), 2);
    return 2;
  }
  return 2;
}

}  // namespace uavplan::io
