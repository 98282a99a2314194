#include "uavplan/io/plan_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "uavplan/errors.hpp"

namespace uavplan::io {

using nlohmann::json;

const PlannedUav* PlanDocument::find_uav(int id) const {
  for (const auto& u : uavs)
    if (u.id == id) return &u;
  return nullptr;
}

PlanDocument make_plan_document(const PlacementProblem& problem, const PlacementResult& result,
                                const UavSpec& uav, const RangeSummary& range) {
  PlanDocument doc;
  doc.uav = uav;
  doc.range = range;
  doc.turbines = problem.turbines;
  doc.candidates = static_cast<int>(result.state.uav_count());
  doc.steps = result.state.step;
  doc.constraints = result.report.checks;
  for (int i : result.state.active_uavs()) {
    const auto iu = static_cast<std::size_t>(i);
    PlannedUav u;
    u.id = i;
    u.home = i;
    u.pos = result.state.positions[iu];
    u.turbines = result.state.turbines_of(iu);
    for (std::size_t j = 0; j < result.state.uav_count(); ++j)
      if (result.state.links(iu, j) && result.state.active[j]) u.links.push_back(static_cast<int>(j));
    doc.uavs.push_back(std::move(u));
  }
  return doc;
}

json to_json(const PlanDocument& plan) {
  json j;
  j["format"] = kPlanFormat;
  j["uav_spec"] = to_json(plan.uav);
  j["range"] = {{"mu", plan.range.mu},
                {"epsilon_v", plan.range.epsilon_v},
                {"rho_m", plan.range.rho_m},
                {"max_drift_m", plan.range.max_drift_m}};
  json turbines = json::array();
  for (const auto& t : plan.turbines) turbines.push_back({{"code", t.code}, {"x", t.pos.x}, {"y", t.pos.y}});
  j["turbines"] = std::move(turbines);
  json uavs = json::array();
  for (const auto& u : plan.uavs) {
    json codes = json::array();
    for (int k : u.turbines) codes.push_back(plan.turbines.at(static_cast<std::size_t>(k)).code);
    uavs.push_back({{"id", u.id},
                    {"home", plan.turbines.at(static_cast<std::size_t>(u.home)).code},
                    {"x", u.pos.x},
                    {"y", u.pos.y},
                    {"turbines", std::move(codes)},
                    {"links", u.links}});
  }
  j["uavs"] = std::move(uavs);
  j["summary"] = {{"candidates", plan.candidates},
                  {"active", static_cast<int>(plan.uavs.size())},
                  {"steps", plan.steps}};
  json checks = json::array();
  for (const auto& c : plan.constraints) {
    checks.push_back({{"id", c.id},
                      {"description", c.description},
                      {"passed", c.passed},
                      {"informational", c.informational},
                      {"violations", c.violations}});
  }
  j["constraints"] = std::move(checks);
  return j;
}

PlanDocument plan_from_json(const json& j) {
  try {
    if (j.value("format", std::string()) != kPlanFormat) {
      throw PlanError(ErrorKind::InvalidInput, "not a plan document (format != uavplan.plan/1)");
    }
    PlanDocument doc;
    doc.uav = uav_spec_from_json(j.at("uav_spec"));
    const auto& r = j.at("range");
    doc.range = {r.at("mu").get<int>(), r.at("epsilon_v").get<double>(), r.at("rho_m").get<double>(),
                 r.at("max_drift_m").get<double>()};
    std::map<std::string, int> index;
    for (const auto& t : j.at("turbines")) {
      Turbine tb{t.at("code").get<std::string>(), {t.at("x").get<double>(), t.at("y").get<double>()}};
      if (!index.emplace(tb.code, static_cast<int>(doc.turbines.size())).second) {
        throw PlanError(ErrorKind::DuplicateCode, "duplicate turbine code " + tb.code + " in plan");
      }
      doc.turbines.push_back(std::move(tb));
    }
    auto lookup = [&](const std::string& code) {
      auto it = index.find(code);
      if (it == index.end()) throw PlanError(ErrorKind::InvalidInput, "plan references unknown turbine " + code);
      return it->second;
    };
    for (const auto& u : j.at("uavs")) {
      PlannedUav pu;
      pu.id = u.at("id").get<int>();
      pu.home = lookup(u.at("home").get<std::string>());
      pu.pos = {u.at("x").get<double>(), u.at("y").get<double>()};
      for (const auto& c : u.at("turbines")) pu.turbines.push_back(lookup(c.get<std::string>()));
      pu.links = u.at("links").get<std::vector<int>>();
      doc.uavs.push_back(std::move(pu));
    }
    const auto& s = j.at("summary");
    doc.candidates = s.at("candidates").get<int>();
    doc.steps = s.at("steps").get<int>();
    for (const auto& c : j.at("constraints")) {
      ConstraintCheck cc;
      cc.id = c.at("id").get<std::string>();
      cc.description = c.at("description").get<std::string>();
      cc.passed = c.at("passed").get<bool>();
      cc.informational = c.at("informational").get<bool>();
      cc.violations = c.at("violations").get<std::vector<std::string>>();
      doc.constraints.push_back(std::move(cc));
    }
    return doc;
  } catch (const json::exception& e) {
    throw PlanError(ErrorKind::InvalidInput, std::string("malformed plan document: ") + e.what());
  }
}

json trace_to_json(const std::vector<StepSnapshot>& trace, const PlacementProblem& problem) {
  json steps = json::array();
  for (const auto& s : trace) {
    json assignments = json::object();
    for (std::size_t a = 0; a < s.active.size(); ++a) {
      json codes = json::array();
      for (int k : s.assignments[a]) codes.push_back(problem.turbines.at(static_cast<std::size_t>(k)).code);
      assignments[std::to_string(s.active[a])] = std::move(codes);
    }
    json links = json::array();
    for (const auto& [a, b] : s.links) links.push_back(json::array({a, b}));
    steps.push_back({{"step", s.step},
                     {"action", s.action},
                     {"uav", s.uav},
                     {"active", s.active},
                     {"assignments", std::move(assignments)},
                     {"links", std::move(links)}});
  }
  return {{"format", kTraceFormat}, {"steps", std::move(steps)}};
}

namespace {

const char* regime_name(WindRegime r) { return r == WindRegime::Tail ? "tail" : "head"; }

json codes_of(const LegCostMatrix& costs, const std::vector<int>& path) {
  json out = json::array();
  for (int n : path) out.push_back(costs.nodes().at(static_cast<std::size_t>(n)).code);
  return out;
}

}  // namespace

json to_json(const RouteReport& rep) {
  if (!rep.result) throw PlanError(ErrorKind::InvalidInput, "route report without a result");
  const RouteResult& res = *rep.result;
  const LegCostMatrix& costs = res.costs;

  json routes = json::array();
  for (std::size_t r = 0; r < res.plan.routes.size(); ++r) {
    const Route& route = res.plan.routes[r];
    json legs = json::array();
    for (std::size_t i = 0; i + 1 < route.nodes.size(); ++i) {
      const auto k = static_cast<std::size_t>(route.nodes[i]);
      const auto l = static_cast<std::size_t>(route.nodes[i + 1]);
      json leg = {{"from", costs.nodes()[k].code}, {"to", costs.nodes()[l].code}, {"time_s", costs(k, l)}};
      if (const auto& kin = costs.leg(k, l)) {
        leg["groundspeed"] = kin->groundspeed;
        leg["airspeed"] = kin->airspeed;
        leg["theta_sw"] = kin->theta_sw;
        leg["theta_sv"] = kin->theta_sv;
        leg["regime"] = regime_name(kin->regime);
        leg["airspeed_over_limit"] = kin->airspeed_over_limit;
      }
      legs.push_back(std::move(leg));
    }
    routes.push_back({{"index", static_cast<int>(r + 1)},
                      {"path", codes_of(costs, route.nodes)},
                      {"duration_s", route.duration},
                      {"duration_min", route.duration / 60.0},
                      {"legs", std::move(legs)}});
  }

  json j;
  j["format"] = kRoutesFormat;
  j["uav"] = rep.uav_id;
  j["home"] = rep.home;
  j["wind"] = {{"speed", rep.wind_speed},
               {"dir_met_deg", rep.wind_dir_met_deg},
               {"wx", rep.wind.wx},
               {"wy", rep.wind.wy}};
  j["limits"] = {{"u_max", rep.limits.u_max}, {"u_wind", rep.limits.u_wind}, {"t_max_s", rep.limits.t_max_s}};
  j["tour"] = {{"path", codes_of(costs, res.tour.path)},
               {"total_s", res.tour.total},
               {"total_min", res.tour.total / 60.0},
               {"dp_subsets", res.tour.stats.subsets},
               {"dp_states", res.tour.stats.states}};
  j["routes"] = std::move(routes);
  j["route_count"] = res.plan.route_count();
  j["total_duration_s"] = res.plan.total_duration;
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  if (content.empty()) throw PlanError(ErrorKind::IoError, "refusing to write empty file " + path);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw PlanError(ErrorKind::IoError, "cannot open " + path + " for writing");
  out << content;
  if (!out) throw PlanError(ErrorKind::IoError, "write to " + path + " failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PlanError(ErrorKind::IoError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace uavplan::io
