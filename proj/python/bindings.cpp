#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "uavplan/endurance.hpp"
#include "uavplan/errors.hpp"
#include "uavplan/flying_range.hpp"
#include "uavplan/io/canonical_json.hpp"
#include "uavplan/io/cli.hpp"
#include "uavplan/io/pipeline.hpp"
#include "uavplan/routing.hpp"
#include "uavplan/wind_model.hpp"

namespace py = pybind11;
using namespace uavplan;

namespace {

LegCostMatrix matrix_from_rows(const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> flat;
  flat.reserve(n * n);
  for (const auto& r : rows) {
    if (r.size() != n) throw PlanError(ErrorKind::InvalidInput, "cost matrix must be square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return LegCostMatrix::from_times(n, std::move(flat));
}

py::dict tour_dict(const Tour& t) {
  py::dict d;
  d["path"] = t.path;
  d["total"] = t.total;
  d["subsets"] = t.stats.subsets;
  d["states"] = t.stats.states;
  return d;
}

std::vector<Site> to_sites(const std::vector<std::tuple<std::string, double, double>>& items) {
  std::vector<Site> out;
  for (const auto& [code, x, y] : items) out.push_back({code, {x, y}});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Inspection UAV placement and routing core";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result(
      [&]() { return py::object(py::exception<PlanError>(m, "PlanError", PyExc_RuntimeError)); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const PlanError& e) {
      py::object type = error_type.get_stored();
      py::object inst = type(e.what());
      inst.attr("kind") = to_string(e.kind());
      PyErr_SetObject(type.ptr(), inst.ptr());
    }
  });

  py::class_<WindVector>(m, "WindVector")
      .def(py::init<double, double>(), py::arg("wx") = 0.0, py::arg("wy") = 0.0)
      .def_readwrite("wx", &WindVector::wx)
      .def_readwrite("wy", &WindVector::wy)
      .def_property_readonly("speed", &WindVector::speed)
      .def_property_readonly("pol_direction", &WindVector::pol_direction)
      .def("__repr__", [](const WindVector& w) {
        std::ostringstream os;
        os << "WindVector(" << w.wx << ", " << w.wy << ")";
        return os.str();
      });

  m.def("met_to_pol", &met_to_pol, py::arg("theta_met"));
  m.def("wind_from_met", &wind_from_met, py::arg("speed"), py::arg("theta_met"));

  py::enum_<WindRegime>(m, "WindRegime").value("Tail", WindRegime::Tail).value("Head", WindRegime::Head);

  py::class_<LegKinematics>(m, "LegKinematics")
      .def_readonly("groundspeed", &LegKinematics::groundspeed)
      .def_readonly("airspeed", &LegKinematics::airspeed)
      .def_readonly("theta_sw", &LegKinematics::theta_sw)
      .def_readonly("theta_sv", &LegKinematics::theta_sv)
      .def_readonly("time", &LegKinematics::time)
      .def_readonly("regime", &LegKinematics::regime)
      .def_readonly("airspeed_over_limit", &LegKinematics::airspeed_over_limit);

  m.def(
      "leg_kinematics",
      [](std::pair<double, double> a, std::pair<double, double> b, WindVector w, double u_max) {
        return leg_kinematics({a.first, a.second}, {b.first, b.second}, w, u_max);
      },
      py::arg("origin"), py::arg("target"), py::arg("wind"), py::arg("u_max"));

  py::class_<AirframeParams>(m, "AirframeParams")
      .def(py::init<>())
      .def_readwrite("weight_newton", &AirframeParams::weight_newton)
      .def_readwrite("rotor_radius_m", &AirframeParams::rotor_radius_m)
      .def_readwrite("air_density_kg_m3", &AirframeParams::air_density_kg_m3)
      .def_readwrite("disc_area_m2", &AirframeParams::disc_area_m2)
      .def_readwrite("blade_angular_velocity_rad_s", &AirframeParams::blade_angular_velocity_rad_s)
      .def_readwrite("tip_speed_m_s", &AirframeParams::tip_speed_m_s)
      .def_readwrite("blade_count", &AirframeParams::blade_count)
      .def_readwrite("chord_m", &AirframeParams::chord_m)
      .def_readwrite("rotor_solidity", &AirframeParams::rotor_solidity)
      .def_readwrite("induced_power_correction", &AirframeParams::induced_power_correction)
      .def_readwrite("hover_induced_velocity_m_s", &AirframeParams::hover_induced_velocity_m_s)
      .def_readwrite("profile_drag_coeff", &AirframeParams::profile_drag_coeff)
      .def_readwrite("flat_plate_area_m2", &AirframeParams::flat_plate_area_m2)
      .def_readwrite("fuselage_drag_ratio", &AirframeParams::fuselage_drag_ratio)
      .def_readwrite("battery_energy_wh", &AirframeParams::battery_energy_wh);

  py::class_<PowerBreakdown>(m, "PowerBreakdown")
      .def_readonly("blade_profile_w", &PowerBreakdown::blade_profile_w)
      .def_readonly("induced_w", &PowerBreakdown::induced_w)
      .def_readonly("parasite_w", &PowerBreakdown::parasite_w)
      .def_readonly("total_w", &PowerBreakdown::total_w);

  m.def("reference_airframe", &reference_airframe);
  py::enum_<InducedForm>(m, "InducedForm")
      .value("AsWritten", InducedForm::AsWritten)
      .value("OuterRoot", InducedForm::OuterRoot);
  m.def("power", &power, py::arg("airspeed"), py::arg("params"), py::arg("form") = InducedForm::AsWritten);
  m.def("max_flight_time", py::overload_cast<const AirframeParams&, double>(&max_flight_time),
        py::arg("params"), py::arg("airspeed"));
  m.def("consistency_warnings", &consistency_warnings, py::arg("params"));
  m.attr("REFERENCE_CRUISE_POWER_W") = kReferenceCruisePowerW;

  m.def(
      "fraction_ratio_below",
      [](const std::vector<double>& means, const std::vector<double>& gusts, double x) {
        if (means.size() != gusts.size()) throw PlanError(ErrorKind::InvalidInput, "length mismatch");
        std::vector<WindSample> samples;
        for (std::size_t i = 0; i < means.size(); ++i) samples.push_back({means[i], 0.0, gusts[i], 0.0});
        return wind_stats(samples).fraction_ratio_below(x);
      },
      py::arg("means"), py::arg("gusts"), py::arg("x"));

  m.def(
      "held_karp_path", [](const std::vector<std::vector<double>>& rows) {
        return tour_dict(held_karp_path(matrix_from_rows(rows)));
      },
      py::arg("costs"));
  m.def(
      "brute_force_path", [](const std::vector<std::vector<double>>& rows) {
        return tour_dict(brute_force_path(matrix_from_rows(rows)));
      },
      py::arg("costs"));
  m.def(
      "split_by_endurance",
      [](const std::vector<int>& path, const std::vector<std::vector<double>>& rows, double t_max) {
        const RoutePlan plan = split_by_endurance(path, matrix_from_rows(rows), t_max);
        std::vector<std::vector<int>> routes;
        for (const auto& r : plan.routes) routes.push_back(r.nodes);
        return routes;
      },
      py::arg("path"), py::arg("costs"), py::arg("t_max"));

  m.def(
      "plan_route_json",
      [](std::tuple<std::string, double, double> start,
         const std::vector<std::tuple<std::string, double, double>>& turbines, double wind_speed,
         double wind_dir_met_deg, double u_max, double u_wind, double t_max) {
        const auto [code, x, y] = start;
        const WindVector w = wind_from_met(wind_speed, deg_to_rad(wind_dir_met_deg));
        const auto sites = to_sites(turbines);
        const RouteResult res = plan_route({code, {x, y}}, sites, w, {u_max, u_wind}, t_max);
        io::UavSpec spec;
        spec.u_max = u_max;
        spec.u_wind = u_wind;
        spec.t_max_s = t_max;
        io::RouteReport rep{0, code, w, wind_speed, wind_dir_met_deg, spec, &res};
        return io::dump_canonical(io::to_json(rep));
      },
      py::arg("start"), py::arg("turbines"), py::arg("wind_speed"), py::arg("wind_dir_met_deg"),
      py::arg("u_max") = 16.0, py::arg("u_wind") = 15.0, py::arg("t_max") = 1200.0);

  m.def(
      "place_json",
      [](const std::string& wind_csv, const std::string& layout_csv, const std::string& config_json) {
        io::PlannerConfig config;
        if (!config_json.empty()) config = io::config_from_json(nlohmann::json::parse(config_json));
        const auto inputs = io::load_inputs(wind_csv, layout_csv, config);
        return io::dump_canonical(io::to_json(io::run_placement(inputs, config).plan));
      },
      py::arg("wind_csv"), py::arg("layout_csv"), py::arg("config_json") = "");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"uavplan"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = io::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
