"""Inspection UAV placement and routing for offshore wind farms."""

import json

from ._core import (
    REFERENCE_CRUISE_POWER_W,
    AirframeParams,
    InducedForm,
    LegKinematics,
    PlanError,
    PowerBreakdown,
    WindRegime,
    WindVector,
    brute_force_path,
    consistency_warnings,
    fraction_ratio_below,
    held_karp_path,
    leg_kinematics,
    max_flight_time,
    met_to_pol,
    power,
    reference_airframe,
    run_cli,
    split_by_endurance,
    wind_from_met,
)
from . import _core


def plan_route(start, turbines, wind_speed, wind_dir_met_deg, u_max=16.0, u_wind=15.0, t_max=1200.0):
    """Routes for one UAV. Sites are (code, x, y) tuples; returns the routes document as a dict."""
    return json.loads(
        _core.plan_route_json(start, turbines, wind_speed, wind_dir_met_deg, u_max, u_wind, t_max)
    )


def place(wind_csv, layout_csv, config=None):
    """Placement plan for CSV inputs as a dict. `config` is a dict in the planner config format."""
    return json.loads(_core.place_json(str(wind_csv), str(layout_csv), json.dumps(config) if config else ""))


__all__ = [
    "REFERENCE_CRUISE_POWER_W",
    "AirframeParams",
    "InducedForm",
    "LegKinematics",
    "PlanError",
    "PowerBreakdown",
    "WindRegime",
    "WindVector",
    "brute_force_path",
    "consistency_warnings",
    "fraction_ratio_below",
    "held_karp_path",
    "leg_kinematics",
    "max_flight_time",
    "met_to_pol",
    "place",
    "plan_route",
    "power",
    "reference_airframe",
    "run_cli",
    "split_by_endurance",
    "wind_from_met",
]
