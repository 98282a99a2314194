import json
import math
import os
from pathlib import Path

import pytest

import uavplan

DATA = Path(os.environ.get("UAVPLAN_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def test_wind_vector_from_met():
    w = uavplan.wind_from_met(8.0, math.pi / 2)
    assert w.wx == pytest.approx(-8.0)
    assert abs(w.wy) < 1e-12
    assert w.speed == pytest.approx(8.0)


def test_leg_kinematics_head_wind():
    leg = uavplan.leg_kinematics((0, 0), (1000, 0), uavplan.WindVector(-6, 0), 16.0)
    assert leg.regime == uavplan.WindRegime.Head
    assert leg.groundspeed == pytest.approx(10.0)


def test_power_breakdown():
    p = uavplan.power(16.0, uavplan.reference_airframe())
    assert p.total_w == pytest.approx(165.2860647, rel=1e-8)
    assert uavplan.REFERENCE_CRUISE_POWER_W == 212.82


def test_held_karp_matches_brute_force():
    costs = [[0, 10, 1, 5], [1, 0, 10, 3], [10, 1, 0, 7], [2, 9, 4, 0]]
    hk = uavplan.held_karp_path(costs)
    bf = uavplan.brute_force_path(costs)
    assert hk["total"] == bf["total"]
    assert hk["path"][0] == 0 and hk["path"][-1] == 0


def test_plan_route_splits():
    sites = [("C", -225, 2834), ("E", -2992, -952), ("A106", -549, -667), ("A411", 322, -310)]
    doc = uavplan.plan_route(("S", 0, 0), sites, 8.0, 90.0, t_max=12 * 60)
    assert doc["route_count"] == 2
    assert all(r["duration_s"] < 720 for r in doc["routes"])


def test_errors_carry_kind():
    with pytest.raises(uavplan.PlanError) as info:
        uavplan.plan_route(("S", 0, 0), [("A", 100, 0)], 20.0, 0.0)
    assert info.value.kind == "NoFly"


def test_place_and_cli(tmp_path):
    plan = uavplan.place(DATA / "wind_synthetic.csv", DATA / "layout_synthetic.csv", {"range": {"epsilon_v": 6}})
    assert plan["format"] == "uavplan.plan/1"
    assert all(c["passed"] or c["informational"] for c in plan["constraints"])
    out = tmp_path / "plan.json"
    code, stdout, stderr = uavplan.run_cli(
        ["place", "--wind", str(DATA / "wind_synthetic.csv"), "--layout", str(DATA / "layout_synthetic.csv"),
         "--config", str(DATA / "planner_config_demo.json"), "--out", str(out)]
    )
    assert code == 0, stderr
    assert json.loads(out.read_text())["summary"]["active"] == plan["summary"]["active"]
