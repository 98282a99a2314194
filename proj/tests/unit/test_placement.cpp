#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "uavplan/errors.hpp"
#include "uavplan/placement.hpp"

using namespace uavplan;

namespace {

PlacementProblem line(std::size_t n, double spacing, double rho, int p, double d) {
  std::vector<Point2D> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back({spacing * static_cast<double>(i), 0.0});
  return fixture::problem_from(pts, fixture::calm_range(rho), p, d);
}

bool failed(const ConstraintReport& r, const char* id) {
  const auto* c = r.find(id);
  return c && !c->passed;
}

}  // namespace

TEST_SUITE("placement") {
  TEST_CASE("single turbine needs one UAV") {
    const auto pb = line(1, 0.0, 9600, 5, 5000);
    const auto res = plan_placement(pb);
    CHECK(res.state.active_count() == 1);
    CHECK(res.report.ok());
    CHECK(res.state.turbines_of(0) == std::vector<int>{0});
  }

  TEST_CASE("init builds links and assignments") {
    const auto pb = line(4, 3000.0, 4000.0, 5, 5000.0);
    const auto s = init_placement(pb);
    CHECK(s.active_count() == 4);
    CHECK(s.links(0, 1) == 1);
    CHECK(s.links(0, 2) == 0);  // 6000 m apart
    CHECK(s.links(1, 1) == 0);
    CHECK(s.assign(0, 1) == 1);
    CHECK(s.assign(0, 2) == 0);
    CHECK(s.assign.row_sum(1) == 3);
  }

  TEST_CASE("clustered turbines collapse to one UAV") {
    const auto pb = line(3, 1000.0, 5000.0, 5, 5000.0);
    const auto res = plan_placement(pb);
    CHECK(res.state.active_count() == 1);
    CHECK(res.state.assign.row_sum(static_cast<std::size_t>(res.state.active_uavs()[0])) == 3);
    CHECK(res.report.ok());
  }

  TEST_CASE("capacity caps the load") {
    const auto pb = line(7, 100.0, 5000.0, 3, 5000.0);
    const auto capped = enforce_capacity(init_placement(pb), pb);
    for (std::size_t i = 0; i < 7; ++i) {
      CHECK(capped.assign.row_sum(i) <= 3);
      CHECK(capped.assign(i, i) == 1);  // home turbine kept
    }
    const auto res = plan_placement(pb);
    CHECK(res.report.ok());
    CHECK(res.state.active_count() >= 3);  // ceil(7 / 3)
  }

  TEST_CASE("capacity drops the farthest shared turbines first") {
    const auto pb = line(4, 100.0, 5000.0, 2, 5000.0);
    const auto capped = enforce_capacity(init_placement(pb), pb);
    CHECK(capped.turbines_of(0) == std::vector<int>{0, 1});
    CHECK(capped.turbines_of(3) == std::vector<int>{2, 3});
  }

  TEST_CASE("capacity infeasible when non-home turbines are uncovered elsewhere") {
    const auto pb = line(3, 100.0, 5000.0, 1, 5000.0);
    PlacementState s = init_placement(pb);
    for (std::size_t i = 1; i < 3; ++i) s.assign.clear_row(i);
    try {
      enforce_capacity(s, pb);
      FAIL("expected CapacityInfeasible");
    } catch (const PlanError& e) {
      CHECK(e.kind() == ErrorKind::CapacityInfeasible);
    }
  }

  TEST_CASE("remove step keeps every survivor linked") {
    // Two far clusters joined by a middle turbine; d only reaches neighbours.
    const auto pb = line(3, 4000.0, 9000.0, 5, 4500.0);
    const auto res = plan_placement(pb);
    CHECK(res.report.ok());
    const auto act = res.state.active_uavs();
    if (act.size() >= 2) {
      for (int i : act) {
        bool linked = false;
        for (int j : act) linked = linked || (i != j && res.state.links(i, j));
        CHECK(linked);
      }
    }
  }

  TEST_CASE("trace records every step") {
    const auto pb = line(5, 1000.0, 5000.0, 5, 5000.0);
    const auto res = plan_placement(pb);
    REQUIRE(!res.trace.empty());
    CHECK(res.trace.front().action == "start");
    CHECK(res.trace.front().active.size() == 5);
    CHECK(res.trace.back().step == res.state.step);
    CHECK(res.trace.size() == static_cast<std::size_t>(res.state.step) + 1);
    for (std::size_t i = 1; i < res.trace.size(); ++i) {
      CHECK(res.trace[i].step == res.trace[i - 1].step + 1);
      CHECK(res.trace[i].active.size() <= res.trace[i - 1].active.size());
    }
  }

  TEST_CASE("validator flags broken states") {
    const auto pb = line(3, 1000.0, 5000.0, 2, 1500.0);
    const auto good = plan_placement(pb);
    CHECK(good.report.ok());

    auto s = good.state;
    const int u = s.active_uavs()[0];
    int other = -1;
    for (int k = 0; k < 3; ++k)
      if (!s.assign(static_cast<std::size_t>(u), static_cast<std::size_t>(k))) other = k;
    REQUIRE(other >= 0);

    SUBCASE("double assignment") {
      for (std::size_t i = 0; i < 3; ++i) s.assign(i, static_cast<std::size_t>(other)) = 1;
      CHECK(failed(validate(s, pb), "single_assignment"));
    }
    SUBCASE("uncovered turbine") {
      for (std::size_t i = 0; i < 3; ++i) s.assign(i, static_cast<std::size_t>(other)) = 0;
      CHECK(failed(validate(s, pb), "coverage"));
    }
    SUBCASE("over capacity") {
      for (std::size_t k = 0; k < 3; ++k) s.assign(static_cast<std::size_t>(u), k) = 1;
      CHECK(failed(validate(s, pb), "capacity"));
    }
    SUBCASE("inactive UAV holding turbines") {
      for (std::size_t i = 0; i < 3; ++i)
        if (!s.active[i]) s.assign(i, i) = 1;
      if (s.active_count() < 3) CHECK(failed(validate(s, pb), "active_only"));
    }
    SUBCASE("asymmetric link") {
      s.links(0, 1) = 1;
      s.links(1, 0) = 0;
      CHECK(failed(validate(s, pb), "link_matrix"));
    }
    SUBCASE("link beyond d") {
      s.active.assign(3, 1);
      s.links(0, 2) = s.links(2, 0) = 1;
      CHECK(failed(validate(s, pb), "link_distance"));
    }
    SUBCASE("UAV off its turbines") {
      s.positions[static_cast<std::size_t>(u)] = {123.0, 456.0};
      CHECK(failed(validate(s, pb), "position"));
    }
    SUBCASE("turbine outside range") {
      const auto far = line(3, 6000.0, 5000.0, 5, 7000.0);
      auto st = init_placement(far);
      st.assign(0, 2) = 1;
      CHECK(failed(validate(st, far), "range"));
    }
    SUBCASE("summary names the failing check") {
      for (std::size_t i = 0; i < 3; ++i) s.assign(i, static_cast<std::size_t>(other)) = 0;
      const auto r = validate(s, pb);
      CHECK_FALSE(r.ok());
      CHECK(r.summary().find("coverage") != std::string::npos);
    }
  }

  TEST_CASE("problem validation") {
    auto pb = line(2, 100.0, 5000.0, 5, 5000.0);
    pb.p = 0;
    CHECK_THROWS_AS(init_placement(pb), PlanError);
    pb = line(2, 100.0, 5000.0, 5, 5000.0);
    pb.turbines[1].code = pb.turbines[0].code;
    CHECK_THROWS_AS(init_placement(pb), PlanError);
    pb = line(2, 100.0, 5000.0, 5, 5000.0);
    pb.ranges.pop_back();
    CHECK_THROWS_AS(init_placement(pb), PlanError);
  }

  TEST_CASE("random instances validate and are fixed points") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 60; ++it) {
      const auto pb = fixture::random_placement(rng, fixture::random_spec(rng, 3, 20));
      const auto res = plan_placement(pb);
      CHECK(res.report.ok());
      const auto again = minimize_uavs(res.state, pb);
      CHECK(again.state == res.state);
      CHECK(plan_placement(pb).state == res.state);
    }
  }

  TEST_CASE("heuristic never beats the exhaustive optimum") {
    std::mt19937_64 rng(77);
    for (int it = 0; it < 30; ++it) {
      const auto pb = fixture::random_placement(rng, fixture::random_spec(rng, 2, 9));
      const auto res = plan_placement(pb);
      const int best = oracle::min_uavs(pb);
      REQUIRE(best > 0);
      CHECK(static_cast<int>(res.state.active_count()) >= best);
    }
  }
}
