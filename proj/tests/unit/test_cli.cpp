#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "uavplan/io/cli.hpp"
#include "uavplan/io/plan_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::vector<const char*> argv{"uavplan"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = uavplan::io::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(UAVPLAN_DATA_DIR) + "/" + name; }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "uavplan_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("energy report puts computed and published totals side by side") {
    const auto r = cli({"energy", "--config", data("airframe_reference.json")});
    CHECK(r.code == 0);
    CHECK(r.out.find("165.2861") != std::string::npos);
    CHECK(r.out.find("212.8200") != std::string::npos);
    CHECK(r.out.find("warning: disc_area_m2") != std::string::npos);
  }

  TEST_CASE("place on a one-turbine layout") {
    const auto dir = scratch();
    const auto layout = (dir / "one.csv").string();
    {
      std::FILE* f = std::fopen(layout.c_str(), "w");
      std::fputs("code,lon_deg,lat_deg\nA101,-3.5,54.04\n", f);
      std::fclose(f);
    }
    const auto plan = (dir / "one_plan.json").string();
    const auto r = cli({"place", "--wind", data("wind_synthetic.csv"), "--layout", layout, "--out", plan});
    CHECK(r.code == 0);
    std::ifstream in(plan);
    const auto j = nlohmann::json::parse(in);
    CHECK(j["uavs"].size() == 1);
    for (const auto& c : j["constraints"]) CHECK((c["passed"].get<bool>() || c["informational"].get<bool>()));
  }

  TEST_CASE("route with oracle on the demo plan") {
    const auto dir = scratch();
    const auto plan = (dir / "plan.json").string();
    auto r = cli({"place", "--wind", data("wind_synthetic.csv"), "--layout", data("layout_synthetic.csv"),
                  "--config", data("planner_config_demo.json"), "--out", plan, "--trace",
                  (dir / "trace.json").string(), "--svg", (dir / "steps.svg").string()});
    REQUIRE(r.code == 0);
    std::ifstream in(plan);
    const auto doc = uavplan::io::plan_from_json(nlohmann::json::parse(in));
    REQUIRE(!doc.uavs.empty());
    for (const auto& u : doc.uavs) {
      r = cli({"route", "--plan", plan, "--uav", std::to_string(u.id), "--wind-speed", "8", "--wind-dir-met",
               "90", "--out", (dir / "routes.json").string(), "--oracle"});
      CHECK(r.code == 0);
      CHECK(r.out.find("oracle: match") != std::string::npos);
    }
  }

  TEST_CASE("errors are JSON on stderr with the documented exit codes") {
    const auto dir = scratch();
    auto r = cli({"place", "--wind", "/nonexistent.csv", "--layout", data("layout_synthetic.csv"), "--out",
                  (dir / "x.json").string()});
    CHECK(r.code == 4);
    auto j = nlohmann::json::parse(r.err);
    CHECK(j["error"] == "IoError");

    r = cli({"energy", "--airspeed", "abc"});
    CHECK(r.code == 2);
    CHECK(nlohmann::json::parse(r.err).contains("message"));

    r = cli({});
    CHECK(r.code == 2);

    const auto plan = (dir / "plan_err.json").string();
    REQUIRE(cli({"place", "--wind", data("wind_synthetic.csv"), "--layout", data("layout_synthetic.csv"),
                 "--config", data("planner_config_demo.json"), "--out", plan})
                .code == 0);
    std::ifstream in(plan);
    const auto doc = nlohmann::json::parse(in);
    const auto id = std::to_string(doc["uavs"][0]["id"].get<int>());
    r = cli({"route", "--plan", plan, "--uav", id, "--wind-speed", "16", "--wind-dir-met", "0", "--out",
             (dir / "r.json").string()});
    CHECK(r.code == 3);
    CHECK(nlohmann::json::parse(r.err)["error"] == "NoFly");

    r = cli({"route", "--plan", plan, "--uav", "9999", "--wind-speed", "1", "--wind-dir-met", "0", "--out",
             (dir / "r.json").string()});
    CHECK(r.code == 2);
  }

  TEST_CASE("stats report") {
    const auto r = cli({"stats", "--wind", data("wind_synthetic.csv")});
    CHECK(r.code == 0);
    CHECK(r.out.find("ratio < 2.00: 0.9314") != std::string::npos);
  }

  TEST_CASE("help exits cleanly") {
    const auto r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("place") != std::string::npos);
  }
}
