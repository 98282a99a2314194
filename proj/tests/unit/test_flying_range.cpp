#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "uavplan/errors.hpp"
#include "uavplan/flying_range.hpp"

using namespace uavplan;

namespace {

// Sample whose polar direction is `pol` (radians).
WindSample toward(double speed, double pol) {
  // met = 3pi/2 - pol
  return {speed, normalize_angle(1.5 * kPi - pol), std::nullopt, std::nullopt};
}

double mid(int b, int mu) { return (2.0 * b * kPi - kPi) / mu; }

}  // namespace

TEST_SUITE("flying_range") {
  TEST_CASE("wind_stats basic counting") {
    std::vector<WindSample> s(10, WindSample{4.0, 0.0, 6.0, 0.0});
    const auto st = wind_stats(s);
    CHECK(st.fraction_ratio_below(2.0) == 1.0);
    CHECK(st.fraction_ratio_below(1.5) == 0.0);  // strict: 1.5 is not below 1.5
    CHECK(st.fraction_mean_below(4.0) == 0.0);
    CHECK(st.fraction_mean_below(4.01) == 1.0);
    std::size_t total = 0;
    for (const auto& b : st.ratio_histogram()) total += b.count;
    CHECK(total == 10);
  }

  TEST_CASE("wind_stats without gusts") {
    std::vector<WindSample> s{{3.0, 0.0, std::nullopt, std::nullopt}, {5.0, 1.0, std::nullopt, std::nullopt}};
    const auto st = wind_stats(s);
    CHECK(st.ratio_histogram().empty());
    CHECK(st.ratio_count() == 0);
    CHECK_THROWS_AS(st.fraction_ratio_below(2.0), PlanError);
    CHECK(st.fraction_mean_below(4.0) == 0.5);
    CHECK_THROWS_AS(wind_stats(std::vector<WindSample>{}), PlanError);
  }

  TEST_CASE("calm samples are excluded from ratios") {
    std::vector<WindSample> s{{0.0, 0.0, 3.0, 0.0}, {2.0, 0.0, 3.0, 0.0}};
    const auto st = wind_stats(s);
    CHECK(st.ratio_count() == 1);
    CHECK(st.sample_count() == 2);
  }

  TEST_CASE("fractions are monotone and within [0,1]") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> m(0.0, 14.0), r(1.0, 3.0);
    std::vector<WindSample> s;
    for (int i = 0; i < 500; ++i) {
      const double mean = m(rng);
      s.push_back({mean, 0.0, mean * r(rng), 0.0});
    }
    const auto st = wind_stats(s, 10);
    double prev_r = 0.0, prev_m = 0.0;
    for (double x = 0.0; x <= 16.0; x += 0.05) {
      const double fr = st.fraction_ratio_below(x), fm = st.fraction_mean_below(x);
      CHECK(fr >= prev_r);
      CHECK(fm >= prev_m);
      CHECK(fr <= 1.0);
      CHECK(fm <= 1.0);
      prev_r = fr;
      prev_m = fm;
    }
    std::size_t total = 0;
    for (const auto& b : st.ratio_histogram()) total += b.count;
    CHECK(total == st.ratio_count());
  }

  TEST_CASE("epsilon threshold modes") {
    EpsilonOptions nearest{EpsilonMode::Nearest, std::nullopt, 1.0};
    EpsilonOptions floor{EpsilonMode::Floor, std::nullopt, 1.0};
    CHECK(epsilon_from_factor(15.0, 2.0, nearest) == 8.0);
    CHECK(epsilon_from_factor(15.0, 2.0, floor) == 7.0);
    CHECK(epsilon_from_factor(15.0, 1.0, floor) == 15.0);
    CHECK(epsilon_from_factor(12.0, 2.0, floor) == 6.0);
    CHECK(epsilon_from_factor(15.0, 2.0, {EpsilonMode::Override, 8.0, 1.0}) == 8.0);
    // Override without a value falls back to rounding down.
    CHECK(epsilon_from_factor(15.0, 2.0, {EpsilonMode::Override, std::nullopt, 1.0}) == 7.0);
    CHECK(epsilon_from_factor(15.0, 2.0, {EpsilonMode::Floor, std::nullopt, 0.5}) == 7.5);
    CHECK_THROWS_AS(epsilon_from_factor(15.0, 0.5, floor), PlanError);

    std::vector<WindSample> s{{4.0, 0.0, 6.0, 0.0}, {4.0, 0.0, 10.0, 0.0}};
    const auto c = choose_epsilon_v(wind_stats(s), 15.0, 2.0, nearest);
    CHECK(c.value == 8.0);
    REQUIRE(c.gust_coverage);
    CHECK(*c.gust_coverage == 0.5);
  }

  TEST_CASE("segment envelope takes the capped maximum") {
    const int mu = 36;
    const double d = mid(5, mu);
    std::vector<WindSample> s{toward(3, d), toward(5, d), toward(7, d)};
    const auto w = segment_envelope(s, mu, 8.0, 5);
    CHECK(w.speed() == doctest::Approx(7.0));
    CHECK(w.pol_direction() == doctest::Approx(d));

    s.push_back(toward(12, d));
    CHECK(segment_envelope(s, mu, 8.0, 5).speed() == doctest::Approx(8.0));
    // Empty segment takes epsilon.
    CHECK(segment_envelope(s, mu, 8.0, 20).speed() == doctest::Approx(8.0));
    CHECK_THROWS_AS(segment_envelope(s, mu, 8.0, 0), PlanError);
    CHECK_THROWS_AS(segment_envelope(s, mu, 8.0, 37), PlanError);
  }

  TEST_CASE("segment boundaries belong to both neighbours") {
    const int mu = 4;
    std::vector<WindSample> s{toward(5.0, kPi / 2)};
    CHECK(segment_envelope(s, mu, 8.0, 1).speed() == doctest::Approx(5.0));
    CHECK(segment_envelope(s, mu, 8.0, 2).speed() == doctest::Approx(5.0));
    CHECK(segment_envelope(s, mu, 8.0, 3).speed() == doctest::Approx(8.0));
  }

  TEST_CASE("zero wind gives the single rho disc") {
    const std::vector<WindVector> env(36, WindVector{0, 0});
    const auto r = build_range({100.0, -50.0}, env, 1200.0, 16.0);
    CHECK(r.segments().size() == 36);
    CHECK(r.rho() == 9600.0);
    CHECK(r.max_drift() == 0.0);
    for (const auto& seg : r.segments()) {
      CHECK(seg.disc.radius == 9600.0);
      CHECK(seg.disc.center == Point2D{100.0, -50.0});
    }
    CHECK(r.contains({100.0 + 9599.0, -50.0}));
    CHECK_FALSE(r.contains({100.0 + 9601.0, -50.0}));
  }

  TEST_CASE("zero-speed samples in every segment, epsilon 0") {
    std::vector<WindSample> s;
    for (int b = 1; b <= 36; ++b) s.push_back(toward(0.0, mid(b, 36)));
    const auto r = build_range({0, 0}, s, RangeParams{36, 0.0, 1200.0, 16.0});
    CHECK(r.max_drift() == 0.0);
  }

  TEST_CASE("uniform 8 m/s wind leaves only the anchor") {
    std::vector<WindSample> s;
    for (int b = 1; b <= 36; ++b) s.push_back(toward(8.0, mid(b, 36)));
    const auto r = build_range({10.0, 20.0}, s, RangeParams{36, 8.0, 1200.0, 16.0});
    CHECK(r.max_drift() == doctest::Approx(9600.0));
    CHECK(r.contains({10.0, 20.0}));
    CHECK_FALSE(r.contains({60.0, 20.0}));
    CHECK_FALSE(r.contains({10.0, -30.0}));
  }

  TEST_CASE("far points are outside") {
    std::vector<WindSample> s{toward(5.0, 0.3)};
    const auto r = build_range({0, 0}, s, RangeParams{});
    CHECK(r.contains({0, 0}));
    CHECK_FALSE(r.contains({9600.0 + r.max_drift() + 1.0, 0.0}));
  }

  TEST_CASE("contains agrees with the per-disc oracle") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> sp(0.0, 10.0), ang(0.0, kTwoPi), pos(-12000.0, 12000.0);
    std::vector<WindSample> s;
    for (int i = 0; i < 300; ++i) s.push_back({sp(rng), ang(rng), std::nullopt, std::nullopt});
    const auto r = build_range({0, 0}, s, RangeParams{36, 6.0, 1200.0, 16.0});
    std::vector<std::pair<double, double>> winds;
    for (const auto& seg : r.segments()) winds.emplace_back(seg.wind.wx, seg.wind.wy);
    int disagree = 0;
    for (int i = 0; i < 5000; ++i) {
      const double x = pos(rng), y = pos(rng);
      if (r.contains({x, y}) != oracle::in_all_discs(0, 0, winds, 1200.0, 16.0, x, y)) ++disagree;
    }
    CHECK(disagree == 0);
  }

  TEST_CASE("translated keeps the envelope shape") {
    std::vector<WindSample> s{toward(5.0, 0.3), toward(2.0, 2.0)};
    const auto r = build_range({0, 0}, s, RangeParams{});
    const auto t = r.translated({500.0, 700.0});
    CHECK(t.anchor() == Point2D{500.0, 700.0});
    CHECK(t.max_drift() == doctest::Approx(r.max_drift()));
    for (int i = -5; i <= 5; ++i) {
      const Point2D p{i * 2000.0, i * 1100.0};
      CHECK(r.contains(p) == t.contains({p.x + 500.0, p.y + 700.0}));
    }
  }

  TEST_CASE("bad parameters") {
    std::vector<WindVector> env(4);
    CHECK_THROWS_AS(build_range({0, 0}, env, 0.0, 16.0), PlanError);
    CHECK_THROWS_AS(build_range({0, 0}, env, 1200.0, -1.0), PlanError);
    CHECK_THROWS_AS(build_range({0, 0}, std::vector<WindSample>{}, RangeParams{0, 8.0, 1200.0, 16.0}), PlanError);
  }
}
