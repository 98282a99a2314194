#include "uavplan/io/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <random>
#include <string>

#include "uavplan/errors.hpp"
#include "uavplan/geometry.hpp"

namespace uavplan::io {
namespace {

// std distributions are implementation-defined; these are not.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

std::size_t below(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
}

std::string hourly_timestamp(int hour) {
  std::tm base{};
  base.tm_year = 2019 - 1900;
  base.tm_mon = 0;
  base.tm_mday = 1;
  base.tm_hour = hour;
  const std::time_t t = timegm(&base);
  std::tm out{};
  gmtime_r(&t, &out);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &out);
  return buf;
}

double round_to(double v, double step) { return std::round(v / step) * step; }

}  // namespace

std::vector<TurbineRecord> grid_layout(const GridLayoutParams& p) {
  if (p.rows < 1 || p.cols < 1 || p.rows > 26 || p.count < 1 || p.count > p.rows * p.cols || p.spacing_m <= 0) {
    throw PlanError(ErrorKind::InvalidInput, "invalid grid layout parameters");
  }
  const double lat_step = rad_to_deg(p.spacing_m / kEarthRadiusM);
  const double lon_step = lat_step / std::cos(deg_to_rad(p.origin_lat));
  std::vector<TurbineRecord> out;
  for (int r = 0; r < p.rows; ++r) {
    for (int c = 0; c < p.cols; ++c) {
      if (static_cast<int>(out.size()) == p.count) return out;
      const double shift = (r % 2 == 1) ? p.row_shift_m / p.spacing_m : 0.0;
      TurbineRecord t;
      t.code = std::string(1, static_cast<char>('A' + r)) + std::to_string(101 + c);
      t.lat = p.origin_lat + lat_step * r;
      t.lon = p.origin_lon + lon_step * (c + shift);
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::vector<WindSampleRecord> synthetic_wind(const SyntheticWindParams& p) {
  if (p.count < 1 || p.weibull_k <= 0 || p.weibull_lambda <= 0 || p.min_mean <= 0 ||
      p.fraction_below_two < 0 || p.fraction_below_two > 1 || p.low_ratio_min < 1 ||
      p.low_ratio_max >= 2 || p.high_ratio_min <= 2 || p.high_ratio_max < p.high_ratio_min) {
    throw PlanError(ErrorKind::InvalidInput, "invalid synthetic wind parameters");
  }
  std::mt19937_64 rng(p.seed);
  const auto n = static_cast<std::size_t>(p.count);
  const auto n_low = static_cast<std::size_t>(std::llround(p.fraction_below_two * static_cast<double>(n)));

  std::vector<std::uint8_t> low(n, 0);
  for (std::size_t i = 0; i < n_low; ++i) low[i] = 1;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(low[i], low[below(rng, i + 1)]);

  std::vector<WindSampleRecord> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = uniform01(rng);
    double mean = p.weibull_lambda * std::pow(-std::log1p(-u), 1.0 / p.weibull_k);
    mean = std::max(p.min_mean, round_to(mean, 0.001));
    const double ratio = low[i] ? uniform(rng, p.low_ratio_min, p.low_ratio_max)
                                : uniform(rng, p.high_ratio_min, p.high_ratio_max);
    const double dir = round_to(uniform(rng, 0.0, 360.0), 0.1);
    double gust_dir = round_to(dir + uniform(rng, -15.0, 15.0), 0.1);
    gust_dir = std::fmod(gust_dir + 360.0, 360.0);

    WindSampleRecord r;
    r.timestamp = hourly_timestamp(static_cast<int>(i));
    r.mean_speed = mean;
    r.mean_dir_met = dir >= 360.0 ? 0.0 : dir;
    r.gust_speed = round_to(mean * ratio, 0.001);
    r.gust_dir_met = gust_dir >= 360.0 ? 0.0 : gust_dir;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace uavplan::io
