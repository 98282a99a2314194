#pragma once

#include <cstdint>
#include <vector>

#include "uavplan/io/csv.hpp"

namespace uavplan::io {

struct GridLayoutParams {
  int rows = 6;
  int cols = 8;
  int count = 47;           // first `count` cells in row-major order
  double spacing_m = 750.0;
  double origin_lat = 54.04;
  double origin_lon = -3.50;
  double row_shift_m = 120.0; // alternate rows are offset east
};

/// Row letters A.., column numbers 101.. (A101, A102, ..., B101, ...).
std::vector<TurbineRecord> grid_layout(const GridLayoutParams& params = {});

struct SyntheticWindParams {
  int count = 5000;
  std::uint64_t seed = 20190101;
  double weibull_k = 2.0;
  double weibull_lambda = 6.0;
  double min_mean = 0.5;
  double fraction_below_two = 0.9314; // share of gust/mean ratios below 2
  double low_ratio_min = 1.15;
  double low_ratio_max = 1.98;
  double high_ratio_min = 2.02;
  double high_ratio_max = 3.20;
};

/// Hourly records starting 2019-01-01T00:00:00Z. Exactly
/// round(count * fraction_below_two) records have a gust ratio below 2.
/// Same parameters give the same records on every platform.
std::vector<WindSampleRecord> synthetic_wind(const SyntheticWindParams& params = {});

}  // namespace uavplan::io
