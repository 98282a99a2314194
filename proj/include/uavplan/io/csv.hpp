#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "uavplan/flying_range.hpp"
#include "uavplan/placement.hpp"

namespace uavplan::io {

struct WindSampleRecord {
  std::string timestamp;  // ISO-8601 UTC
  double mean_speed = 0.0;
  double mean_dir_met = 0.0;  // degrees [0, 360)
  std::optional<double> gust_speed;
  std::optional<double> gust_dir_met;
};

struct TurbineRecord {
  std::string code;
  double lon = 0.0;
  double lat = 0.0;
};

template <typename Record>
struct ParseResult {
  std::vector<Record> records;
  std::vector<std::string> warnings;  // rejected rows, "line N: reason"
  std::vector<std::string> notes;     // accepted rows worth flagging
};

/// Columns: timestamp, mean_speed_ms, mean_dir_deg, and optionally
/// gust_speed_ms, gust_dir_deg. Malformed rows become warnings.
/// Throws EmptyFile (no header or no rows) and AllRowsInvalid.
ParseResult<WindSampleRecord> parse_wind_csv(std::istream& in);

/// Columns: code, lon_deg, lat_deg. Throws EmptyFile, AllRowsInvalid and
/// DuplicateCode.
ParseResult<TurbineRecord> parse_layout_csv(std::istream& in);

/// Converts degrees to radians once at the boundary.
std::vector<WindSample> to_samples(const std::vector<WindSampleRecord>& records);

void write_wind_csv(std::ostream& out, const std::vector<WindSampleRecord>& records);
void write_layout_csv(std::ostream& out, const std::vector<TurbineRecord>& records);

inline constexpr double kEarthRadiusM = 6378137.0;
inline constexpr double kMaxMercatorLatDeg = 85.05;

/// Spherical Mercator scaled by cos(ref_lat) so distances near ref_lat are
/// metric. Throws LatitudeOutOfRange.
std::vector<Turbine> mercator_project(const std::vector<TurbineRecord>& records, double ref_lat_deg);

double centroid_latitude(const std::vector<TurbineRecord>& records);

}  // namespace uavplan::io
