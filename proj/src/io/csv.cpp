#include "uavplan/io/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "uavplan/errors.hpp"
#include "uavplan/geometry.hpp"

namespace uavplan::io {
namespace {

std::string trim(std::string s) {
  const auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
  s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
  s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
  return s;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::optional<double> parse_number(const std::string& s) {
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

struct Table {
  std::map<std::string, std::size_t> columns;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;  // (line, cells)
};

Table read_table(std::istream& in, const char* what) {
  Table t;
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    auto cells = split(line);
    if (!header) {
      for (std::size_t c = 0; c < cells.size(); ++c) t.columns[cells[c]] = c;
      header = true;
      continue;
    }
    t.rows.emplace_back(lineno, std::move(cells));
  }
  if (!header || t.rows.empty()) {
    throw PlanError(ErrorKind::EmptyFile, std::string(what) + " file has no data rows");
  }
  return t;
}

std::size_t require_column(const Table& t, const std::string& name, const char* what) {
  auto it = t.columns.find(name);
  if (it == t.columns.end()) {
    throw PlanError(ErrorKind::InvalidInput,
                    std::string(what) + " file is missing column '" + name + "'");
  }
  return it->second;
}

std::optional<std::size_t> optional_column(const Table& t, const std::string& name) {
  auto it = t.columns.find(name);
  if (it == t.columns.end()) return std::nullopt;
  return it->second;
}

std::string cell(const std::vector<std::string>& row, std::size_t c) {
  return c < row.size() ? row[c] : std::string();
}

std::string at_line(std::size_t line, const std::string& msg) {
  return "line " + std::to_string(line) + ": " + msg;
}

bool valid_direction(double deg) { return deg >= 0.0 && deg < 360.0; }

}  // namespace

ParseResult<WindSampleRecord> parse_wind_csv(std::istream& in) {
  const Table t = read_table(in, "wind");
  const auto c_ts = require_column(t, "timestamp", "wind");
  const auto c_ms = require_column(t, "mean_speed_ms", "wind");
  const auto c_md = require_column(t, "mean_dir_deg", "wind");
  const auto c_gs = optional_column(t, "gust_speed_ms");
  const auto c_gd = optional_column(t, "gust_dir_deg");

  ParseResult<WindSampleRecord> out;
  for (const auto& [line, row] : t.rows) {
    WindSampleRecord r;
    r.timestamp = cell(row, c_ts);
    if (r.timestamp.empty()) {
      out.warnings.push_back(at_line(line, "missing timestamp"));
      continue;
    }
    const auto ms = parse_number(cell(row, c_ms));
    const auto md = parse_number(cell(row, c_md));
    if (!ms || *ms < 0.0) {
      out.warnings.push_back(at_line(line, "invalid mean speed '" + cell(row, c_ms) + "'"));
      continue;
    }
    if (!md || !valid_direction(*md)) {
      out.warnings.push_back(at_line(line, "mean direction '" + cell(row, c_md) + "' outside [0,360)"));
      continue;
    }
    r.mean_speed = *ms;
    r.mean_dir_met = *md;
    bool bad = false;
    if (c_gs && !cell(row, *c_gs).empty()) {
      const auto gs = parse_number(cell(row, *c_gs));
      if (!gs || *gs < 0.0) {
        out.warnings.push_back(at_line(line, "invalid gust speed '" + cell(row, *c_gs) + "'"));
        bad = true;
      } else {
        r.gust_speed = *gs;
      }
    }
    if (!bad && c_gd && !cell(row, *c_gd).empty()) {
      const auto gd = parse_number(cell(row, *c_gd));
      if (!gd || !valid_direction(*gd)) {
        out.warnings.push_back(at_line(line, "gust direction '" + cell(row, *c_gd) + "' outside [0,360)"));
        bad = true;
      } else {
        r.gust_dir_met = *gd;
      }
    }
    if (bad) continue;
    if (r.gust_speed && *r.gust_speed < r.mean_speed) {
      out.notes.push_back(at_line(line, "gust below mean speed"));
    }
    out.records.push_back(std::move(r));
  }
  if (out.records.empty()) {
    throw PlanError(ErrorKind::AllRowsInvalid,
                    "no valid wind rows (" + std::to_string(out.warnings.size()) + " rejected)");
  }
  return out;
}

ParseResult<TurbineRecord> parse_layout_csv(std::istream& in) {
  const Table t = read_table(in, "layout");
  const auto c_code = require_column(t, "code", "layout");
  const auto c_lon = require_column(t, "lon_deg", "layout");
  const auto c_lat = require_column(t, "lat_deg", "layout");

  ParseResult<TurbineRecord> out;
  std::set<std::string> seen;
  for (const auto& [line, row] : t.rows) {
    TurbineRecord r;
    r.code = cell(row, c_code);
    const auto lon = parse_number(cell(row, c_lon));
    const auto lat = parse_number(cell(row, c_lat));
    if (r.code.empty()) {
      out.warnings.push_back(at_line(line, "missing turbine code"));
      continue;
    }
    if (!lon || *lon < -180.0 || *lon > 180.0 || !lat || *lat < -90.0 || *lat > 90.0) {
      out.warnings.push_back(at_line(line, "invalid coordinates for " + r.code));
      continue;
    }
    if (!seen.insert(r.code).second) {
      throw PlanError(ErrorKind::DuplicateCode, "duplicate turbine code " + r.code);
    }
    r.lon = *lon;
    r.lat = *lat;
    out.records.push_back(std::move(r));
  }
  if (out.records.empty()) {
    throw PlanError(ErrorKind::AllRowsInvalid, "no valid layout rows");
  }
  return out;
}

std::vector<WindSample> to_samples(const std::vector<WindSampleRecord>& records) {
  std::vector<WindSample> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    WindSample s;
    s.mean_speed = r.mean_speed;
    s.mean_dir_met = deg_to_rad(r.mean_dir_met);
    s.gust_speed = r.gust_speed;
    if (r.gust_dir_met) s.gust_dir_met = deg_to_rad(*r.gust_dir_met);
    out.push_back(s);
  }
  return out;
}

void write_wind_csv(std::ostream& out, const std::vector<WindSampleRecord>& records) {
  out << "timestamp,mean_speed_ms,mean_dir_deg,gust_speed_ms,gust_dir_deg\n";
  char buf[64];
  for (const auto& r : records) {
    out << r.timestamp;
    std::snprintf(buf, sizeof(buf), ",%.3f,%.1f", r.mean_speed, r.mean_dir_met);
    out << buf << ',';
    if (r.gust_speed) {
      std::snprintf(buf, sizeof(buf), "%.3f", *r.gust_speed);
      out << buf;
    }
    out << ',';
    if (r.gust_dir_met) {
      std::snprintf(buf, sizeof(buf), "%.1f", *r.gust_dir_met);
      out << buf;
    }
    out << '\n';
  }
}

void write_layout_csv(std::ostream& out, const std::vector<TurbineRecord>& records) {
  out << "code,lon_deg,lat_deg\n";
  char buf[96];
  for (const auto& r : records) {
    std::snprintf(buf, sizeof(buf), "%s,%.7f,%.7f\n", r.code.c_str(), r.lon, r.lat);
    out << buf;
  }
}

std::vector<Turbine> mercator_project(const std::vector<TurbineRecord>& records, double ref_lat_deg) {
  if (!(std::abs(ref_lat_deg) < kMaxMercatorLatDeg)) {
    throw PlanError(ErrorKind::LatitudeOutOfRange,
                    "reference latitude " + std::to_string(ref_lat_deg) + " outside +-85.05");
  }
  const double scale = kEarthRadiusM * std::cos(deg_to_rad(ref_lat_deg));
  std::vector<Turbine> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    if (!(std::abs(r.lat) < kMaxMercatorLatDeg)) {
      throw PlanError(ErrorKind::LatitudeOutOfRange,
                      "turbine " + r.code + " latitude " + std::to_string(r.lat) + " outside +-85.05");
    }
    const double lam = deg_to_rad(r.lon);
    const double phi = deg_to_rad(r.lat);
    out.push_back({r.code, {scale * lam, scale * std::log(std::tan(kPi / 4.0 + phi / 2.0))}});
  }
  return out;
}

double centroid_latitude(const std::vector<TurbineRecord>& records) {
  if (records.empty()) return 0.0;
  double s = 0.0;
  for (const auto& r : records) s += r.lat;
  return s / static_cast<double>(records.size());
}

}  // namespace uavplan::io
