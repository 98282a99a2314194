#pragma once

#include <optional>
#include <span>
#include <vector>

#include "uavplan/geometry.hpp"
#include "uavplan/wind_model.hpp"

namespace uavplan {

/// One historical hourly wind record. Directions are meteorological radians.
struct WindSample {
  double mean_speed = 0.0;
  double mean_dir_met = 0.0;
  std::optional<double> gust_speed;
  std::optional<double> gust_dir_met;
};

struct Disc {
  Point2D center;
  double radius = 0.0;

  // Boundary points count as inside; tolerance 1e-9 * max(1, radius).
  bool contains(Point2D p) const;
};

struct RangeSegment {
  int index = 0;  // 1-based direction segment
  WindVector wind;
  Disc disc;
};

/// Points reachable from an anchor under every discretised worst-case wind:
/// the intersection of wind-displaced discs. Immutable once built.
class FlyingRange {
 public:
  FlyingRange(Point2D anchor, double rho, std::vector<RangeSegment> segments);

  Point2D anchor() const { return anchor_; }
  double rho() const { return rho_; }
  const std::vector<RangeSegment>& segments() const { return segments_; }

  bool contains(Point2D p) const;
  /// Largest centre displacement of any disc from the anchor.
  double max_drift() const;

  /// Same envelope translated to a new anchor.
  FlyingRange translated(Point2D new_anchor) const;

 private:
  Point2D anchor_;
  double rho_;
  std::vector<RangeSegment> segments_;
};

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

/// Gust-to-mean ratio histogram and cumulative queries over a wind dataset.
class WindStats {
 public:
  WindStats(std::vector<double> ratios, std::vector<double> means, std::size_t bins);

  const std::vector<HistogramBin>& ratio_histogram() const { return histogram_; }
  std::size_t sample_count() const { return means_.size(); }
  std::size_t ratio_count() const { return ratios_.size(); }

  /// Fraction of gust/mean ratios strictly below x. Throws NoGustData when
  /// no sample carries a gust.
  double fraction_ratio_below(double x) const;
  /// Fraction of all samples with mean speed strictly below v.
  double fraction_mean_below(double v) const;

 private:
  std::vector<double> ratios_;  // sorted
  std::vector<double> means_;   // sorted
  std::vector<HistogramBin> histogram_;
};

/// Ratios are taken over samples with a gust and a positive mean speed.
/// Throws EmptyDataset for an empty input.
WindStats wind_stats(std::span<const WindSample> samples, std::size_t bins = 20);

enum class EpsilonMode {
  Override,  // user value; falls back to Floor when none is given
  Floor,
  Nearest,
};

struct EpsilonOptions {
  EpsilonMode mode = EpsilonMode::Override;
  std::optional<double> override_value;
  double granularity = 1.0;
};

struct EpsilonChoice {
  double value = 0.0;
  // Share of historical ratios below gust_factor; absent without gust data.
  std::optional<double> gust_coverage;
};

/// Launch threshold on the hourly mean so that mean * gust_factor stays
/// within u_wind, rounded to the configured granularity.
EpsilonChoice choose_epsilon_v(const WindStats& stats, double u_wind, double gust_factor,
                               const EpsilonOptions& options = {});
/// Threshold rule without statistics.
double epsilon_from_factor(double u_wind, double gust_factor, const EpsilonOptions& options);

/// Representative wind of direction segment b in 1..mu: speed capped at
/// epsilon_v, direction at the segment midpoint. Empty segments take
/// epsilon_v.
WindVector segment_envelope(std::span<const WindSample> samples, int mu, double epsilon_v,
                            int b);

/// All mu segment winds, in segment order.
std::vector<WindVector> wind_envelope(std::span<const WindSample> samples, int mu,
                                      double epsilon_v);

struct RangeParams {
  int mu = 36;
  double epsilon_v = 8.0;
  double t_max = 1200.0;
  double u_max = 16.0;
};

FlyingRange build_range(Point2D anchor, std::span<const WindVector> envelope, double t_max,
                        double u_max);
FlyingRange build_range(Point2D anchor, std::span<const WindSample> samples,
                        const RangeParams& params);

}  // namespace uavplan
