#include "uavplan/flying_range.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uavplan/endurance.hpp"
#include "uavplan/errors.hpp"

namespace uavplan {

bool Disc::contains(Point2D p) const {
  const double tol = 1e-9 * std::max(1.0, radius);
  return distance(center, p) <= radius + tol;
}

FlyingRange::FlyingRange(Point2D anchor, double rho, std::vector<RangeSegment> segments)
    : anchor_(anchor), rho_(rho), segments_(std::move(segments)) {}

bool FlyingRange::contains(Point2D p) const {
  return std::all_of(segments_.begin(), segments_.end(),
                     [&](const RangeSegment& s) { return s.disc.contains(p); });
}

double FlyingRange::max_drift() const {
  double m = 0.0;
  for (const auto& s : segments_) m = std::max(m, distance(anchor_, s.disc.center));
  return m;
}

FlyingRange FlyingRange::translated(Point2D new_anchor) const {
  const Vec2 shift = new_anchor - anchor_;
  std::vector<RangeSegment> moved = segments_;
  for (auto& s : moved) s.disc.center = s.disc.center + shift;
  return FlyingRange(new_anchor, rho_, std::move(moved));
}

WindStats::WindStats(std::vector<double> ratios, std::vector<double> means, std::size_t bins)
    : ratios_(std::move(ratios)), means_(std::move(means)) {
  std::sort(ratios_.begin(), ratios_.end());
  std::sort(means_.begin(), means_.end());
  if (ratios_.empty() || bins == 0) return;
  const double upper = std::max(1.0, std::ceil(ratios_.back()));
  const double width = upper / static_cast<double>(bins);
  histogram_.resize(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    histogram_[b].lo = width * static_cast<double>(b);
    histogram_[b].hi = width * static_cast<double>(b + 1);
  }
  for (double r : ratios_) {
    auto b = static_cast<std::size_t>(r / width);
    histogram_[std::min(b, bins - 1)].count++;
  }
}

double WindStats::fraction_ratio_below(double x) const {
  if (ratios_.empty()) {
    throw PlanError(ErrorKind::NoGustData, "dataset has no samples with gust data");
  }
  const auto n = std::lower_bound(ratios_.begin(), ratios_.end(), x) - ratios_.begin();
  return static_cast<double>(n) / static_cast<double>(ratios_.size());
}

double WindStats::fraction_mean_below(double v) const {
  if (means_.empty()) return 0.0;
  const auto n = std::lower_bound(means_.begin(), means_.end(), v) - means_.begin();
  return static_cast<double>(n) / static_cast<double>(means_.size());
}

WindStats wind_stats(std::span<const WindSample> samples, std::size_t bins) {
  if (samples.empty()) {
    throw PlanError(ErrorKind::EmptyDataset, "wind dataset is empty");
  }
  std::vector<double> ratios;
  std::vector<double> means;
  means.reserve(samples.size());
  for (const auto& s : samples) {
    means.push_back(s.mean_speed);
    if (s.gust_speed && s.mean_speed > 0.0) ratios.push_back(*s.gust_speed / s.mean_speed);
  }
  return WindStats(std::move(ratios), std::move(means), bins);
}

double epsilon_from_factor(double u_wind, double gust_factor, const EpsilonOptions& options) {
  if (!(gust_factor >= 1.0)) {
    throw PlanError(ErrorKind::InvalidInput, "gust factor must be >= 1");
  }
  if (options.mode == EpsilonMode::Override && options.override_value) {
    return *options.override_value;
  }
  if (!(options.granularity > 0.0)) {
    throw PlanError(ErrorKind::InvalidInput, "epsilon granularity must be positive");
  }
  const double raw = u_wind / gust_factor / options.granularity;
  const double steps = options.mode == EpsilonMode::Nearest ? std::round(raw)
                                                            : std::floor(raw + 1e-12);
  return steps * options.granularity;
}

EpsilonChoice choose_epsilon_v(const WindStats& stats, double u_wind, double gust_factor,
                               const EpsilonOptions& options) {
  EpsilonChoice out;
  out.value = epsilon_from_factor(u_wind, gust_factor, options);
  if (stats.ratio_count() > 0) out.gust_coverage = stats.fraction_ratio_below(gust_factor);
  return out;
}

WindVector segment_envelope(std::span<const WindSample> samples, int mu, double epsilon_v,
                            int b) {
  if (mu < 1 || b < 1 || b > mu) {
    throw PlanError(ErrorKind::InvalidInput,
                    "segment index " + std::to_string(b) + " outside 1.." + std::to_string(mu));
  }
  const double lo = kTwoPi * (b - 1) / mu;
  const double hi = kTwoPi * b / mu;
  bool any = false;
  double max_speed = 0.0;
  for (const auto& s : samples) {
    const double pol = met_to_pol(s.mean_dir_met);
    if (pol >= lo && pol <= hi) {
      any = true;
      max_speed = std::max(max_speed, s.mean_speed);
    }
  }
  const double speed = any ? std::min(epsilon_v, max_speed) : epsilon_v;
  const double dir = (2.0 * b * kPi - kPi) / mu;
  return {speed * std::cos(dir), speed * std::sin(dir)};
}

std::vector<WindVector> wind_envelope(std::span<const WindSample> samples, int mu,
                                      double epsilon_v) {
  std::vector<WindVector> out;
  out.reserve(static_cast<std::size_t>(std::max(mu, 0)));
  for (int b = 1; b <= mu; ++b) out.push_back(segment_envelope(samples, mu, epsilon_v, b));
  return out;
}

FlyingRange build_range(Point2D anchor, std::span<const WindVector> envelope, double t_max,
                        double u_max) {
  if (!(t_max > 0.0) || !(u_max > 0.0)) {
    throw PlanError(ErrorKind::InvalidInput, "t_max and u_max must be positive");
  }
  const double rho = flying_distance(u_max, t_max);
  std::vector<RangeSegment> segments;
  segments.reserve(envelope.size());
  int b = 1;
  for (const auto& w : envelope) {
    const Point2D center{anchor.x + w.wx * t_max, anchor.y + w.wy * t_max};
    segments.push_back({b++, w, Disc{center, rho}});
  }
  return FlyingRange(anchor, rho, std::move(segments));
}

FlyingRange build_range(Point2D anchor, std::span<const WindSample> samples,
                        const RangeParams& params) {
  if (params.mu < 1) throw PlanError(ErrorKind::InvalidInput, "mu must be >= 1");
  const auto env = wind_envelope(samples, params.mu, params.epsilon_v);
  return build_range(anchor, env, params.t_max, params.u_max);
}

}  // namespace uavplan
