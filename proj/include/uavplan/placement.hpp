#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "uavplan/flying_range.hpp"
#include "uavplan/geometry.hpp"

namespace uavplan {

struct Turbine {
  std::string code;
  Point2D pos;

  friend bool operator==(const Turbine&, const Turbine&) = default;
};

/// Candidate UAV i sits on turbine i and owns ranges[i].
struct PlacementProblem {
  std::vector<Turbine> turbines;
  std::vector<FlyingRange> ranges;
  int p = 5;         // max turbines per UAV
  double d = 5000;   // communication distance, meters
};

/// Throws InvalidInput for p < 1, d <= 0, duplicate codes or a range count
/// that differs from the turbine count.
void validate_problem(const PlacementProblem& problem);

/// Dense 0/1 matrix.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return bits_[r * cols_ + c]; }
  std::uint8_t operator()(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c]; }

  std::size_t row_sum(std::size_t r) const;
  std::size_t col_sum(std::size_t c) const;
  void clear_row(std::size_t r);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

struct PlacementState {
  std::vector<std::uint8_t> active;  // per candidate UAV
  BitMatrix assign;                  // UAV x turbine
  BitMatrix links;                   // UAV x UAV, symmetric, zero diagonal
  std::vector<Point2D> positions;
  int step = 0;

  std::size_t uav_count() const { return active.size(); }
  std::size_t active_count() const;
  std::vector<int> active_uavs() const;
  std::vector<int> turbines_of(std::size_t uav) const;
  /// Sum over ordered active pairs of shared turbines.
  std::size_t total_overlap() const;

  friend bool operator==(const PlacementState&, const PlacementState&) = default;
};

struct StepSnapshot {
  int step = 0;
  std::string action;  // start | remove | resolve
  int uav = -1;        // UAV acted upon, -1 for start
  std::vector<int> active;
  std::vector<std::vector<int>> assignments;  // parallel to `active`
  std::vector<std::pair<int, int>> links;     // i < j, both active
};

StepSnapshot snapshot(const PlacementState& state, std::string action, int uav);

/// One candidate per turbine; links within d; assignment from range membership.
PlacementState init_placement(const PlacementProblem& problem);

/// Trims every UAV to at most p turbines, dropping the farthest turbines that
/// another UAV also covers. The UAV's own turbine is never dropped.
/// Throws CapacityInfeasible when a UAV cannot be trimmed.
PlacementState enforce_capacity(PlacementState state, const PlacementProblem& problem);

struct MinimizeResult {
  PlacementState state;
  std::vector<StepSnapshot> trace;
};

/// Greedy UAV-count reduction. Each iteration takes the active UAV sharing the
/// most turbines with others (ties: lowest index). If all its turbines are
/// covered elsewhere and every other active UAV keeps a link without it, it
/// is deactivated; otherwise each of its shared turbines goes to the closer
/// UAV. Stops when no turbine is assigned twice.
MinimizeResult minimize_uavs(PlacementState state, const PlacementProblem& problem);

struct ConstraintCheck {
  std::string id;
  std::string description;
  bool passed = true;
  bool informational = false;
  std::vector<std::string> violations;

  friend bool operator==(const ConstraintCheck&, const ConstraintCheck&) = default;
};

struct ConstraintReport {
  std::vector<ConstraintCheck> checks;

  bool ok() const;
  const ConstraintCheck* find(const std::string& id) const;
  std::string summary() const;
};

/// Checks the placement constraints. Never throws.
ConstraintReport validate(const PlacementState& state, const PlacementProblem& problem);

struct PlacementResult {
  PlacementState state;
  std::vector<StepSnapshot> trace;
  ConstraintReport report;
};

/// init -> capacity -> minimisation -> validation. Throws ValidationFailed
/// (message carries the report summary) when the result breaks a constraint.
PlacementResult plan_placement(const PlacementProblem& problem);

}  // namespace uavplan
