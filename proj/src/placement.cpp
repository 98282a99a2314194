#include "uavplan/placement.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "uavplan/errors.hpp"

namespace uavplan {

std::size_t BitMatrix::row_sum(std::size_t r) const {
  std::size_t s = 0;
  for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c);
  return s;
}

std::size_t BitMatrix::col_sum(std::size_t c) const {
  std::size_t s = 0;
  for (std::size_t r = 0; r < rows_; ++r) s += (*this)(r, c);
  return s;
}

void BitMatrix::clear_row(std::size_t r) {
  std::fill_n(bits_.begin() + static_cast<std::ptrdiff_t>(r * cols_), cols_, 0);
}

std::size_t PlacementState::active_count() const {
  return static_cast<std::size_t>(std::count(active.begin(), active.end(), 1));
}

std::vector<int> PlacementState::active_uavs() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < active.size(); ++i)
    if (active[i]) out.push_back(static_cast<int>(i));
  return out;
}

std::vector<int> PlacementState::turbines_of(std::size_t uav) const {
  std::vector<int> out;
  for (std::size_t k = 0; k < assign.cols(); ++k)
    if (assign(uav, k)) out.push_back(static_cast<int>(k));
  return out;
}

namespace {

// Number of active UAVs holding each turbine.
std::vector<int> coverage_counts(const PlacementState& s) {
  std::vector<int> cnt(s.assign.cols(), 0);
  for (std::size_t i = 0; i < s.uav_count(); ++i) {
    if (!s.active[i]) continue;
    for (std::size_t k = 0; k < s.assign.cols(); ++k) cnt[k] += s.assign(i, k);
  }
  return cnt;
}

std::string uav_label(const PlacementProblem& pb, std::size_t i) {
  std::ostringstream os;
  os << "UAV " << i;
  if (i < pb.turbines.size()) os << " (" << pb.turbines[i].code << ")";
  return os.str();
}

}  // namespace

std::size_t PlacementState::total_overlap() const {
  const auto cnt = coverage_counts(*this);
  std::size_t total = 0;
  for (int c : cnt)
    if (c > 1) total += static_cast<std::size_t>(c) * static_cast<std::size_t>(c - 1);
  return total;
}

void validate_problem(const PlacementProblem& pb) {
  if (pb.p < 1) throw PlanError(ErrorKind::InvalidInput, "p must be >= 1");
  if (!(pb.d > 0.0)) throw PlanError(ErrorKind::InvalidInput, "d must be positive");
  if (pb.ranges.size() != pb.turbines.size()) {
    throw PlanError(ErrorKind::InvalidInput, "one flying range per turbine is required");
  }
  std::set<std::string> codes;
  for (const auto& t : pb.turbines) {
    if (!codes.insert(t.code).second) {
      throw PlanError(ErrorKind::DuplicateCode, "duplicate turbine code " + t.code);
    }
  }
}

StepSnapshot snapshot(const PlacementState& s, std::string action, int uav) {
  StepSnapshot snap;
  snap.step = s.step;
  snap.action = std::move(action);
  snap.uav = uav;
  snap.active = s.active_uavs();
  for (int i : snap.active) snap.assignments.push_back(s.turbines_of(static_cast<std::size_t>(i)));
  for (std::size_t a = 0; a < snap.active.size(); ++a)
    for (std::size_t b = a + 1; b < snap.active.size(); ++b)
      if (s.links(static_cast<std::size_t>(snap.active[a]), static_cast<std::size_t>(snap.active[b])))
        snap.links.emplace_back(snap.active[a], snap.active[b]);
  return snap;
}

PlacementState init_placement(const PlacementProblem& pb) {
  validate_problem(pb);
  const std::size_t n = pb.turbines.size();
  PlacementState s;
  s.active.assign(n, 1);
  s.assign = BitMatrix(n, n);
  s.links = BitMatrix(n, n);
  s.positions.reserve(n);
  for (const auto& t : pb.turbines) s.positions.push_back(t.pos);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && distance(s.positions[i], s.positions[j]) <= pb.d) s.links(i, j) = 1;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (pb.ranges[i].contains(pb.turbines[k].pos)) s.assign(i, k) = 1;
  return s;
}

PlacementState enforce_capacity(PlacementState s, const PlacementProblem& pb) {
  const auto p = static_cast<std::size_t>(pb.p);
  const std::size_t n = s.uav_count();
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.active[i] || s.assign.row_sum(i) <= p) continue;

    std::vector<int> order = s.turbines_of(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return distance(s.positions[i], pb.turbines[static_cast<std::size_t>(a)].pos) >
             distance(s.positions[i], pb.turbines[static_cast<std::size_t>(b)].pos);
    });

    std::size_t held = order.size();
    for (int k : order) {
      if (held <= p) break;
      const auto ku = static_cast<std::size_t>(k);
      if (ku == i) continue;  // home turbine stays
      if (s.assign.col_sum(ku) - s.assign(i, ku) >= 1) {
        s.assign(i, ku) = 0;
        --held;
      }
    }
    if (held > p) {
      throw PlanError(ErrorKind::CapacityInfeasible,
                      uav_label(pb, i) + " keeps " + std::to_string(held) +
                          " turbines that no other UAV covers (p = " + std::to_string(p) + ")");
    }
  }
  return s;
}

MinimizeResult minimize_uavs(PlacementState s, const PlacementProblem& pb) {
  const std::size_t n = s.uav_count();
  const std::size_t t = s.assign.cols();
  MinimizeResult out;
  out.trace.push_back(snapshot(s, "start", -1));

  const std::size_t max_iterations = n * t + 1;
  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    const auto cnt = coverage_counts(s);
    if (std::none_of(cnt.begin(), cnt.end(), [](int c) { return c > 1; })) break;

    // Active UAV with the largest shared-turbine score, lowest index on ties.
    std::size_t best = n;
    long best_score = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!s.active[i]) continue;
      long score = 0;
      for (std::size_t k = 0; k < t; ++k)
        if (s.assign(i, k)) score += cnt[k] - 1;
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    const std::size_t i = best;

    bool fully_shared = true;
    for (std::size_t k = 0; k < t; ++k)
      if (s.assign(i, k) && cnt[k] < 2) fully_shared = false;

    bool keeps_links = true;
    if (fully_shared) {
      std::size_t others = 0;
      for (std::size_t j = 0; j < n; ++j) others += (j != i && s.active[j]);
      if (others >= 2) {
        for (std::size_t j = 0; j < n && keeps_links; ++j) {
          if (j == i || !s.active[j]) continue;
          bool linked = false;
          for (std::size_t l = 0; l < n && !linked; ++l)
            linked = l != i && l != j && s.active[l] && s.links(j, l);
          keeps_links = linked;
        }
      }
    }

    if (fully_shared && keeps_links) {
      s.active[i] = 0;
      s.assign.clear_row(i);
      for (std::size_t j = 0; j < n; ++j) s.links(i, j) = s.links(j, i) = 0;
      ++s.step;
      out.trace.push_back(snapshot(s, "remove", static_cast<int>(i)));
      continue;
    }

    for (std::size_t k = 0; k < t; ++k) {
      if (!s.assign(i, k) || cnt[k] < 2) continue;
      const double di = distance(s.positions[i], pb.turbines[k].pos);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || !s.active[j] || !s.assign(j, k)) continue;
        const double dj = distance(s.positions[j], pb.turbines[k].pos);
        if (dj < di || (dj == di && j < i)) {
          s.assign(i, k) = 0;
          break;
        }
        s.assign(j, k) = 0;
      }
    }
    ++s.step;
    out.trace.push_back(snapshot(s, "resolve", static_cast<int>(i)));
  }

  out.state = std::move(s);
  return out;
}

bool ConstraintReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ConstraintCheck& c) { return c.passed || c.informational; });
}

const ConstraintCheck* ConstraintReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

std::string ConstraintReport::summary() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : checks) {
    if (c.passed || c.informational) continue;
    if (!first) os << "; ";
    first = false;
    os << c.id << ": ";
    for (std::size_t v = 0; v < c.violations.size() && v < 3; ++v) {
      if (v) os << ", ";
      os << c.violations[v];
    }
    if (c.violations.size() > 3) os << " (+" << c.violations.size() - 3 << " more)";
  }
  return first ? std::string("all constraints satisfied") : os.str();
}

ConstraintReport validate(const PlacementState& s, const PlacementProblem& pb) {
  ConstraintReport report;
  const std::size_t n = s.uav_count();
  const std::size_t t = s.assign.cols();

  auto add = [&](std::string id, std::string description, bool informational = false) -> ConstraintCheck& {
    report.checks.push_back({std::move(id), std::move(description), true, informational, {}});
    return report.checks.back();
  };
  auto fail = [](ConstraintCheck& c, std::string why) {
    c.passed = false;
    c.violations.push_back(std::move(why));
  };

  const bool shapes_ok = s.assign.rows() == n && s.links.rows() == n && s.links.cols() == n &&
                         s.positions.size() == n && t == pb.turbines.size() &&
                         pb.ranges.size() >= n;
  {
    auto& c = add("shape", "state dimensions match the problem");
    if (!shapes_ok) fail(c, "matrix dimensions disagree with candidate/turbine counts");
  }
  if (!shapes_ok) return report;

  {
    auto& c = add("binary", "decision variables are 0/1");
    for (std::size_t i = 0; i < n; ++i) {
      if (s.active[i] > 1) fail(c, "active[" + std::to_string(i) + "]");
      for (std::size_t k = 0; k < t; ++k)
        if (s.assign(i, k) > 1) fail(c, "assign[" + std::to_string(i) + "][" + std::to_string(k) + "]");
      for (std::size_t j = 0; j < n; ++j)
        if (s.links(i, j) > 1) fail(c, "links[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  {
    auto& c = add("single_assignment", "each turbine is assigned to at most one UAV");
    for (std::size_t k = 0; k < t; ++k)
      if (s.assign.col_sum(k) > 1)
        fail(c, "turbine " + pb.turbines[k].code + " held by " + std::to_string(s.assign.col_sum(k)));
  }
  {
    auto& c = add("capacity", "each UAV inspects at most p turbines");
    for (std::size_t i = 0; i < n; ++i)
      if (s.assign.row_sum(i) > static_cast<std::size_t>(pb.p))
        fail(c, uav_label(pb, i) + " holds " + std::to_string(s.assign.row_sum(i)));
  }
  {
    auto& c = add("range", "assigned turbines lie in the UAV's flying range");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < t; ++k)
        if (s.assign(i, k) && !pb.ranges[i].contains(pb.turbines[k].pos))
          fail(c, "turbine " + pb.turbines[k].code + " outside range of " + uav_label(pb, i));
  }
  {
    auto& c = add("position", "each active UAV sits on one of its assigned turbines");
    for (std::size_t i = 0; i < n; ++i) {
      if (!s.active[i]) continue;
      bool on_turbine = false;
      for (std::size_t k = 0; k < t && !on_turbine; ++k)
        on_turbine = s.assign(i, k) && pb.turbines[k].pos == s.positions[i];
      if (!on_turbine) fail(c, uav_label(pb, i));
    }
  }
  {
    auto& c = add("active_only", "turbines are assigned only to active UAVs");
    for (std::size_t i = 0; i < n; ++i)
      if (!s.active[i] && s.assign.row_sum(i) > 0) fail(c, uav_label(pb, i) + " is inactive");
  }
  {
    auto& c = add("coverage", "every turbine is assigned");
    for (std::size_t k = 0; k < t; ++k)
      if (s.assign.col_sum(k) == 0) fail(c, "turbine " + pb.turbines[k].code + " unassigned");
  }
  {
    auto& c = add("link_matrix", "links are symmetric, irreflexive and between active UAVs");
    for (std::size_t i = 0; i < n; ++i) {
      if (s.links(i, i)) fail(c, uav_label(pb, i) + " linked to itself");
      for (std::size_t j = i + 1; j < n; ++j) {
        if (s.links(i, j) != s.links(j, i))
          fail(c, "asymmetric link " + std::to_string(i) + "-" + std::to_string(j));
        if (s.links(i, j) && (!s.active[i] || !s.active[j]))
          fail(c, "link " + std::to_string(i) + "-" + std::to_string(j) + " touches an inactive UAV");
      }
    }
  }
  {
    auto& c = add("link_count", "every active UAV has a link to another active UAV");
    const auto act = s.active_uavs();
    if (act.size() >= 2) {
      for (int i : act) {
        bool linked = false;
        for (int j : act)
          linked = linked || (i != j && s.links(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
        if (!linked) fail(c, uav_label(pb, static_cast<std::size_t>(i)) + " has no link");
      }
    }
  }
  {
    auto& c = add("link_distance", "linked UAVs are within the communication distance");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (s.links(i, j) && distance(s.positions[i], s.positions[j]) > pb.d)
          fail(c, std::to_string(i) + "-" + std::to_string(j));
  }
  {
    auto& c = add("all_pairs_distance", "all active UAV pairs are within the communication distance",
                  true);
    const auto act = s.active_uavs();
    for (std::size_t a = 0; a < act.size(); ++a)
      for (std::size_t b = a + 1; b < act.size(); ++b) {
        const auto i = static_cast<std::size_t>(act[a]);
        const auto j = static_cast<std::size_t>(act[b]);
        if (distance(s.positions[i], s.positions[j]) > pb.d)
          fail(c, std::to_string(i) + "-" + std::to_string(j));
      }
  }
  return report;
}

PlacementResult plan_placement(const PlacementProblem& pb) {
  PlacementState s = init_placement(pb);
  s = enforce_capacity(std::move(s), pb);
  MinimizeResult m = minimize_uavs(std::move(s), pb);
  PlacementResult out{std::move(m.state), std::move(m.trace), {}};
  out.report = validate(out.state, pb);
  if (!out.report.ok()) {
    throw PlanError(ErrorKind::ValidationFailed, out.report.summary());
  }
  return out;
}

}  // namespace uavplan
