#include "uavplan/io/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

#include "uavplan/errors.hpp"

namespace uavplan::io {
namespace {

constexpr double kPanel = 400.0;
constexpr double kMargin = 20.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Maps world coordinates into a square panel, y up.
struct Frame {
  double min_x = 0, min_y = 0, scale = 1, ox = 0;

  static Frame fit(const std::vector<Point2D>& pts, double offset_x) {
    Frame f;
    double max_x = -std::numeric_limits<double>::infinity(), max_y = max_x;
    f.min_x = f.min_y = std::numeric_limits<double>::infinity();
    for (const auto& p : pts) {
      f.min_x = std::min(f.min_x, p.x);
      f.min_y = std::min(f.min_y, p.y);
      max_x = std::max(max_x, p.x);
      max_y = std::max(max_y, p.y);
    }
    const double span = std::max({max_x - f.min_x, max_y - f.min_y, 1.0});
    f.scale = (kPanel - 2 * kMargin) / span;
    f.ox = offset_x;
    return f;
  }
  double x(const Point2D& p) const { return ox + kMargin + (p.x - min_x) * scale; }
  double y(const Point2D& p) const { return kPanel - kMargin - (p.y - min_y) * scale; }
};

void header(std::ostringstream& os, double width, double height) {
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
     << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::vector<std::size_t> pick_panels(std::size_t n) {
  std::vector<std::size_t> idx{0, (n - 1) / 3, 2 * (n - 1) / 3, n - 1};
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

}  // namespace

std::string placement_steps_svg(const PlacementProblem& problem, const std::vector<StepSnapshot>& trace) {
  if (trace.empty()) throw PlanError(ErrorKind::InvalidInput, "empty placement trace, nothing to draw");
  if (problem.turbines.empty()) throw PlanError(ErrorKind::InvalidInput, "placement has no turbines");

  std::vector<Point2D> pts;
  for (const auto& t : problem.turbines) pts.push_back(t.pos);
  const auto panels = pick_panels(trace.size());

  std::ostringstream os;
  header(os, kPanel * static_cast<double>(panels.size()), kPanel + 20.0);
  for (std::size_t p = 0; p < panels.size(); ++p) {
    const StepSnapshot& s = trace[panels[p]];
    const Frame f = Frame::fit(pts, kPanel * static_cast<double>(p));
    const auto pos = [&](int k) { return problem.turbines.at(static_cast<std::size_t>(k)).pos; };

    os << "<g id=\"step-" << s.step << "\">\n";
    os << "<text x=\"" << num(f.ox + kMargin) << "\" y=\"" << num(kPanel + 12.0)
       << "\" font-size=\"12\" font-family=\"sans-serif\">step " << s.step << " (" << s.action << "), "
       << s.active.size() << " UAVs</text>\n";
    os << "<g class=\"links\" stroke=\"#999999\" stroke-dasharray=\"4 3\" stroke-width=\"0.8\">\n";
    for (const auto& [a, b] : s.links) {
      os << "<line x1=\"" << num(f.x(pos(a))) << "\" y1=\"" << num(f.y(pos(a))) << "\" x2=\"" << num(f.x(pos(b)))
         << "\" y2=\"" << num(f.y(pos(b))) << "\"/>\n";
    }
    os << "</g>\n<g class=\"assignments\" stroke-width=\"1.2\">\n";
    for (std::size_t a = 0; a < s.active.size(); ++a) {
      const int u = s.active[a];
      const char* colour = kPalette[static_cast<std::size_t>(u) % std::size(kPalette)];
      for (int k : s.assignments[a]) {
        if (k == u) continue;
        os << "<line stroke=\"" << colour << "\" x1=\"" << num(f.x(pos(u))) << "\" y1=\"" << num(f.y(pos(u)))
           << "\" x2=\"" << num(f.x(pos(k))) << "\" y2=\"" << num(f.y(pos(k))) << "\"/>\n";
      }
    }
    os << "</g>\n<g class=\"turbines\" fill=\"#333333\">\n";
    for (const auto& t : problem.turbines) {
      os << "<circle cx=\"" << num(f.x(t.pos)) << "\" cy=\"" << num(f.y(t.pos)) << "\" r=\"2.5\"><title>"
         << escape(t.code) << "</title></circle>\n";
    }
    os << "</g>\n<g class=\"uavs\" fill=\"none\" stroke-width=\"1.5\">\n";
    for (int u : s.active) {
      const char* colour = kPalette[static_cast<std::size_t>(u) % std::size(kPalette)];
      const Point2D c = pos(u);
      os << "<rect stroke=\"" << colour << "\" x=\"" << num(f.x(c) - 5.0) << "\" y=\"" << num(f.y(c) - 5.0)
         << "\" width=\"10.00\" height=\"10.00\"/>\n";
    }
    os << "</g>\n</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string route_svg(const RouteResult& result) {
  if (result.plan.routes.empty()) throw PlanError(ErrorKind::InvalidInput, "empty route plan, nothing to draw");
  const auto& nodes = result.costs.nodes();
  std::vector<Point2D> pts;
  for (const auto& n : nodes) pts.push_back(n.pos);
  const Frame f = Frame::fit(pts, 0.0);

  std::ostringstream os;
  header(os, kPanel, kPanel);
  os << "<defs>\n";
  for (std::size_t r = 0; r < result.plan.routes.size(); ++r) {
    os << "<marker id=\"arrow-" << r + 1 << "\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" "
       << "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\""
       << kPalette[r % std::size(kPalette)] << "\"/></marker>\n";
  }
  os << "</defs>\n";
  for (std::size_t r = 0; r < result.plan.routes.size(); ++r) {
    const Route& route = result.plan.routes[r];
    os << "<g class=\"route\" id=\"route-" << r + 1 << "\" stroke=\"" << kPalette[r % std::size(kPalette)]
       << "\" stroke-width=\"1.5\" fill=\"none\">\n";
    for (std::size_t i = 0; i + 1 < route.nodes.size(); ++i) {
      const Point2D& a = nodes.at(static_cast<std::size_t>(route.nodes[i])).pos;
      const Point2D& b = nodes.at(static_cast<std::size_t>(route.nodes[i + 1])).pos;
      os << "<line x1=\"" << num(f.x(a)) << "\" y1=\"" << num(f.y(a)) << "\" x2=\"" << num(f.x(b)) << "\" y2=\""
         << num(f.y(b)) << "\" marker-end=\"url(#arrow-" << r + 1 << ")\"/>\n";
    }
    os << "</g>\n";
  }
  os << "<g class=\"turbines\" font-size=\"9\" font-family=\"sans-serif\">\n";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const double x = f.x(nodes[k].pos), y = f.y(nodes[k].pos);
    if (k == 0) {
      os << "<rect x=\"" << num(x - 5.0) << "\" y=\"" << num(y - 5.0)
         << "\" width=\"10.00\" height=\"10.00\" fill=\"black\"/>\n";
    } else {
      os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"#333333\"/>\n";
    }
    os << "<text x=\"" << num(x + 6.0) << "\" y=\"" << num(y - 4.0) << "\">" << escape(nodes[k].code)
       << "</text>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace uavplan::io
