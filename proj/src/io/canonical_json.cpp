#include "uavplan/io/canonical_json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "uavplan/errors.hpp"

namespace uavplan::io {
namespace {

void indent(std::string& out, int level) { out.append(static_cast<std::size_t>(level) * 2, ' '); }

void write(std::string& out, const nlohmann::json& j, int level) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map order: sorted keys
        if (!first) out += ",\n";
        first = false;
        indent(out, level + 1);
        out += nlohmann::json(it.key()).dump();
        out += ": ";
        write(out, it.value(), level + 1);
      }
      out += '\n';
      indent(out, level);
      out += '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      const bool scalars = std::none_of(j.begin(), j.end(), [](const nlohmann::json& e) {
        return e.is_object() || e.is_array();
      });
      if (scalars) {
        out += '[';
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          write(out, j[i], level + 1);
        }
        out += ']';
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        indent(out, level + 1);
        write(out, j[i], level + 1);
      }
      out += '\n';
      indent(out, level);
      out += ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) throw PlanError(ErrorKind::InvalidInput, "non-finite number in JSON output");
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.6f", v);
      std::string s(buf);
      if (s == "-0.000000") s = "0.000000";
      out += s;
      return;
    }
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_canonical(const nlohmann::json& j) {
  std::string out;
  write(out, j, 0);
  out += '\n';
  return out;
}

}  // namespace uavplan::io
