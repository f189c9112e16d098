#include "ocgw/json_out.hpp"

#include <cmath>
#include <cstdio>

namespace ocgw {

namespace {

void emit(const ojson& j, std::string& out, int indent, int level) {
  auto newline = [&](int lv) {
    if (indent < 0) return;
    out.push_back('\n');
    out.append(static_cast<std::size_t>(indent * lv), ' ');
  };
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out.push_back('{');
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out.push_back(',');
        first = false;
        newline(level + 1);
        out += ojson(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        emit(it.value(), out, indent, level + 1);
      }
      newline(level);
      out.push_back('}');
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out.push_back('[');
      bool first = true;
      for (const auto& v : j) {
        if (!first) out.push_back(',');
        first = false;
        newline(level + 1);
        emit(v, out, indent, level + 1);
      }
      newline(level);
      out.push_back(']');
      return;
    }
    case ojson::value_t::number_float: {
      double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      if (v == 0.0) v = 0.0;  // no "-0"
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const ojson& j, int indent) {
  std::string out;
  emit(j, out, indent, 0);
  return out;
}

}  // namespace ocgw
