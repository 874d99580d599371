#include "fragcat/io.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "fragcat/format.hpp"

namespace fragcat {

namespace {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double parse_number(std::string_view s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("parse_angle: bad number '" + std::string(s) +
                                "'");
  }
  return v;
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("parse_angle: empty value");
  double sign = 1.0;
  if (s.front() == '+' || s.front() == '-') {
    if (s.front() == '-') sign = -1.0;
    s.remove_prefix(1);
  }
  const std::size_t at = s.find("pi");
  if (at == std::string_view::npos) {
    return sign * parse_number(s);
  }
  std::string_view coef_part = trim(s.substr(0, at));
  if (!coef_part.empty() && coef_part.back() == '*') {
    coef_part = trim(coef_part.substr(0, coef_part.size() - 1));
  }
  const double coef = coef_part.empty() ? 1.0 : parse_number(coef_part);
  std::string_view rest = trim(s.substr(at + 2));
  double div = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') {
      throw std::invalid_argument("parse_angle: bad angle '" +
                                  std::string(text) + "'");
    }
    div = parse_number(trim(rest.substr(1)));
    if (div == 0.0) {
      throw std::invalid_argument("parse_angle: division by zero");
    }
  }
  return sign * coef * std::numbers::pi / div;
}

void write_table_csv(std::ostream& os, const Table& t,
                     std::string_view command) {
  os << "# command: " << command << '\n';
  os << "# schema: fragcat-table-" << kSchemaVersion << '\n';
  for (const auto& [k, v] : t.meta) {
    os << "# " << k << ": " << v << '\n';
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) os << ',';
    os << t.columns[i];
  }
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << format_double(row[i]);
    }
    os << '\n';
  }
}

void write_table_json(std::ostream& os, const Table& t,
                      std::string_view command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "table";
  j["command"] = std::string(command);
  for (const auto& [k, v] : t.meta) j[k] = v;
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  os << j.dump(2) << '\n';
}

void write_grid_csv(std::ostream& os, const CorrelationGrid& g,
                    std::string_view command) {
  os << "# command: " << command << '\n';
  os << "# schema: fragcat-grid-" << kSchemaVersion << '\n';
  os << "# state: " << g.state_label << '\n';
  os << "# varphi: " << format_double(g.varphi) << '\n';
  os << "# method: " << g.method << '\n';
  os << "# units: N^2/Z^2" << '\n';
  os << 'z';
  for (double zi : g.z) os << ',' << format_double(zi);
  os << '\n';
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    os << format_double(g.z[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j) {
      os << ',' << format_double(g.at(i, j));
    }
    os << '\n';
  }
}

void write_grid_json(std::ostream& os, const CorrelationGrid& g,
                     std::string_view command) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "grid";
  j["command"] = std::string(command);
  j["state"] = g.state_label;
  j["varphi"] = g.varphi;
  j["method"] = g.method;
  j["units"] = "N^2/Z^2";
  j["z"] = g.z;
  json rows = json::array();
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < n; ++j2) row.push_back(g.at(i, j2));
    rows.push_back(std::move(row));
  }
  j["values"] = std::move(rows);
  os << j.dump(2) << '\n';
}

}  // namespace fragcat
