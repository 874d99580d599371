#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fragcat/correlations.hpp"

namespace fragcat {

/// Radians, with 'pi' literals: "pi", "-pi/2", "3pi/4", "2pi", "0.5",
/// "1.5pi", "3*pi/4". Throws std::invalid_argument on anything else.
double parse_angle(std::string_view text);

/// Column-oriented table for the scalar commands. Metadata entries become
/// '#'-prefixed comment lines in CSV and top-level keys in JSON. All doubles
/// are printed in shortest round-trip form, so output is byte-deterministic.
struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_table_csv(std::ostream& os, const Table& t,
                     std::string_view command);
void write_table_json(std::ostream& os, const Table& t,
                      std::string_view command);

void write_grid_csv(std::ostream& os, const CorrelationGrid& g,
                    std::string_view command);
void write_grid_json(std::ostream& os, const CorrelationGrid& g,
                     std::string_view command);

}  // namespace fragcat
