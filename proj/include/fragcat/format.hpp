#pragma once

#include <string>

namespace fragcat {

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

}  // namespace fragcat
