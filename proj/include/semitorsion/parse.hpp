#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "semitorsion/semigroup.hpp"

namespace semitorsion {

/// Parses "5,7" or "-3, 0, 4". Throws std::invalid_argument on empty input or
/// anything that is not a comma-separated list of integers.
std::vector<Int> parse_int_list(std::string_view text);

std::string format_int_list(const std::vector<Int>& values, std::string_view sep = ",");

}  // namespace semitorsion
