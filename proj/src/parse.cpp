#include "semitorsion/parse.hpp"

#include <charconv>
#include <stdexcept>

namespace semitorsion {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  if (trim(text).empty()) throw std::invalid_argument("empty integer list");
  while (true) {
    const auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    Int value = 0;
    const auto* end = item.data() + item.size();
    const auto [ptr, ec] = std::from_chars(item.data(), end, value);
    if (item.empty() || ec != std::errc{} || ptr != end) {
      throw std::invalid_argument("not an integer: '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_int_list(const std::vector<Int>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace semitorsion
