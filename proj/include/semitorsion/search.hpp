#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semitorsion/ideal.hpp"

namespace semitorsion {

enum class SearchMode { HalfMuBound, DualConsistency, Hw, OracleCompare };

std::optional<SearchMode> parse_search_mode(std::string_view name);
std::string_view mode_name(SearchMode mode);

struct SearchSpec {
  Int ab_max = 35;
  /// Generators are drawn from [0, gen_window); 0 means a + b.
  Int gen_window = 0;
  std::size_t mu_max = 3;
  SearchMode mode = SearchMode::HalfMuBound;
  unsigned jobs = 1;
  std::uint64_t seed = 1;
  /// oracle-compare: random pairs per semigroup; 0 compares every pair.
  std::size_t samples = 64;
};

enum class RecordFormat { JsonLines, Csv };

struct SearchSummary {
  SearchMode mode = SearchMode::HalfMuBound;
  std::size_t semigroups = 0;
  std::size_t records = 0;
  std::size_t violations = 0;
  /// Mode-specific extremes, e.g. the smallest 2 tau - mu(A)mu(B) seen.
  nlohmann::json stats = nlohmann::json::object();
  /// The first few violating records in output order.
  nlohmann::json violating = nlohmann::json::array();
};

/// Coprime (a, b) with b > a > 1 and ab <= ab_max, sorted by (a, b).
std::vector<std::pair<Int, Int>> hypersurface_pairs(Int ab_max);

/// Every relative ideal of S whose minimal generators are 0 together with at
/// most mu_max - 1 further integers from [1, window). Shifting the smallest
/// generator to 0 loses nothing for shift-invariant quantities, and distinct
/// minimal generating sets give distinct ideals, so there are no duplicates.
/// Ordered by mu, then lexicographically.
std::vector<RelativeIdeal> enumerate_ideals(const SemigroupPtr& s, Int window, std::size_t mu_max);

/// Fixed CSV header for a mode; JSON-lines records carry the same keys.
const std::vector<std::string>& record_columns(SearchMode mode);

/// Runs the selected check over every tuple and writes one record per tuple
/// to `out`, ordered by input (a, b, generators) whatever the job count.
SearchSummary run_search(const SearchSpec& spec, std::ostream& out, RecordFormat format);

nlohmann::json to_json(const SearchSummary& summary);

}  // namespace semitorsion
