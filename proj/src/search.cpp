#include "semitorsion/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "semitorsion/huneke_wiegand.hpp"
#include "semitorsion/hypersurface.hpp"
#include "semitorsion/parallel.hpp"
#include "semitorsion/parse.hpp"
#include "semitorsion/torsion.hpp"

namespace semitorsion {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxReportedViolations = 10;

struct Context {
  HypersurfaceSemigroup h;
  std::vector<RelativeIdeal> ideals;
};

// Partial result of one work item; merged in item order.
struct ItemResult {
  std::vector<json> records;
  std::map<std::string, Int> minima;
  std::map<std::string, Int> maxima;
  std::map<std::string, Int> sums;

  void min(const std::string& key, Int v) {
    auto [it, fresh] = minima.emplace(key, v);
    if (!fresh) it->second = std::min(it->second, v);
  }
  void max(const std::string& key, Int v) {
    auto [it, fresh] = maxima.emplace(key, v);
    if (!fresh) it->second = std::max(it->second, v);
  }
  void add(const std::string& key, Int v) { sums[key] += v; }
};

json half_mu_record(const HypersurfaceSemigroup& h, const RelativeIdeal& a, const RelativeIdeal& b,
                    ItemResult& acc) {
  const auto r = check_half_mu_bound(h, a, b);
  const auto mm = static_cast<Int>(r.mu_product);
  const auto tau = static_cast<Int>(r.tau);
  const auto support = static_cast<Int>(r.support);
  acc.min("min_tau_plus_support_minus_mumu", tau + support - mm);
  acc.min("min_two_tau_minus_mumu", 2 * tau - mm);
  acc.max("max_tau", tau);
  return json{{"a", h.a()},           {"b", h.b()},         {"gens_A", a.min_gens()},
              {"gens_B", b.min_gens()}, {"tau", r.tau},      {"support", r.support},
              {"mu_A", r.mu_a},       {"mu_B", r.mu_b},     {"bound_ok", r.inequality_1 && r.inequality_2}};
}

json dual_record(const HypersurfaceSemigroup& h, const RelativeIdeal& a, ItemResult& acc) {
  const auto formula = dual_formula(h, a);
  const auto brute = ideal_dual(a);
  const auto symmetric = dual_symmetric(a);
  const bool bidual = dual_formula(h, formula) == a;
  const auto pairs = torsion_generator_pairs(h, a);
  const auto floor = 2 * static_cast<Int>(a.mu()) - 2;
  const bool agree = formula == brute && brute == symmetric;
  acc.min("min_torsion_pairs_minus_bound", static_cast<Int>(pairs) - floor);
  acc.add("dual_mismatches", agree ? 0 : 1);
  acc.add("bidual_failures", bidual ? 0 : 1);
  return json{{"a", h.a()},
              {"b", h.b()},
              {"gens_A", a.min_gens()},
              {"mu_A", a.mu()},
              {"dual_formula", formula.min_gens()},
              {"dual_bruteforce", brute.min_gens()},
              {"dual_symmetric", symmetric.min_gens()},
              {"bidual_ok", bidual},
              {"torsion_pairs", pairs},
              {"bound_ok", agree && bidual && static_cast<Int>(pairs) >= floor}};
}

json hw_record(const HypersurfaceSemigroup& h, ItemResult& acc) {
  bool routes_agree = true;
  bool all_positive = false;
  std::size_t gaps = 0;
  Int min_count = -1;
  try {
    const auto report = hw_check_semigroup(h.base());
    all_positive = report.all_positive;
    gaps = report.per_gap.size();
    for (const auto& g : report.per_gap) {
      const auto c = static_cast<Int>(g.count);
      min_count = min_count < 0 ? c : std::min(min_count, c);
    }
  } catch (const std::logic_error&) {
    routes_agree = false;
  }
  if (min_count >= 0) acc.min("min_count", min_count);
  acc.add("gaps_checked", static_cast<Int>(gaps));
  return json{{"a", h.a()},
              {"b", h.b()},
              {"gaps", gaps},
              {"min_count", min_count},
              {"all_positive", all_positive},
              {"routes_agree", routes_agree},
              {"bound_ok", all_positive && routes_agree}};
}

json oracle_record(const HypersurfaceSemigroup& h, const RelativeIdeal& a, const RelativeIdeal& b,
                   ItemResult& acc) {
  const Int lo = a.min_element() + b.min_element();
  const Int hi = h.base()->frobenius() + a.max_generator() + b.max_generator();
  std::size_t fibers = 0;
  std::size_t disagreements = 0;
  std::size_t tau = 0;
  for (Int z = lo; z <= hi; ++z) {
    const auto components = gamma_graph(a, b, z).component_count;
    const auto classes = fiber_oracle(a, b, z);
    ++fibers;
    if (components != classes) ++disagreements;
    if (components > 1) tau += components - 1;
  }
  const bool split = torsion_free_split_check(a, b).torsion_free;
  const bool split_agrees = split == (tau == 0);
  acc.add("fibers_compared", static_cast<Int>(fibers));
  acc.add("fiber_disagreements", static_cast<Int>(disagreements));
  acc.add("split_disagreements", split_agrees ? 0 : 1);
  return json{{"a", h.a()},
              {"b", h.b()},
              {"gens_A", a.min_gens()},
              {"gens_B", b.min_gens()},
              {"fibers", fibers},
              {"disagreements", disagreements},
              {"tau", tau},
              {"split_torsion_free", split},
              {"bound_ok", disagreements == 0 && split_agrees}};
}

std::string csv_cell(const json& v) {
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) out += ';';
      out += v[i].dump();
    }
    return out;
  }
  return v.dump();
}

}  // namespace

std::optional<SearchMode> parse_search_mode(std::string_view name) {
  if (name == "half-mu-bound") return SearchMode::HalfMuBound;
  if (name == "dual-consistency") return SearchMode::DualConsistency;
  if (name == "hw") return SearchMode::Hw;
  if (name == "oracle-compare") return SearchMode::OracleCompare;
  return std::nullopt;
}

std::string_view mode_name(SearchMode mode) {
  switch (mode) {
    case SearchMode::HalfMuBound: return "half-mu-bound";
    case SearchMode::DualConsistency: return "dual-consistency";
    case SearchMode::Hw: return "hw";
    case SearchMode::OracleCompare: return "oracle-compare";
  }
  return "unknown";
}

std::vector<std::pair<Int, Int>> hypersurface_pairs(Int ab_max) {
  std::vector<std::pair<Int, Int>> out;
  for (Int a = 2; a * (a + 1) <= ab_max; ++a) {
    for (Int b = a + 1; a * b <= ab_max; ++b) {
      if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<RelativeIdeal> enumerate_ideals(const SemigroupPtr& s, Int window,
                                            std::size_t mu_max) {
  std::vector<std::vector<Int>> found;
  std::vector<Int> current{0};
  // Minimality is inherited by subsets, so a failing prefix prunes the branch.
  auto extend = [&](auto&& self, Int from) -> void {
    found.push_back(current);
    if (current.size() >= mu_max) return;
    for (Int g = from; g < window; ++g) {
      const bool minimal =
          std::none_of(current.begin(), current.end(), [&](Int h) { return s->contains(g - h); });
      if (!minimal) continue;
      current.push_back(g);
      self(self, g + 1);
      current.pop_back();
    }
  };
  if (mu_max > 0) extend(extend, 1);
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& l, const auto& r) { return l.size() < r.size(); });
  std::vector<RelativeIdeal> out;
  out.reserve(found.size());
  for (const auto& gens : found) out.emplace_back(s, gens);
  return out;
}

const std::vector<std::string>& record_columns(SearchMode mode) {
  static const std::vector<std::string> half_mu{"a",   "b",       "gens_A", "gens_B", "tau",
                                                "support", "mu_A", "mu_B",   "bound_ok"};
  static const std::vector<std::string> dual{"a",           "b",
                                             "gens_A",      "mu_A",
                                             "dual_formula", "dual_bruteforce",
                                             "dual_symmetric", "bidual_ok",
                                             "torsion_pairs", "bound_ok"};
  static const std::vector<std::string> hw{"a",            "b",            "gaps",    "min_count",
                                           "all_positive", "routes_agree", "bound_ok"};
  static const std::vector<std::string> oracle{"a",      "b",   "gens_A",
                                               "gens_B", "fibers", "disagreements",
                                               "tau",    "split_torsion_free", "bound_ok"};
  switch (mode) {
    case SearchMode::HalfMuBound: return half_mu;
    case SearchMode::DualConsistency: return dual;
    case SearchMode::Hw: return hw;
    case SearchMode::OracleCompare: return oracle;
  }
  throw std::invalid_argument("unknown search mode");
}

SearchSummary run_search(const SearchSpec& spec, std::ostream& out, RecordFormat format) {
  if (spec.ab_max < 1 || spec.mu_max < 1 || spec.gen_window < 0) {
    throw std::invalid_argument("search caps must be positive");
  }
  std::vector<Context> contexts;
  for (auto [a, b] : hypersurface_pairs(spec.ab_max)) {
    HypersurfaceSemigroup h(a, b);
    const Int window = spec.gen_window > 0 ? spec.gen_window : a + b;
    std::vector<RelativeIdeal> ideals;
    if (spec.mode != SearchMode::Hw) ideals = enumerate_ideals(h.base(), window, spec.mu_max);
    contexts.push_back({std::move(h), std::move(ideals)});
  }

  // (context, i, j): meaning depends on the mode.
  struct Item {
    std::size_t ctx;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Item> items;
  for (std::size_t c = 0; c < contexts.size(); ++c) {
    const auto n = contexts[c].ideals.size();
    switch (spec.mode) {
      case SearchMode::HalfMuBound:
      case SearchMode::DualConsistency:
        for (std::size_t i = 0; i < n; ++i) items.push_back({c, i, 0});
        break;
      case SearchMode::Hw:
        items.push_back({c, 0, 0});
        break;
      case SearchMode::OracleCompare:
        if (spec.samples == 0) {
          for (std::size_t i = 0; i < n; ++i) items.push_back({c, i, 0});
        } else {
          for (std::size_t k = 0; k < spec.samples; ++k) items.push_back({c, k, 0});
        }
        break;
    }
  }

  std::vector<ItemResult> results(items.size());
  parallel_for(items.size(), spec.jobs, [&](std::size_t k) {
    const auto& item = items[k];
    const auto& ctx = contexts[item.ctx];
    const auto& ideals = ctx.ideals;
    auto& acc = results[k];
    switch (spec.mode) {
      case SearchMode::HalfMuBound: {
        const auto& a = ideals[item.i];
        if (a.is_principal()) break;
        for (std::size_t j = item.i; j < ideals.size(); ++j) {
          acc.records.push_back(half_mu_record(ctx.h, a, ideals[j], acc));
        }
        break;
      }
      case SearchMode::DualConsistency:
        acc.records.push_back(dual_record(ctx.h, ideals[item.i], acc));
        break;
      case SearchMode::Hw:
        acc.records.push_back(hw_record(ctx.h, acc));
        break;
      case SearchMode::OracleCompare:
        if (spec.samples == 0) {
          for (std::size_t j = item.i; j < ideals.size(); ++j) {
            acc.records.push_back(oracle_record(ctx.h, ideals[item.i], ideals[j], acc));
          }
        } else {
          std::seed_seq seq{static_cast<std::uint64_t>(spec.seed), static_cast<std::uint64_t>(ctx.h.a()),
                            static_cast<std::uint64_t>(ctx.h.b()), static_cast<std::uint64_t>(item.i)};
          std::mt19937_64 rng(seq);
          std::uniform_int_distribution<std::size_t> pick(0, ideals.size() - 1);
          const auto i = pick(rng);
          const auto j = pick(rng);
          acc.records.push_back(oracle_record(ctx.h, ideals[i], ideals[j], acc));
        }
        break;
    }
  });

  SearchSummary summary;
  summary.mode = spec.mode;
  summary.semigroups = contexts.size();
  const auto& columns = record_columns(spec.mode);
  if (format == RecordFormat::Csv) {
    for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
    out << '\n';
  }
  std::map<std::string, Int> minima, maxima, sums;
  for (auto& r : results) {
    for (const auto& rec : r.records) {
      ++summary.records;
      if (!rec.at("bound_ok").get<bool>()) {
        ++summary.violations;
        if (summary.violating.size() < kMaxReportedViolations) summary.violating.push_back(rec);
      }
      if (format == RecordFormat::Csv) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
          out << (c ? "," : "") << csv_cell(rec.at(columns[c]));
        }
        out << '\n';
      } else {
        out << rec.dump() << '\n';
      }
    }
    for (auto [k, v] : r.minima) {
      auto [it, fresh] = minima.emplace(k, v);
      if (!fresh) it->second = std::min(it->second, v);
    }
    for (auto [k, v] : r.maxima) {
      auto [it, fresh] = maxima.emplace(k, v);
      if (!fresh) it->second = std::max(it->second, v);
    }
    for (auto [k, v] : r.sums) sums[k] += v;
  }
  for (auto [k, v] : minima) summary.stats[k] = v;
  for (auto [k, v] : maxima) summary.stats[k] = v;
  for (auto [k, v] : sums) summary.stats[k] = v;
  return summary;
}

json to_json(const SearchSummary& s) {
  return json{{"mode", mode_name(s.mode)},    {"semigroups", s.semigroups},
              {"records", s.records},         {"violations", s.violations},
              {"stats", s.stats},             {"violating", s.violating}};
}

}  // namespace semitorsion
