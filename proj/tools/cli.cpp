#include "cli.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "semitorsion/huneke_wiegand.hpp"
#include "semitorsion/hypersurface.hpp"
#include "semitorsion/parse.hpp"
#include "semitorsion/search.hpp"
#include "semitorsion/torsion.hpp"

namespace semitorsion::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kViolation = 2;

struct Options {
  std::string semigroup;
  std::string ideal_a;
  std::string ideal_b;
  bool profile = false;
  std::optional<Int> dot;
  bool as_json = false;
  std::string method = "bruteforce";
  std::string mode = "half-mu-bound";
  Int ab_max = 35;
  Int gen_window = 0;
  std::size_t mu_max = 3;
  unsigned jobs = 1;
  std::string out_path;
  std::uint64_t seed = 1;
  std::size_t samples = 64;
};

std::string bracketed(const std::vector<Int>& gens) { return "<" + format_int_list(gens) + ">"; }

int cmd_info(const Options& o, std::ostream& out) {
  const auto s = make_semigroup(parse_int_list(o.semigroup));
  const auto gaps = s->gaps();
  if (o.as_json) {
    out << json{{"generators", s->generators()},
                {"multiplicity", s->multiplicity()},
                {"frobenius", s->frobenius()},
                {"gaps", gaps},
                {"symmetric", s->is_symmetric()}}
                   .dump()
        << '\n';
    return kOk;
  }
  out << "semigroup:    " << bracketed(s->generators()) << '\n'
      << "multiplicity: " << s->multiplicity() << '\n'
      << "frobenius:    " << s->frobenius() << '\n'
      << "gaps (" << gaps.size() << "):   " << format_int_list(gaps) << '\n'
      << "symmetric:    " << (s->is_symmetric() ? "true" : "false") << '\n';
  return kOk;
}

int cmd_tau(const Options& o, std::ostream& out) {
  const auto s = make_semigroup(parse_int_list(o.semigroup));
  const RelativeIdeal a(s, parse_int_list(o.ideal_a));
  const RelativeIdeal b(s, parse_int_list(o.ideal_b));
  if (o.dot) {
    out << to_dot(gamma_graph(a, b, *o.dot));
    return kOk;
  }
  const auto p = torsion_profile(a, b);
  if (o.as_json) {
    json j{{"semigroup", s->generators()}, {"gens_A", a.min_gens()}, {"gens_B", b.min_gens()},
           {"tau", p.total},               {"support", p.support_size}};
    if (o.profile) {
      json rows = json::array();
      for (auto [z, t] : p.tau_by_z) rows.push_back({{"z", z}, {"tau_z", t}});
      j["profile"] = rows;
    }
    out << j.dump() << '\n';
    return kOk;
  }
  out << "A = (" << format_int_list(a.min_gens()) << ")  B = (" << format_int_list(b.min_gens())
      << ")  over " << bracketed(s->generators()) << '\n'
      << "tau:     " << p.total << '\n'
      << "support: " << p.support_size << '\n';
  if (o.profile) {
    out << "window:  [" << p.z_lo << ", " << p.z_hi << "]\n";
    for (auto [z, t] : p.tau_by_z) out << "  z=" << z << "  tau_z=" << t << '\n';
  }
  return kOk;
}

int cmd_dual(const Options& o, std::ostream& out, std::ostream& err) {
  const auto s = make_semigroup(parse_int_list(o.semigroup));
  const RelativeIdeal a(s, parse_int_list(o.ideal_a));
  std::optional<RelativeIdeal> dual;
  if (o.method == "bruteforce") {
    dual = ideal_dual(a);
  } else if (o.method == "formula") {
    dual = dual_formula(HypersurfaceSemigroup::from_semigroup(s), a);
  } else if (o.method == "symmetric") {
    dual = dual_symmetric(a);
  } else {
    err << "error: unknown dual method '" << o.method << "'\n";
    return kUsage;
  }
  out << format_int_list(dual->min_gens()) << '\n';
  return kOk;
}

int cmd_hw(const Options& o, std::ostream& out) {
  const auto s = make_semigroup(parse_int_list(o.semigroup));
  const auto report = hw_check_semigroup(s);
  json gaps = json::array();
  for (const auto& g : report.per_gap) {
    gaps.push_back({{"n", g.n},
                    {"count", g.count},
                    {"min_irreducible", g.min_irreducible ? json(*g.min_irreducible) : json()}});
  }
  out << json{{"semigroup", s->generators()}, {"gaps", gaps}, {"all_positive", report.all_positive}}
             .dump()
      << '\n';
  return report.all_positive ? kOk : kViolation;
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
  SearchSpec spec;
  const auto mode = parse_search_mode(o.mode);
  if (!mode) {
    err << "error: unknown search mode '" << o.mode << "'\n";
    return kUsage;
  }
  spec.mode = *mode;
  spec.ab_max = o.ab_max;
  spec.gen_window = o.gen_window;
  spec.mu_max = o.mu_max;
  spec.jobs = o.jobs;
  spec.seed = o.seed;
  spec.samples = o.samples;
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << o.out_path << "'\n";
    return kUsage;
  }
  const bool csv = o.out_path.size() >= 4 && o.out_path.ends_with(".csv");
  const auto summary = run_search(spec, file, csv ? RecordFormat::Csv : RecordFormat::JsonLines);
  file.close();
  if (!file) {
    err << "error: failed writing '" << o.out_path << "'\n";
    return kUsage;
  }
  out << to_json(summary).dump(2) << '\n';
  return summary.violations == 0 ? kOk : kViolation;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torsion, duals and Huneke-Wiegand checks for numerical semigroup ideals",
               "semitorsion"};
  app.require_subcommand(1);
  Options o;

  auto* info = app.add_subcommand("info", "Minimal generators, Frobenius number, gaps, symmetry");
  info->add_option("-s,--semigroup", o.semigroup, "generators, e.g. 5,7")->required();
  info->add_flag("--json", o.as_json, "print JSON");

  auto* tau = app.add_subcommand("tau", "Torsion number tau(A,B) of two relative ideals");
  tau->add_option("-s,--semigroup", o.semigroup, "generators, e.g. 5,11")->required();
  tau->add_option("-a,--ideal-a", o.ideal_a, "generators of A, e.g. 20,21,22")->required();
  tau->add_option("-b,--ideal-b", o.ideal_b, "generators of B, e.g. 0,23,24")->required();
  tau->add_flag("--profile", o.profile, "list every z with tau_z > 0");
  tau->add_option("--dot", o.dot, "emit Gamma_z as Graphviz DOT for this z");
  tau->add_flag("--json", o.as_json, "print JSON");

  auto* dual = app.add_subcommand("dual", "Minimal generators of the dual ideal A*");
  dual->add_option("-s,--semigroup", o.semigroup, "generators")->required();
  dual->add_option("-a,--ideal-a,--ideal", o.ideal_a, "generators of A")->required();
  dual->add_option("--method", o.method, "formula | bruteforce | symmetric")
      ->check(CLI::IsMember({"formula", "bruteforce", "symmetric"}));

  auto* hw = app.add_subcommand("hw", "Irreducible arithmetic triples for every gap");
  hw->add_option("-s,--semigroup", o.semigroup, "generators")->required();

  auto* search = app.add_subcommand("search", "Exhaustive checks over <a,b> with ab <= ab-max");
  search->add_option("--mode", o.mode, "half-mu-bound | dual-consistency | hw | oracle-compare");
  search->add_option("--ab-max", o.ab_max, "cap on a*b")->check(CLI::PositiveNumber);
  search->add_option("--gen-window", o.gen_window, "generator range width (0: a+b)")
      ->check(CLI::NonNegativeNumber);
  search->add_option("--mu-max", o.mu_max, "cap on mu")->check(CLI::PositiveNumber);
  search->add_option("--jobs", o.jobs, "worker threads")
      ->envname("SEMITORSION_JOBS")
      ->check(CLI::PositiveNumber);
  search->add_option("--out", o.out_path, "output file (.csv for CSV, else JSON lines)")
      ->required();
  search->add_option("--seed", o.seed, "seed for oracle-compare sampling");
  search->add_option("--samples", o.samples, "oracle-compare pairs per semigroup (0: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return cmd_info(o, out);
    if (*tau) return cmd_tau(o, out);
    if (*dual) return cmd_dual(o, out, err);
    if (*hw) return cmd_hw(o, out);
    if (*search) return cmd_search(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace semitorsion::cli
