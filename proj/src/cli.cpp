#include "gopkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gopkit/census.hpp"
#include "gopkit/count.hpp"
#include "gopkit/error.hpp"
#include "gopkit/gop.hpp"
#include "gopkit/maps.hpp"
#include "gopkit/orbit.hpp"
#include "gopkit/rigid.hpp"
#include "gopkit/verify.hpp"

#ifndef GOPKIT_VERSION
#define GOPKIT_VERSION "0.0.0"
#endif

namespace gopkit::cli {

namespace {

using nlohmann::ordered_json;

/// Raised for malformed arguments that CLI11 itself accepted.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint32_t kOrderGuard = 20;

std::uint32_t default_jobs() {
  if (const char* env = std::getenv("GOPKIT_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1 && v <= 1024) return static_cast<std::uint32_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

BigInt parse_big(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw UsageError("expected a nonnegative decimal integer, got '" + text + "'");
  return BigInt(text);
}

std::vector<std::uint32_t> parse_alphas(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.size() > 9 ||
        !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw UsageError("bad weight list '" + text + "'");
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (out.empty()) throw UsageError("empty weight list");
  return out;
}

WindowBoundary parse_boundary(const std::string& s) {
  if (s == "full") return WindowBoundary::full;
  if (s == "truncated") return WindowBoundary::truncated;
  throw UsageError("boundary must be full or truncated");
}

/// `rigid:ALPHAS:Q[:BOUNDARY]`, e.g. `rigid:20,9,5,2,1:66`.
RigidSpec parse_filter(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() < 3 || parts.size() > 4 || parts[0] != "rigid")
    throw UsageError("filter must look like rigid:ALPHAS:Q[:full|truncated]");
  const BigInt q = parse_big(parts[2]);
  if (q > std::numeric_limits<std::uint64_t>::max()) throw UsageError("q too large");
  return RigidSpec(parse_alphas(parts[1]), static_cast<std::uint64_t>(q),
                   parts.size() == 4 ? parse_boundary(parts[3]) : WindowBoundary::full);
}

std::string join(const std::vector<Point>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

ordered_json census_json(const GopCensus& c) {
  ordered_json classes = ordered_json::array();
  for (const auto& [g, count] : c.counts)
    classes.push_back({{"gop", to_literal(g)}, {"count", to_decimal(count)}});
  return classes;
}

void write_census_csv(std::ostream& out, const GopCensus& c) {
  out << "gop,count\n";
  for (const auto& [g, count] : c.counts) out << '"' << to_literal(g) << "\"," << count << '\n';
}

ProgressCallback progress_to(std::ostream& err, const char* what) {
  auto lock = std::make_shared<std::mutex>();
  return [&err, what, lock](std::size_t done, std::size_t total) {
    std::lock_guard<std::mutex> guard(*lock);
    err << what << ": partition " << done << "/" << total << '\n' << std::flush;
  };
}

void print_components(std::ostream& out, const OrbitStructure& s) {
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    const Component& c = s.components[i];
    out << "component " << i << ": period " << c.period << " cycle {" << join(c.cycle, ",")
        << "} component {" << join(c.basin, ",") << "} "
        << (c.attractive ? "attractive" : "repulsive") << '\n';
  }
}

ordered_json components_json(const OrbitStructure& s) {
  ordered_json arr = ordered_json::array();
  for (const Component& c : s.components)
    arr.push_back({{"representative", c.representative},
                   {"period", c.period},
                   {"cycle", c.cycle},
                   {"component", c.basin},
                   {"attractive", c.attractive}});
  return arr;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Global orbit patterns of endofunctions of finite sets", "gopkit"};
  app.set_version_flag("--version", std::string("gopkit ") + GOPKIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough(false);

  const std::uint32_t env_jobs = default_jobs();
  std::function<void()> action;
  bool verify_failed = false;

  // analyze
  std::string fn_text;
  std::string out_format = "table";
  auto* analyze_cmd = app.add_subcommand("analyze", "Components, cycles and gop of a function");
  analyze_cmd->add_option("function", fn_text, "N:i0,...,i{N-1}")->required();
  analyze_cmd->add_option("--out", out_format, "table or json")->check(CLI::IsMember({"table", "json"}));
  analyze_cmd->callback([&] {
    action = [&] {
      const FunctionTable f = parse_function(fn_text);
      const OrbitStructure s = analyze(f);
      if (out_format == "json") {
        ordered_json j{{"function", to_literal(f)},
                       {"gop", to_literal(gop_of(f))},
                       {"components", components_json(s)}};
        out << j.dump(2) << '\n';
        return;
      }
      out << "function " << to_literal(f) << '\n'
          << "gop " << to_literal(gop_of(f)) << '\n'
          << "components " << s.components.size() << '\n';
      print_components(out, s);
    };
  });

  auto* gop_cmd = app.add_subcommand("gop", "Global orbit pattern of a function");
  gop_cmd->add_option("function", fn_text, "N:i0,...,i{N-1}")->required();
  gop_cmd->callback([&] { action = [&] { out << to_literal(gop_of(parse_function(fn_text))) << '\n'; }; });

  auto* rank_cmd = app.add_subcommand("rank", "Rank of a function in [1, N^N]");
  rank_cmd->add_option("function", fn_text, "N:i0,...,i{N-1}")->required();
  rank_cmd->callback([&] { action = [&] { out << rank(parse_function(fn_text)) << '\n'; }; });

  std::uint32_t n = 0;
  std::string rank_text;
  auto* unrank_cmd = app.add_subcommand("unrank", "Function with the given rank");
  unrank_cmd->add_option("--n", n, "domain size")->required()->check(CLI::Range(1u, 1u << 20));
  unrank_cmd->add_option("--rank", rank_text, "rank in [1, N^N]")->required();
  unrank_cmd->callback([&] { action = [&] { out << to_literal(unrank(n, parse_big(rank_text))) << '\n'; }; });

  std::string gop_text;
  auto* threshold_cmd = app.add_subcommand("threshold", "Minimal-rank function of a gop");
  threshold_cmd->add_option("gop", gop_text, "[w1,...,wp]@N")->required();
  threshold_cmd->callback([&] {
    action = [&] {
      const FunctionTable t = threshold(parse_gop(gop_text));
      out << to_literal(t) << '\n' << "rank=" << rank(t) << '\n';
    };
  });

  bool allow_large = false;
  auto* order_cmd = app.add_subcommand("order", "All gops of F_N in pseudo-decimal order");
  order_cmd->add_option("--n", n, "domain size")->required()->check(CLI::Range(1u, 63u));
  order_cmd->add_option("--out", out_format, "table or csv")->check(CLI::IsMember({"table", "csv"}));
  order_cmd->add_flag("--allow-large", allow_large, "allow n above 20");
  order_cmd->callback([&] {
    action = [&] {
      if (n > kOrderGuard && !allow_large)
        throw GuardError("order --n " + std::to_string(n) + " lists 2^n - 1 gops; pass --allow-large to override");
      const auto gops = all_gops(n);
      if (out_format == "csv") {
        out << "gop,modulus,modulus_minus_first\n";
        for (const Gop& g : gops)
          out << '"' << orders_literal(g) << "\"," << g.modulus() << ',' << g.modulus() - g.first() << '\n';
        return;
      }
      std::size_t width = 3;
      for (const Gop& g : gops) width = std::max(width, orders_literal(g, true).size());
      out << std::left << std::setw(static_cast<int>(width)) << "gop" << "  modulus  modulus-w1\n";
      for (const Gop& g : gops)
        out << std::left << std::setw(static_cast<int>(width)) << orders_literal(g, true) << "  "
            << std::setw(7) << g.modulus() << "  " << g.modulus() - g.first() << '\n';
    };
  });

  auto* count_cmd = app.add_subcommand("count", "Exact number of functions with a gop");
  count_cmd->add_option("gop", gop_text, "[w1,...,wp]@N")->required();
  count_cmd->add_option("--out", out_format, "table or json")->check(CLI::IsMember({"table", "json"}));
  count_cmd->callback([&] {
    action = [&] {
      const Gop g = parse_gop(gop_text);
      const BigInt c = count_gop(g);
      if (out_format == "json") {
        out << ordered_json{{"gop", to_literal(g)}, {"count", to_decimal(c)}}.dump(2) << '\n';
        return;
      }
      out << c << '\n';
      if (c >= 1000000) out << "approx " << to_scientific(c) << '\n';
    };
  });

  // enumerate
  std::string filter_text;
  std::uint32_t jobs = env_jobs;
  std::uint32_t partitions = 0;
  bool quiet = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Exhaustive gop census of F_N");
  enumerate_cmd->add_option("--n", n, "domain size")->required()->check(CLI::Range(1u, kCensusHardLimit));
  enumerate_cmd->add_option("--filter", filter_text, "rigid:ALPHAS:Q[:full|truncated]");
  enumerate_cmd->add_option("--jobs", jobs, "worker threads (default from GOPKIT_JOBS, else 1)")
      ->check(CLI::Range(1u, 1024u));
  enumerate_cmd->add_option("--partitions", partitions, "rank-range chunks (default 8 per job)");
  enumerate_cmd->add_option("--out", out_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  enumerate_cmd->add_flag("--allow-large", allow_large, "allow n above the census guard");
  enumerate_cmd->add_flag("--quiet", quiet, "no progress on standard error");
  enumerate_cmd->callback([&] {
    if (out_format == "table") out_format = "csv";
    action = [&] {
      FunctionFilter filter;
      if (!filter_text.empty()) {
        auto spec = std::make_shared<RigidSpec>(parse_filter(filter_text));
        filter = [spec](std::span<const Point> images) {
          return is_rigid(FunctionTable(std::vector<Point>(images.begin(), images.end())), *spec);
        };
      }
      CensusOptions opts;
      opts.jobs = jobs;
      opts.partitions = partitions ? partitions : jobs * 8;
      opts.allow_large = allow_large;
      if (!quiet) opts.progress = progress_to(err, "enumerate");
      const GopCensus c = census_partitioned(n, filter, opts);
      if (out_format == "json") {
        out << ordered_json{{"n", n}, {"filter", filter_text}, {"total", to_decimal(c.total)},
                            {"classes", census_json(c)}}
                   .dump(2)
            << '\n';
      } else {
        write_census_csv(out, c);
      }
    };
  });

  // rigid
  std::string alphas_text;
  std::string q_text;
  std::string boundary_text = "full";
  auto* rigid_cmd = app.add_subcommand("rigid", "Census of a locally rigid set by pruned search");
  rigid_cmd->add_option("--n", n, "domain size")->required()->check(CLI::Range(1u, 64u));
  rigid_cmd->add_option("--alphas", alphas_text, "comma-separated weights, e.g. 20,9,5,2,1")->required();
  rigid_cmd->add_option("--q", q_text, "variation threshold")->required();
  rigid_cmd->add_option("--boundary", boundary_text, "full or truncated")
      ->check(CLI::IsMember({"full", "truncated"}));
  rigid_cmd->add_option("--jobs", jobs, "worker threads (default from GOPKIT_JOBS, else 1)")
      ->check(CLI::Range(1u, 1024u));
  rigid_cmd->add_option("--out", out_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  rigid_cmd->add_flag("--allow-large", allow_large, "allow n above the search guard");
  rigid_cmd->add_flag("--quiet", quiet, "no progress on standard error");
  rigid_cmd->callback([&] {
    action = [&] {
      const BigInt q = parse_big(q_text);
      if (q > std::numeric_limits<std::uint64_t>::max()) throw UsageError("q too large");
      const RigidSpec spec(parse_alphas(alphas_text), static_cast<std::uint64_t>(q),
                           parse_boundary(boundary_text));
      RigidOptions opts;
      opts.jobs = jobs;
      opts.allow_large = allow_large;
      if (!quiet && out_format != "table") opts.progress = progress_to(err, "rigid");
      const GopCensus c = enumerate_rigid(n, spec, opts);
      if (out_format == "json") {
        out << ordered_json{{"n", n},
                            {"alphas", spec.alphas},
                            {"q", spec.q},
                            {"boundary", boundary_text},
                            {"summary",
                             {{"q", spec.q},
                              {"max_period", c.max_period()},
                              {"max_modulus", c.max_modulus()},
                              {"gops", c.distinct()},
                              {"functions", to_decimal(c.total)}}},
                            {"classes", census_json(c)}}
                   .dump(2)
            << '\n';
        return;
      }
      if (out_format == "csv") write_census_csv(out, c);
      std::ostream& summary = out_format == "csv" ? err : out;
      summary << "q max_period max_modulus gops functions\n"
              << spec.q << ' ' << c.max_period() << ' ' << c.max_modulus() << ' ' << c.distinct()
              << ' ' << c.total << '\n';
    };
  });

  // discretize
  std::string map_text = "logistic";
  double ell = 1.0;
  std::string denominator_text = "n-1";
  std::string rounding_text = "floor";
  auto* discretize_cmd = app.add_subcommand("discretize", "Grid restriction of a map of [0,1] and its orbits");
  discretize_cmd->add_option("--map", map_text, "logistic or tentpow")->check(CLI::IsMember({"logistic", "tentpow"}));
  auto* ell_opt = discretize_cmd->add_option("--ell", ell, "tentpow exponent in [1,2]");
  discretize_cmd->add_option("--n", n, "grid points")->required()->check(CLI::Range(2u, 1u << 26));
  discretize_cmd->add_option("--denominator", denominator_text, "n or n-1")->check(CLI::IsMember({"n", "n-1"}));
  discretize_cmd->add_option("--rounding", rounding_text, "floor, nearest-half-up or nearest-half-down")
      ->check(CLI::IsMember({"floor", "nearest-half-up", "nearest-half-down"}));
  discretize_cmd->add_option("--out", out_format, "table, json or function")
      ->check(CLI::IsMember({"table", "json", "function"}));
  discretize_cmd->callback([&] {
    action = [&] {
      MapSpec map = MapSpec::logistic();
      if (map_text == "tentpow") {
        if (ell_opt->count() == 0) throw UsageError("--ell is required for tentpow");
        map = MapSpec::tentpow(ell);
      } else if (ell_opt->count() != 0) {
        throw UsageError("--ell only applies to tentpow");
      }
      GridSpec grid;
      grid.n = n;
      grid.denominator = denominator_text == "n" ? Denominator::n : Denominator::n_minus_one;
      grid.rounding = rounding_text == "floor"             ? Rounding::floor
                      : rounding_text == "nearest-half-up" ? Rounding::nearest_half_up
                                                           : Rounding::nearest_half_down;
      const OrbitReport r = orbit_report(map, grid);
      if (out_format == "function") {
        out << to_literal(r.structure.function) << '\n';
        return;
      }
      if (out_format == "json") {
        ordered_json cycles = ordered_json::array();
        for (const auto& c : r.cycles)
          cycles.push_back({{"period", c.period}, {"cycle", c.cycle}, {"basin", c.basin_size},
                            {"attractive", c.attractive}});
        ordered_json j{{"map", to_string(map.kind)}};
        if (map.ell) j["ell"] = *map.ell;
        j["n"] = n;
        j["denominator"] = to_string(grid.denominator);
        j["rounding"] = to_string(grid.rounding);
        j["cycles"] = cycles;
        out << j.dump(2) << '\n';
        return;
      }
      out << "N period orbit basin\n";
      for (const auto& c : r.cycles)
        out << n << ' ' << c.period << " {" << join(c.cycle, ",") << "} " << c.basin_size << '\n';
    };
  });

  // dpcycle
  std::uint32_t seeds = 1000;
  std::uint64_t rng_seed = 1;
  auto* dp_cmd = app.add_subcommand("dpcycle", "Eventual cycles of binary64 orbits from random starts");
  dp_cmd->add_option("--seeds", seeds, "number of random starts")->check(CLI::Range(1u, 100000000u));
  dp_cmd->add_option("--rng-seed", rng_seed, "generator seed");
  dp_cmd->add_option("--map", map_text, "logistic or tentpow")->check(CLI::IsMember({"logistic", "tentpow"}));
  auto* dp_ell = dp_cmd->add_option("--ell", ell, "tentpow exponent in [1,2]");
  dp_cmd->add_option("--jobs", jobs, "worker threads (default from GOPKIT_JOBS, else 1)")
      ->check(CLI::Range(1u, 1024u));
  dp_cmd->callback([&] {
    action = [&] {
      MapSpec map = MapSpec::logistic();
      if (map_text == "tentpow") {
        if (dp_ell->count() == 0) throw UsageError("--ell is required for tentpow");
        map = MapSpec::tentpow(ell);
      }
      out << "length least hits\n";
      for (const auto& h : double_precision_cycle(map, seeds, rng_seed, jobs))
        out << h.length << ' ' << std::setprecision(17) << h.least << ' ' << h.hits << '\n';
    };
  });

  // verify
  std::string suite = "formulas";
  std::uint32_t n_max = 6;
  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in cross-checks");
  verify_cmd->add_option("--suite", suite, "formulas, statements or tables")
      ->check(CLI::IsMember({"formulas", "statements", "tables"}));
  verify_cmd->add_option("--n-max", n_max, "largest N checked")->check(CLI::Range(1u, 64u));
  verify_cmd->add_option("--jobs", jobs, "worker threads (default from GOPKIT_JOBS, else 1)")
      ->check(CLI::Range(1u, 1024u));
  verify_cmd->callback([&] {
    action = [&] {
      if (suite == "formulas" && n_max > kCensusGuard)
        throw GuardError("verify --suite formulas sweeps F_N up to --n-max " + std::to_string(n_max) +
                         "; at most " + std::to_string(kCensusGuard) + " is supported");
      const VerifyReport r = suite == "formulas"     ? verify_formulas(n_max, jobs)
                             : suite == "statements" ? verify_statements(n_max, jobs)
                                                     : verify_tables(n_max, jobs);
      std::size_t failed = 0;
      for (const auto& c : r.checks) {
        failed += !c.passed;
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << '\n';
      }
      out << r.suite << ": " << r.checks.size() - failed << "/" << r.checks.size() << " passed\n";
      if (failed) verify_failed = true;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
    return verify_failed ? kExitDomain : kExitOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace gopkit::cli
