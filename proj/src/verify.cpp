#include "gopkit/verify.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "gopkit/census.hpp"
#include "gopkit/count.hpp"
#include "gopkit/gop.hpp"
#include "gopkit/maps.hpp"
#include "gopkit/orbit.hpp"
#include "gopkit/rigid.hpp"
#include "reference_data.hpp"

namespace gopkit {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.passed; });
}

namespace {

std::string join_points(const std::vector<Point>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

void add(VerifyReport& r, std::string name, bool ok, std::string detail = {}) {
  r.checks.push_back({std::move(name), ok, std::move(detail)});
}

std::string n_label(const char* what, std::uint32_t n) {
  return std::string(what) + " n=" + std::to_string(n);
}

}  // namespace

VerifyReport verify_formulas(std::uint32_t n_max, std::uint32_t jobs) {
  VerifyReport report{"formulas", {}};
  CensusOptions opts;
  opts.jobs = jobs;
  opts.partitions = std::max<std::uint32_t>(jobs, 1) * 4;

  for (std::uint32_t n = 1; n <= n_max; ++n) {
    const BigInt nn = pow_big(n, n);

    if (n <= kCensusGuard) {
      const GopCensus c = census_partitioned(n, {}, opts);
      std::size_t bad = 0;
      std::string first;
      for (const Gop& g : all_gops(n)) {
        if (c.count(g) != count_gop(g)) {
          if (bad++ == 0) first = to_literal(g) + " census " + to_decimal(c.count(g)) +
                                  " formula " + to_decimal(count_gop(g));
        }
      }
      add(report, n_label("census = class formula", n), bad == 0,
          bad == 0 ? std::to_string(c.distinct()) + " gops" : std::to_string(bad) + " mismatches, e.g. " + first);
      add(report, n_label("census total = n^n", n), c.total == nn, to_decimal(c.total));
    }

    const auto gops = all_gops(n);
    add(report, n_label("gop count = 2^n - 1", n), gops.size() == (std::size_t{1} << n) - 1,
        std::to_string(gops.size()));
    add(report, n_label("sum of class sizes = n^n", n), total_over_all_gops(n) == nn);

    bool closed_ok = true;
    for (std::uint32_t k = 1; k <= n; ++k) {
      closed_ok &= count_fixed_points_only(n, k) == count_gop(Gop(n, std::vector<std::uint32_t>(k, 1)));
      closed_ok &= count_single_cycle(n, k) == count_gop(Gop(n, {k}));
      for (std::uint32_t q = 1; k + q <= n; ++q)
        closed_ok &= count_two_cycles(n, k, q) == count_gop(Gop(n, {k, q}));
    }
    add(report, n_label("special-case formulas", n), closed_ok);

    bool tail_ok = true;
    for (std::uint32_t k = 1; k + 1 <= n; ++k)
      tail_ok &= count_gop(Gop(n, {k, 1})) == count_gop(Gop(n, {k + 1}));
    add(report, n_label("#[k,1] = #[k+1]", n), tail_ok);

    if (n <= 10) {
      std::size_t checked = 0, bad = 0;
      for (const Gop& g : gops)
        for (std::size_t j = 1; j <= g.length(); ++j)
          for (std::uint32_t h = 1; h < g.orders()[j - 1]; ++h) {
            ++checked;
            if (!check_split_identity(g, j, h)) ++bad;
          }
      add(report, n_label("split identity", n), bad == 0,
          std::to_string(checked - bad) + "/" + std::to_string(checked));
    }
  }
  return report;
}

VerifyReport verify_statements(std::uint32_t n_max, std::uint32_t jobs) {
  VerifyReport report{"statements", {}};
  RigidOptions opts;
  opts.jobs = jobs;
  const StatementReport sr = check_statements(n_max, opts);
  for (const auto& s : sr.summary()) {
    std::string detail = std::to_string(s.held) + "/" + std::to_string(s.checked);
    for (const auto& inst : sr.instances) {
      if (inst.statement != s.statement || inst.holds) continue;
      detail += ", first failure n=" + std::to_string(inst.n) + " k=" + std::to_string(inst.k) +
                ": " + to_decimal(inst.lhs) + " != " + to_decimal(inst.rhs);
      break;
    }
    add(report, s.statement, s.held == s.checked, detail);
  }
  return report;
}

VerifyReport verify_tables(std::uint32_t n_max, std::uint32_t jobs) {
  VerifyReport report{"tables", {}};

  for (const auto& ex : reference::orbit_examples()) {
    const FunctionTable f = parse_function(ex.function);
    const OrbitStructure s = analyze(f);
    bool ok = to_literal(gop_of(f)) == ex.gop && s.components.size() == ex.rows.size();
    for (std::size_t i = 0; ok && i < ex.rows.size(); ++i) {
      const auto& c = s.components[i];
      ok = c.cycle == ex.rows[i].cycle && c.basin == ex.rows[i].component &&
           c.attractive == ex.rows[i].attractive;
    }
    add(report, std::string("orbit example ") + ex.function, ok, to_literal(gop_of(f)));
  }

  {
    const FunctionTable t = threshold(parse_gop(reference::kThresholdGop));
    const std::string r = to_decimal(rank(t));
    add(report, "threshold function", to_literal(t) == reference::kThresholdFunction, to_literal(t));
    add(report, "threshold rank", r == reference::kThresholdRank, r);
  }

  {
    const std::string small = to_decimal(count_gop(parse_gop(reference::kSmallCardinalGop)));
    add(report, std::string("cardinal ") + reference::kSmallCardinalGop,
        small == reference::kSmallCardinal, small);
    const BigInt big = count_gop(parse_gop(reference::kLargeCardinalGop));
    add(report, std::string("cardinal ") + reference::kLargeCardinalGop + " printed digits",
        to_decimal(big) == reference::kLargeCardinalPrinted,
        "computed " + to_decimal(big) + " (" + to_scientific(big) + "), printed " +
            reference::kLargeCardinalPrinted + " (" + reference::kLargeCardinalApprox + ")");
  }

  {
    const auto gops = all_gops(5);
    const auto& expected = reference::ordered_gops_5();
    bool ok = gops.size() == expected.size();
    for (std::size_t i = 0; ok && i < gops.size(); ++i) ok = orders_literal(gops[i]) == expected[i];
    add(report, "pseudo-decimal order n=5", ok);
  }

  RigidOptions ropts;
  ropts.jobs = jobs;
  for (const auto& t : reference::lr1_tables()) {
    if (t.n > n_max) continue;
    const GopCensus c = enumerate_rigid(t.n, RigidSpec::lr1(), ropts);
    std::istringstream rows(t.rows);
    std::string item, mismatches;
    std::size_t listed = 0;
    while (rows >> item) {
      const auto colon = item.find(':');
      const Gop g = parse_gop(item.substr(0, colon) + "@" + std::to_string(t.n));
      const BigInt printed(item.substr(colon + 1));
      ++listed;
      if (c.count(g) != printed)
        mismatches += " " + orders_literal(g, true) + " computed " + to_decimal(c.count(g)) +
                      " printed " + to_decimal(printed) + ";";
    }
    const bool rows_ok = mismatches.empty() && listed == c.distinct();
    add(report, n_label("LR1 classes", t.n), rows_ok,
        rows_ok ? std::to_string(listed) + " gops" : std::to_string(listed) + " listed, " +
                                                           std::to_string(c.distinct()) + " computed;" + mismatches);
    add(report, n_label("LR1 total", t.n), c.total == t.printed_total,
        "computed " + to_decimal(c.total) + " printed " + std::to_string(t.printed_total));
  }

  for (const auto& row : reference::weighted_rows()) {
    if (row.q > 66) continue;
    const GopCensus c = enumerate_rigid(
        reference::kWeightedN, RigidSpec(reference::weighted_alphas(), row.q), ropts);
    const bool ok = c.distinct() == row.gops && c.total == row.functions &&
                    c.max_period() == row.max_period && c.max_modulus() == row.max_modulus;
    std::ostringstream d;
    d << "gops " << c.distinct() << " functions " << c.total << " max period "
      << c.max_period() << " max modulus " << c.max_modulus();
    add(report, "weighted rigid q=" + std::to_string(row.q), ok, d.str());
  }

  std::uint32_t current = 0;
  std::optional<OrbitReport> orbits;
  for (const auto& row : reference::logistic_rows()) {
    if (row.n != current) {
      current = row.n;
      orbits.emplace(orbit_report(MapSpec::logistic(), GridSpec{row.n}));
    }
    const FunctionTable& f = orbits->structure.function;
    const std::set<Point> printed(row.orbit.begin(), row.orbit.end());
    const CycleReport* match = nullptr;
    for (const auto& cyc : orbits->cycles) {
      if (row.truncated) {
        if (cyc.period != row.period_label) continue;
        Point x = row.orbit.front();
        bool follows = std::count(cyc.cycle.begin(), cyc.cycle.end(), x) == 1;
        for (std::size_t i = 1; follows && i < row.orbit.size(); ++i) follows = (x = f(x)) == row.orbit[i];
        if (follows) match = &cyc;
      } else if (std::set<Point>(cyc.cycle.begin(), cyc.cycle.end()) == printed) {
        match = &cyc;
      }
    }
    const std::string name = "logistic n=" + std::to_string(row.n) + " orbit " + join_points(row.orbit);
    if (!match) {
      add(report, name, false, "no computed cycle with this orbit");
      continue;
    }
    add(report, name, match->basin_size == row.basin,
        "period " + std::to_string(match->period) + " basin computed " +
            std::to_string(match->basin_size) + " printed " + std::to_string(row.basin));
  }
  return report;
}

}  // namespace gopkit
