#include <doctest.h>

#include <random>

#include "../oracle/brute_force.hpp"
#include "gopkit/error.hpp"
#include "gopkit/rigid.hpp"

using namespace gopkit;

TEST_CASE("rigid spec validation") {
  CHECK_THROWS_AS(RigidSpec({}, 1), DomainError);
  CHECK(RigidSpec::lr1().window() == 1);
}

TEST_CASE("membership predicate agrees with the naive definition") {
  std::mt19937_64 rng(5);
  const std::vector<std::vector<std::uint32_t>> weights = {{1}, {2, 1}, {20, 9, 5, 2, 1}, {0, 3}, {1, 1, 1}};
  for (int trial = 0; trial < 20000; ++trial) {
    const std::uint32_t n = 1 + rng() % 9;
    std::vector<Point> images(n);
    const std::uint32_t spread = 1 + rng() % n;
    const Point base = static_cast<Point>(rng() % (n - spread + 1));
    for (auto& v : images) v = base + static_cast<Point>(rng() % spread);
    const auto& alphas = weights[rng() % weights.size()];
    const std::uint64_t q = rng() % 40;
    for (bool truncated : {false, true}) {
      const RigidSpec spec(alphas, q, truncated ? WindowBoundary::truncated : WindowBoundary::full);
      REQUIRE(is_rigid(FunctionTable(images), spec) == oracle::rigid(images, alphas, q, truncated));
    }
  }
}

TEST_CASE("pruned search equals the filtered census") {
  const std::vector<std::vector<std::uint32_t>> weights = {{1}, {2, 1}, {3, 1, 1}, {20, 9, 5, 2, 1}};
  for (std::uint32_t n = 1; n <= 6; ++n)
    for (const auto& alphas : weights)
      for (std::uint64_t q : {0ull, 1ull, 2ull, 5ull, 13ull, 40ull})
        for (bool truncated : {false, true}) {
          const RigidSpec spec(alphas, q, truncated ? WindowBoundary::truncated : WindowBoundary::full);
          const GopCensus c = enumerate_rigid(n, spec);
          const auto naive = oracle::census(
              n, [&](const oracle::Images& f) { return oracle::rigid(f, alphas, q, truncated); });
          REQUIRE(c.distinct() == naive.size());
          BigInt total = 0;
          for (const auto& [orders, count] : naive) {
            CHECK(c.count(Gop(n, orders)) == count);
            total += count;
          }
          CHECK(c.total == total);
        }
}

TEST_CASE("threads do not change the search result") {
  const RigidSpec spec({20, 9, 5, 2, 1}, 50);
  const GopCensus one = enumerate_rigid(10, spec);
  RigidOptions opts;
  opts.jobs = 3;
  const GopCensus three = enumerate_rigid(10, spec, opts);
  CHECK(one.counts == three.counts);
  CHECK(one.total == 53210);
}

TEST_CASE("small LR1 censuses") {
  const std::vector<std::uint64_t> totals = {1, 4, 17, 68, 259, 950, 3387, 11814};
  for (std::uint32_t n = 1; n <= totals.size(); ++n) CHECK(enumerate_rigid(n, RigidSpec::lr1()).total == totals[n - 1]);
  const GopCensus c5 = enumerate_rigid(5, RigidSpec::lr1());
  CHECK(c5.count(Gop(5, {1})) == 95);
  CHECK(c5.count(Gop(5, {2})) == 70);
  CHECK(c5.count(Gop(5, {2, 2, 1})) == 1);
}

TEST_CASE("LR1 members only have periods 1 and 2") {
  for (std::uint32_t n = 1; n <= 9; ++n) CHECK(check_lr1_period_theorem(n));
}

TEST_CASE("guard") {
  CHECK_THROWS_AS(enumerate_rigid(17, RigidSpec::lr1()), GuardError);
  CHECK_THROWS_AS(enumerate_rigid(0, RigidSpec::lr1()), DomainError);
}

TEST_CASE("statement report") {
  const StatementReport r = check_statements(9);
  std::map<std::string, std::pair<std::size_t, std::size_t>> seen;
  for (const auto& s : r.summary()) seen[s.statement] = {s.held, s.checked};
  CHECK(seen.at("twos-grow").first == seen.at("twos-grow").second);
  CHECK(seen.at("twos-append-one").first == seen.at("twos-append-one").second);
  CHECK(seen.at("ones-grow-shifted").first == seen.at("ones-grow-shifted").second);
  CHECK(seen.at("twos-split-shifted").first == seen.at("twos-split-shifted").second);
  for (const auto& inst : r.instances) {
    if (inst.statement != "ones-closed-form") continue;
    if (inst.k == 1) CHECK(inst.lhs == 1);
    if (inst.k == 3) CHECK(inst.lhs == 16);
    if (inst.k == 2) CHECK(inst.lhs == (inst.n == 2 ? 2 : 4));
    if (inst.k != 2) CHECK(inst.holds);
  }
}
