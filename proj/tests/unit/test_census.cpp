#include <doctest.h>

#include "../oracle/brute_force.hpp"
#include "gopkit/census.hpp"
#include "gopkit/count.hpp"
#include "gopkit/error.hpp"
#include "gopkit/rigid.hpp"

using namespace gopkit;

namespace {

void check_against_oracle(const GopCensus& c, const std::map<std::vector<std::uint32_t>, std::uint64_t>& naive) {
  REQUIRE(c.distinct() == naive.size());
  BigInt total = 0;
  for (const auto& [orders, count] : naive) {
    CHECK(c.count(Gop(c.n, orders)) == count);
    total += count;
  }
  CHECK(c.total == total);
}

}  // namespace

TEST_CASE("census equals the naive census") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const GopCensus c = census(n);
    check_against_oracle(c, oracle::census(n));
    CHECK(c.total == pow_big(n, n));
  }
}

TEST_CASE("filtered census") {
  const RigidSpec spec({1}, 1);
  const GopCensus c = census(6, [&](std::span<const Point> f) {
    return is_rigid(FunctionTable(std::vector<Point>(f.begin(), f.end())), spec);
  });
  check_against_oracle(c, oracle::census(6, [](const oracle::Images& f) { return oracle::rigid(f, {1}, 1); }));
  CHECK(c.total == 950);
}

TEST_CASE("partitioning and threads do not change the result") {
  const GopCensus reference = census(6);
  for (std::uint32_t parts : {1u, 2u, 3u, 7u, 64u, 1000u})
    for (std::uint32_t jobs : {1u, 2u, 4u}) {
      CensusOptions opts;
      opts.partitions = parts;
      opts.jobs = jobs;
      std::size_t calls = 0;
      opts.progress = [&](std::size_t done, std::size_t total) {
        ++calls;
        CHECK(done <= total);
      };
      const GopCensus c = census_partitioned(6, {}, opts);
      CHECK(c.counts == reference.counts);
      CHECK(c.total == reference.total);
      CHECK(calls >= 1);
    }
}

TEST_CASE("census statistics") {
  const GopCensus c = census(5);
  CHECK(c.distinct() == 31);
  CHECK(c.max_period() == 5);
  CHECK(c.max_modulus() == 5);
  CHECK(c.count(Gop(5, {5})) == 24);
  for (auto it = c.counts.begin(); std::next(it) != c.counts.end(); ++it)
    CHECK(gop_compare(it->first, std::next(it)->first) < 0);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(census(11), GuardError);
  try {
    census(11);
  } catch (const GuardError& e) {
    CHECK(std::string(e.what()).find("--allow-large") != std::string::npos);
  }
  CHECK_THROWS_AS(census(16, {}, true), DomainError);
  CHECK_THROWS_AS(census(0), DomainError);
}

TEST_CASE("census from raw mask counters") {
  std::vector<std::uint64_t> per_mask(8, 0);
  per_mask[Gop(3, {1}).mask()] = 7;
  per_mask[Gop(3, {3}).mask()] = 2;
  const GopCensus c = census_from_masks(3, per_mask);
  CHECK(c.distinct() == 2);
  CHECK(c.total == 9);
  CHECK(c.count(Gop(3, {1, 1})) == 0);
}
