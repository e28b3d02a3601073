#include <doctest.h>

#include <cmath>
#include <numeric>

#include "../oracle/brute_force.hpp"
#include "gopkit/error.hpp"
#include "gopkit/maps.hpp"

using namespace gopkit;

namespace {

std::vector<Point> images_of(const FunctionTable& f) { return {f.images().begin(), f.images().end()}; }

const CycleReport* find_cycle(const OrbitReport& r, std::vector<Point> set) {
  std::sort(set.begin(), set.end());
  for (const auto& c : r.cycles) {
    auto s = c.cycle;
    std::sort(s.begin(), s.end());
    if (s == set) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("map specs") {
  CHECK_THROWS_AS(MapSpec::tentpow(0.5), DomainError);
  CHECK_THROWS_AS(MapSpec::tentpow(2.5), DomainError);
  CHECK(MapSpec::logistic()(0.5) == 1.0);
  CHECK(MapSpec::tentpow(1.0)(0.25) == 0.5);
  CHECK(MapSpec::tentpow(2.0)(0.5) == 1.0);
}

TEST_CASE("logistic grids") {
  CHECK(images_of(discretize(MapSpec::logistic(), {9})) == std::vector<Point>{0, 3, 6, 7, 8, 7, 6, 3, 0});
  for (auto d : {Denominator::n, Denominator::n_minus_one})
    for (auto r : {Rounding::floor, Rounding::nearest_half_up, Rounding::nearest_half_down})
      CHECK(images_of(discretize(MapSpec::logistic(), {2, d, r}))[0] == 0);
  for (std::uint32_t n = 2; n <= 3000; n += 37) {
    const FunctionTable f = discretize(MapSpec::logistic(), {n});
    CHECK(images_of(f) == oracle::logistic_floor(n, n - 1));
    CHECK(f(0) == 0);
    CHECK(f(n - 1) == 0);
    CHECK(images_of(discretize(MapSpec::logistic(), {n, Denominator::n})) == oracle::logistic_floor(n, n));
  }
}

TEST_CASE("rounding conventions on exact halves") {
  const auto up = images_of(discretize(MapSpec::logistic(), {7, Denominator::n, Rounding::nearest_half_up}));
  const auto down = images_of(discretize(MapSpec::logistic(), {7, Denominator::n, Rounding::nearest_half_down}));
  const auto floor = images_of(discretize(MapSpec::logistic(), {7, Denominator::n, Rounding::floor}));
  for (std::uint32_t j = 0; j < 7; ++j) {
    const double exact = 4.0 * j * (7 - j) / 7.0;
    CHECK(floor[j] == std::min<std::uint32_t>(6, static_cast<std::uint32_t>(std::floor(exact))));
    CHECK(up[j] == std::min<std::uint32_t>(6, static_cast<std::uint32_t>(std::floor(exact + 0.5))));
    CHECK(down[j] == std::min<std::uint32_t>(6, static_cast<std::uint32_t>(std::ceil(exact - 0.5))));
  }
  // 4*1*(8-1)/8 = 3.5 exactly
  CHECK(images_of(discretize(MapSpec::logistic(), {8, Denominator::n, Rounding::nearest_half_up}))[1] == 4);
  CHECK(images_of(discretize(MapSpec::logistic(), {8, Denominator::n, Rounding::nearest_half_down}))[1] == 3);
}

TEST_CASE("tent map on dyadic grids") {
  for (std::uint32_t k = 1; k <= 10; ++k) {
    const std::uint32_t d = 1u << k;
    const FunctionTable f = discretize(MapSpec::tentpow(1.0), {d + 1});
    for (std::uint32_t j = 0; j <= d; ++j) CHECK(f(j) == (2 * j <= d ? 2 * j : 2 * (d - j)));
  }
}

TEST_CASE("orbit reports") {
  const OrbitReport r9 = orbit_report(MapSpec::logistic(), {9});
  REQUIRE(r9.cycles.size() == 3);
  CHECK(find_cycle(r9, {0})->basin_size == 3);
  CHECK(find_cycle(r9, {3, 7})->basin_size == 4);
  CHECK(find_cycle(r9, {6})->basin_size == 2);

  const OrbitReport r100 = orbit_report(MapSpec::logistic(), {100});
  CHECK(find_cycle(r100, {0})->basin_size == 2);
  CHECK(find_cycle(r100, {74})->basin_size == 2);
  CHECK(find_cycle(r100, {11, 39, 94, 18, 58, 96})->basin_size == 72);
  CHECK(find_cycle(r100, {7, 26, 76, 70, 82, 56, 97})->basin_size == 24);

  const OrbitReport r101 = orbit_report(MapSpec::logistic(), {101});
  CHECK(find_cycle(r101, {19, 61, 95})->basin_size == 96);
  const OrbitReport r2000 = orbit_report(MapSpec::logistic(), {2000});
  REQUIRE(r2000.cycles.size() == 5);
  CHECK(find_cycle(r2000, {3, 11, 43, 168, 615, 1703, 1008, 1998})->basin_size == 1838);
  CHECK(find_cycle(r2000, {376, 1221, 1900})->basin_size == 6);
  const OrbitReport r2001 = orbit_report(MapSpec::logistic(), {2001});
  std::vector<std::uint32_t> periods;
  for (const auto& c : r2001.cycles) periods.push_back(c.period);
  std::sort(periods.begin(), periods.end());
  CHECK(periods == std::vector<std::uint32_t>{1, 1, 2, 8, 18, 25});

  for (std::uint32_t n : {9u, 10u, 11u, 99u, 100u, 101u, 1999u, 2000u, 2001u, 4096u}) {
    const OrbitReport r = orbit_report(MapSpec::logistic(), {n});
    std::size_t total = 0;
    for (const auto& c : r.cycles) {
      total += c.basin_size;
      CHECK(c.period == c.cycle.size());
    }
    CHECK(total == n);
  }
}

TEST_CASE("binary64 cycles") {
  const MapSpec f = MapSpec::logistic();
  CHECK(float_cycle(f, 0.0).length == 1);
  CHECK(float_cycle(f, 0.5).length == 1);
  CHECK(float_cycle(f, 0.5).least == 0.0);
  CHECK(float_cycle(f, 0.75).length == 1);  // 0.75 is the nonzero fixed point
  CHECK_THROWS_AS(float_cycle(f, std::nan("")), DomainError);
  CHECK(float_cycle(MapSpec::tentpow(1.0), 0.3).length == 1);  // binary64 tent orbits collapse to 0

  const auto a = double_precision_cycle(MapSpec::logistic(), 4, 42, 1);
  const auto b = double_precision_cycle(MapSpec::logistic(), 4, 42, 3);
  REQUIRE(a.size() == b.size());
  std::uint64_t hits = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].length == b[i].length);
    CHECK(a[i].least == b[i].least);
    CHECK(a[i].hits == b[i].hits);
    hits += a[i].hits;
  }
  CHECK(hits == 4);
}
