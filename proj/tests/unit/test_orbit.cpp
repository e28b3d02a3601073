#include <doctest.h>

#include <random>

#include "../oracle/brute_force.hpp"
#include "gopkit/error.hpp"
#include "gopkit/orbit.hpp"

using namespace gopkit;

TEST_CASE("single point") {
  const OrbitStructure s = analyze(FunctionTable({0}));
  REQUIRE(s.components.size() == 1);
  CHECK(s.components[0].period == 1);
  CHECK_FALSE(s.components[0].attractive);
}

TEST_CASE("cycle listed from its least element in iteration order") {
  const OrbitStructure s = analyze(parse_function("11:6,3,2,5,8,10,9,4,7,6,5"));
  REQUIRE(s.components.size() == 4);
  CHECK(s.components[3].cycle == std::vector<Point>{4, 8, 7});
  CHECK(s.components[1].basin == std::vector<Point>{1, 3, 5, 10});
  CHECK(s.component_of(10).representative == 1);
  CHECK(order_of(s.function, 7) == 3);
  CHECK_THROWS_AS(order_of(s.function, 11), DomainError);
}

TEST_CASE("agrees with simulation on random functions") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint32_t n = 1 + rng() % 40;
    std::vector<Point> images(n);
    for (auto& v : images) v = static_cast<Point>(rng() % n);
    const OrbitStructure s = analyze(FunctionTable(images));
    const auto naive = oracle::components(images);
    REQUIRE(s.components.size() == naive.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < naive.size(); ++i) {
      const Component& c = s.components[i];
      CHECK(c.representative == naive[i].least);
      CHECK(std::set<Point>(c.cycle.begin(), c.cycle.end()) == naive[i].cycle);
      CHECK(std::set<Point>(c.basin.begin(), c.basin.end()) == naive[i].members);
      CHECK(c.attractive == (naive[i].members.size() > naive[i].cycle.size()));
      CHECK(c.cycle.front() == *naive[i].cycle.begin());
      for (std::size_t k = 0; k < c.cycle.size(); ++k)
        CHECK(images[c.cycle[k]] == c.cycle[(k + 1) % c.cycle.size()]);
      total += c.basin.size();
    }
    CHECK(total == n);
    for (Point x = 0; x < n; ++x) CHECK(order_of(s.function, x) == s.component_of(x).period);
  }
}

TEST_CASE("long chain does not recurse") {
  std::vector<Point> images(200000);
  for (Point i = 0; i + 1 < images.size(); ++i) images[i] = i + 1;
  images.back() = images.size() - 1;
  const OrbitStructure s = analyze(FunctionTable(images));
  REQUIRE(s.components.size() == 1);
  CHECK(s.components[0].period == 1);
  CHECK(s.components[0].basin.size() == images.size());
}
