#include <doctest.h>

#include "../oracle/brute_force.hpp"
#include "gopkit/count.hpp"
#include "gopkit/error.hpp"

using namespace gopkit;

TEST_CASE("known cardinals") {
  CHECK(count_gop(parse_gop("[2,2,1,3]@11")) == 11180400);
  CHECK(count_gop(parse_gop("[1]@1")) == 1);
  CHECK(count_gop(parse_gop("[1]@2")) == 2);
  CHECK(count_gop(parse_gop("[1,1]@2")) == 1);
  CHECK(count_gop(parse_gop("[2]@2")) == 1);
  CHECK(to_decimal(count_gop(parse_gop("[5,2,10,8,15,2,3]@50"))) ==
        "124065425615280788411509764670729431180399083520000000000000000");
  CHECK(to_scientific(count_gop(parse_gop("[5,2,10,8,15,2,3]@50"))) == "1.24e62");
}

TEST_CASE("class sizes match the exhaustive census") {
  for (std::uint32_t n = 1; n <= 6; ++n) {
    const auto naive = oracle::census(n);
    CHECK(naive.size() == (std::size_t{1} << n) - 1);
    for (const auto& [orders, c] : naive) CHECK(count_gop(Gop(n, orders)) == c);
  }
}

TEST_CASE("special cases agree with the general formula") {
  for (std::uint32_t n = 1; n <= 14; ++n)
    for (std::uint32_t k = 1; k <= n; ++k) {
      CHECK(count_fixed_points_only(n, k) == count_gop(Gop(n, std::vector<std::uint32_t>(k, 1))));
      CHECK(count_single_cycle(n, k) == count_gop(Gop(n, {k})));
      for (std::uint32_t q = 1; k + q <= n; ++q) CHECK(count_two_cycles(n, k, q) == count_gop(Gop(n, {k, q})));
    }
  CHECK_THROWS_AS(count_fixed_points_only(3, 4), DomainError);
  CHECK_THROWS_AS(count_single_cycle(3, 0), DomainError);
  CHECK_THROWS_AS(count_two_cycles(3, 2, 2), DomainError);
}

TEST_CASE("appending a fixed point equals growing the cycle") {
  for (std::uint32_t n = 2; n <= 12; ++n)
    for (std::uint32_t k = 1; k + 1 <= n; ++k) CHECK(count_gop(Gop(n, {k, 1})) == count_gop(Gop(n, {k + 1})));
}

TEST_CASE("split identity") {
  for (std::uint32_t n = 2; n <= 10; ++n)
    for (const Gop& g : all_gops(n))
      for (std::size_t j = 1; j <= g.length(); ++j)
        for (std::uint32_t h = 1; h < g.orders()[j - 1]; ++h) REQUIRE(check_split_identity(g, j, h));
  CHECK_THROWS_AS(check_split_identity(Gop(4, {1, 2}), 1, 1), DomainError);
  CHECK_THROWS_AS(check_split_identity(Gop(4, {1, 2}), 3, 1), DomainError);
  CHECK_THROWS_AS(check_split_identity(Gop(4, {1, 2}), 2, 2), DomainError);
}

TEST_CASE("class sizes partition F_N") {
  for (std::uint32_t n = 1; n <= 18; ++n) CHECK(total_over_all_gops(n) == pow_big(n, n));
  CHECK(total_over_all_gops(40) == pow_big(40, 40));
}
