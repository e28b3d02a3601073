#include <doctest.h>

#include "gopkit/error.hpp"
#include "gopkit/function_table.hpp"

using namespace gopkit;

TEST_CASE("construction validates images") {
  CHECK_THROWS_AS(FunctionTable({}), DomainError);
  CHECK_THROWS_AS(FunctionTable({0, 2}), DomainError);
  const FunctionTable f({1, 0, 0});
  CHECK(f.size() == 3);
  CHECK(f(0) == 1);
  CHECK(f.at(2) == 0);
  CHECK_THROWS_AS(f.at(3), DomainError);
  CHECK(FunctionTable::identity(4) == FunctionTable({0, 1, 2, 3}));
  CHECK(FunctionTable::constant(3, 2) == FunctionTable({2, 2, 2}));
}

TEST_CASE("literal round trip") {
  const FunctionTable f = parse_function("11:6,3,2,5,8,10,9,4,7,6,5");
  CHECK(f.size() == 11);
  CHECK(f(5) == 10);
  CHECK(to_literal(f) == "11:6,3,2,5,8,10,9,4,7,6,5");
  CHECK(parse_function(" 3 : 1 ,\t0, 0 \n") == FunctionTable({1, 0, 0}));
  CHECK(parse_function("1:0") == FunctionTable({0}));
}

TEST_CASE("literal errors carry a position") {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_function(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  CHECK(position_of("3:1,0") == 5);       // too few images
  CHECK(position_of("3:1,0,0,1") == 8);   // too many
  CHECK(position_of("3:1,x,0") == 4);
  CHECK(position_of("3;1,0,0") == 1);
  CHECK(position_of("") == 0);
  CHECK(position_of("99999999999:0") != std::string::npos);
  CHECK(position_of("3:1,0,3") == 6);     // image out of range
  CHECK(position_of("0:") == 0);
}

TEST_CASE("iterate folds long runs onto the cycle") {
  const FunctionTable f({1, 2, 3, 1});  // 0 -> 1 -> 2 -> 3 -> 1
  CHECK(iterate(f, 0, 0) == 0);
  CHECK(iterate(f, 0, 1) == 1);
  CHECK(iterate(f, 0, 4) == 1);
  CHECK(iterate(f, 0, 3000000000000ULL) == iterate(f, 0, 3000000000000ULL % 3 + 3));
  Point x = 0;
  for (int i = 0; i < 100; ++i) {
    CHECK(iterate(f, 0, i) == x);
    x = f(x);
  }
}
