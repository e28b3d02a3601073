#pragma once

// Reference values as printed, typos included. Callers decide how a mismatch against a
// computed value is reported.

#include <cstdint>
#include <vector>

#include "gopkit/function_table.hpp"

namespace gopkit::reference {

struct ComponentRow {
  std::vector<Point> cycle;      ///< in iteration order, from the least element
  std::vector<Point> component;  ///< ascending
  bool attractive = false;
};

struct OrbitExample {
  const char* function;
  const char* gop;
  std::vector<ComponentRow> rows;  ///< by least element of the component
};

inline const std::vector<OrbitExample>& orbit_examples() {
  static const std::vector<OrbitExample> examples = {
      {"11:6,3,2,5,8,10,9,4,7,6,5",
       "[2,2,1,3]@11",
       {{{6, 9}, {0, 6, 9}, true},
        {{5, 10}, {1, 3, 5, 10}, true},
        {{2}, {2}, false},
        {{4, 8, 7}, {4, 7, 8}, false}}},
      {"11:4,2,7,3,8,10,5,2,4,1,6",
       "[2,2,1,3]@11",
       {{{4, 8}, {0, 4, 8}, true},
        {{2, 7}, {1, 2, 7, 9}, true},
        {{3}, {3}, false},
        {{5, 10, 6}, {5, 6, 10}, false}}},
      {"11:9,6,4,7,10,3,1,5,2,0,10",
       "[2,2,1,3]@11",
       {{{0, 9}, {0, 9}, false},
        {{1, 6}, {1, 6}, false},
        {{10}, {2, 4, 8, 10}, true},
        {{3, 7, 5}, {3, 5, 7}, false}}},
      {"8:1,0,0,3,5,6,7,4",
       "[2,1,4]@8",
       {{{0, 1}, {0, 1, 2}, true},
        {{3}, {3}, false},
        {{4, 5, 6, 7}, {4, 5, 6, 7}, false}}},
  };
  return examples;
}

inline constexpr const char* kThresholdGop = "[2,2,1,3]@11";
inline constexpr const char* kThresholdFunction = "11:1,0,0,0,0,6,5,7,9,10,8";
inline constexpr const char* kThresholdRank = "25938474637";

inline constexpr const char* kSmallCardinalGop = "[2,2,1,3]@11";
inline constexpr const char* kSmallCardinal = "11180400";

inline constexpr const char* kLargeCardinalGop = "[5,2,10,8,15,2,3]@50";
inline constexpr const char* kLargeCardinalPrinted =
    "29775702147667389218762343520975006348329578044480000000000000000";
inline constexpr const char* kLargeCardinalApprox = "2.98e63";

/// All gops of F_5 in pseudo-decimal order.
inline const std::vector<const char*>& ordered_gops_5() {
  static const std::vector<const char*> list = {
      "[1]",       "[1,1]",     "[1,1,1]",   "[1,2]",     "[1,1,1,1]", "[1,1,2]",
      "[1,2,1]",   "[1,3]",     "[1,1,1,1,1]", "[1,1,1,2]", "[1,1,2,1]", "[1,1,3]",
      "[1,2,1,1]", "[1,2,2]",   "[1,3,1]",   "[1,4]",     "[2]",       "[2,1]",
      "[2,1,1]",   "[2,2]",     "[2,1,1,1]", "[2,1,2]",   "[2,2,1]",   "[2,3]",
      "[3]",       "[3,1]",     "[3,1,1]",   "[3,2]",     "[4]",       "[4,1]",
      "[5]"};
  return list;
}

/// Censuses of LR_{1,N}: printed total and "gop:count" pairs separated by spaces.
struct Lr1Table {
  std::uint32_t n;
  std::uint64_t printed_total;
  const char* rows;
};

inline const std::vector<Lr1Table>& lr1_tables() {
  static const std::vector<Lr1Table> tables = {
    {1, 1, "[1]:1"},
    {2, 4, "[1]:2 [1~2]:1 [2]:1"},
    {3, 17, "[1]:7 [1~2]:4 [1~3]:1 [2]:4 [2,1]:1"},
    {4, 68, "[1]:26 [1~2]:14 [1~3]:4 [1~4]:1 [2]:18 [2,1]:3 [1,2]:1 [2~2]:1"},
    {5, 259, "[1]:95 [1~2]:50 [1~3]:16 [1~4]:4 [1~5]:1 [2]:70 [2,1]:12 [1,2]:6 [2~2]:4 [2~2,1]:1"},
    {6, 950, "[1]:340 [1~2]:174 [1~3]:58 [1~4]:16 [1~5]:4 [1~6]:1 [2]:264 [2,1]:45 [1,2]:25 [2~2]:18 [2~2,1]:4 [2~3]:1"},
    {7, 387, "[1]:1193 [1~2]:600 [1~3]:204 [1~4]:60 [1~5]:16 [1~6]:4 [1~7]:1 [2]:952 [2,1]:166 [1,2]:98 [2~2]:70 [2~2,1]:17 [1,2~2]:1 [2~3]:4 [2~3,1]:1"},
    {8, 11814, "[1]:4116 [1~2]:2038 [1~3]:700 [1~4]:214 [1~5]:60 [1~6]:16 [1~7]:4 [1~8]:1 [2]:3356 [2,1]:590 [1,2]:362 [2~2]:264 [2~2,1]:62 [1,2~2]:6 [2,1,2]:2 [2~3]:18 [2~3,1]:4 [2~4]:1"},
    {9, 40503, "[1]:14001 [1~2]:6852 [1~3]:2366 [1~4]:742 [1~5]:216 [1~6]:60 [1~7]:16 [1~8]:4 [1~9]:1 [2]:11580 [2,1]:2062 [1,2]:1294 [2~2]:952 [2~2,1]:222 [1,2~2]:28 [2,1,2]:14 [2~3]:70 [2~3,1]:18 [2~4]:4 [2~4,1]:1"},
    {10, 136946, "[1]:47064 [1~2]:22806 [1~3]:7896 [1~4]:2520 [1~5]:754 [1~6]:216 [1~7]:60 [1~8]:16 [1~9]:4 [1~10]:1 [2]:39364 [2,1]:7072 [1,2]:4508 [2~2]:3356 [2~2,1]:770 [1,2~2]:113 [2,1,2]:69 [2~3]:264 [2~3,1]:69 [1,2~3]:1 [2~4]:18 [2~4,1]:4 [2~5]:1"},
    {11, 457795, "[1]:156629 [1~2]:75292 [1~3]:26098 [1~4]:8434 [1~5]:2756 [1~6]:756 [1~7]:216 [1~8]:60 [1~9]:16 [1~10]:4 [1~11]:1 [2]:132104 [2,1]:23941 [1,2]:15423 [2~2]:11580 [2~2,1]:2634 [1,2~2]:429 [2,1,2]:293 [2~3]:952 [2~3,1]:255 [1,2~3]:7 [2,1,2~2]:2 [2~4]:70 [2~4,1]:18 [2~5]:4 [2~5,1]:1"},
    {12, 1515926, "[1]:516844 [1~2]:246762 [1~3]:85556 [1~4]:27904 [1~5]:8658 [1~6]:2590 [1~7]:756 [1~8]:216 [1~9]:60 [1~10]:16 [1~11]:4 [1~12]:1 [2]:438846 [2,1]:80108 [1,2]:51996 [2~2]:39364 [2~2,1]:8883 [1,2~2]:1555 [2,1,2]:1142 [2~3]:3356 [2~3,1]:899 [1,2~3]:35 [2,1,2~2]:16 [2~2,1,2]:2 [2~4]:264 [2~4,1]:70 [2~5]:18 [2~5,1]:4 [2~6]:1"},
    {13, 4979777, "[1]:1693073 [1~2]:803706 [1~3]:278580 [1~4]:91488 [1~5]:28738 [1~6]:8730 [1~7]:2592 [1~8]:756 [1~9]:216 [1~10]:60 [1~11]:16 [1~12]:4 [1~13]:1 [2]:1445258 [2,1]:265548 [1,2]:173298 [2~2]:132104 [2~2,1]:29659 [1,2~2]:5478 [2,1,2]:4227 [2~3]:11580 [2~3,1]:3098 [1,2~3]:152 [2,1,2~2]:86 [2~2,1,2]:20 [2~4]:952 [2~4,1]:263 [1,2~4]:1 [2~5]:70 [2~5,1]:18 [2~6]:4 [2~6,1]:1"},
    {14, 16246924, "[1]:5511218 [1~2]:2603258 [1~3]:901802 [1~4]:297728 [1~5]:94440 [1~6]:29050 [1~7]:8746 [1~8]:2592 [1~9]:756 [1~10]:216 [1~11]:60 [1~12]:16 [1~13]:4 [1~14]:1 [2]:4725220 [2,1]:873149 [1,2]:572109 [2~2]:438846 [2~2,1]:98135 [1,2~2]:18873 [2,1,2]:15096 [2~3]:39364 [2~3,1]:10460 [1,2~3]:605 [2,1,2~2]:389 [2~2,1,2]:126 [2~4]:3356 [2~4,1]:942 [1,2~4]:8 [2,1,2~3]:2 [2~5]:264 [2~5,1]:70 [2~6]:18 [2~6,1]:4 [2~7]:1"},
    {15, 52694573, "[1]:17841247 [1~2]:8391360 [1~3]:2904592 [1~4]:962888 [1~5]:307848 [1~6]:95676 [1~7]:29140 [1~8]:8748 [1~9]:2592 [1~10]:756 [1~11]:216 [1~12]:60 [1~13]:16 [1~14]:4 [1~15]:1 [2]:15352392 [2,1]:2851350 [1,2]:1873870 [2~2]:1445258 [2~2,1]:322310 [1,2~2]:63967 [2,1,2]:52569 [2~3]:132104 [2~3,1]:34845 [1,2~3]:2282 [2,1,2~2]:1596 [2~2,1,2]:641 [2~4]:11580 [2~4,1]:3292 [1,2~4]:44 [2,1,2~3]:18 [2~2,1,2~2]:2 [2~5]:952 [2~5,1]:264 [2~6]:70 [2~6,1]:18 [2~7]:4 [2~7,1]:1"},
    {16, 170028792, "[1]:57477542 [1~2]:26932398 [1~3]:9314088 [1~4]:3097650 [1~5]:996764 [1~6]:312456 [1~7]:96096 [1~8]:29158 [1~9]:8748 [1~10]:2592 [1~11]:756 [1~12]:216 [1~13]:60 [1~14]:16 [1~15]:4 [1~16]:1 [2]:49610818 [2,1]:9255822 [1,2]:6096570 [2~2]:4725220 [2~2,1]:1051686 [1,2~2]:213975 [2,1,2]:179597 [2~3]:438846 [2~3,1]:114798 [1,2~3]:8284 [2,1,2~2]:6146 [2~2,1,2]:2876 [2~4]:39364 [2~4,1]:11246 [1,2~4]:204 [2,1,2~3]:106 [2~2,1,2~2]:22 [2~3,1,2]:2 [2~5]:3356 [2~5,1]:951 [1,2~5]:1 [2~6]:264 [2~6,1]:70 [2~7]:18 [2~7,1]:4 [2~8]:1"},
  };
  return tables;
}

/// LR_{(20,9,5,2,1),q,10}.
inline const std::vector<std::uint32_t>& weighted_alphas() {
  static const std::vector<std::uint32_t> alphas = {20, 9, 5, 2, 1};
  return alphas;
}
inline constexpr std::uint32_t kWeightedN = 10;

struct WeightedRow {
  std::uint64_t q;
  std::uint32_t max_period;
  std::uint32_t max_modulus;
  std::uint64_t gops;
  std::uint64_t functions;
};

inline const std::vector<WeightedRow>& weighted_rows() {
  static const std::vector<WeightedRow> rows = {
    {20, 1, 1, 1, 10},
    {26, 2, 2, 3, 82},
    {44, 2, 3, 6, 21764},
    {49, 3, 3, 7, 48112},
    {50, 3, 3, 7, 53210},
    {56, 3, 4, 9, 208692},
    {59, 4, 4, 15, 330800},
    {63, 4, 5, 19, 626890},
    {66, 4, 10, 37, 952228},
    {67, 4, 10, 46, 1064316},
    {72, 5, 10, 50, 1630018},
    {74, 6, 10, 60, 1816826},
    {76, 6, 10, 61, 2152450},
    {77, 6, 10, 88, 2416368},
    {78, 6, 10, 91, 2762434},
    {79, 6, 10, 97, 3188080},
    {80, 6, 10, 99, 3735666},
    {84, 6, 10, 100, 5876324},
    {85, 6, 10, 103, 6473288},
    {87, 6, 10, 105, 7851728},
    {88, 7, 10, 121, 8644178},
    {89, 8, 10, 129, 9521920},
    {91, 8, 10, 136, 11414556},
    {92, 8, 10, 165, 12454440},
    {94, 8, 10, 175, 14756058},
    {95, 8, 10, 177, 16077780},
    {96, 8, 10, 184, 17208654},
    {97, 8, 10, 185, 18369854},
    {98, 8, 10, 188, 19585746},
    {100, 8, 10, 192, 22083852},
    {101, 8, 10, 199, 23584452},
    {102, 8, 10, 204, 25513892},
    {103, 8, 10, 244, 27912772},
    {104, 8, 10, 304, 30560238},
    {105, 9, 10, 333, 33516466},
    {106, 9, 10, 380, 36682960},
    {107, 9, 10, 424, 40004280},
    {108, 10, 10, 491, 43685352},
    {109, 10, 10, 517, 47655856},
    {110, 10, 10, 529, 51785410},
    {111, 10, 10, 562, 55907120},
    {112, 10, 10, 583, 60341276},
    {113, 10, 10, 612, 64930790},
    {114, 10, 10, 647, 69766178},
    {115, 10, 10, 706, 74989752},
    {116, 10, 10, 747, 80087120},
    {117, 10, 10, 791, 85570272},
    {118, 10, 10, 820, 91206218},
    {119, 10, 10, 836, 97040288},
    {120, 10, 10, 852, 103121916},
    {121, 10, 10, 872, 109650464},
    {122, 10, 10, 896, 116345296},
    {123, 10, 10, 919, 123241156},
    {124, 10, 10, 924, 130360938},
    {125, 10, 10, 928, 137636628},
    {126, 10, 10, 930, 145536068},
    {127, 10, 10, 932, 154370862},
    {128, 10, 10, 938, 164145928},
    {129, 10, 10, 960, 174942026},
    {130, 10, 10, 986, 186438038},
    {131, 10, 10, 1006, 198594118},
    {132, 10, 10, 1013, 211550402},
    {133, 10, 10, 1015, 225324700},
    {134, 10, 10, 1021, 239976118},
    {135, 10, 10, 1022, 255106866},
    {137, 10, 10, 1023, 286726234},
    {142, 10, 10, 1023, 374355356},
  };
  return rows;
}

/// Discretized logistic map orbits. Truncated rows list only the first printed
/// elements of the orbit.
struct LogisticRow {
  std::uint32_t n;
  std::uint32_t period_label;
  std::vector<Point> orbit;
  bool truncated;
  std::uint64_t basin;
};

inline const std::vector<LogisticRow>& logistic_rows() {
  static const std::vector<LogisticRow> rows = {
      {9, 1, {0}, false, 3},
      {9, 1, {6}, false, 2},
      {9, 1, {3, 7}, false, 4},
      {10, 1, {0}, false, 2},
      {10, 2, {3, 8}, false, 8},
      {11, 1, {0}, false, 3},
      {11, 4, {3, 8, 6, 9}, false, 8},
      {99, 1, {0}, false, 3},
      {99, 10, {3, 11, 39, 93, 18, 58, 94, 15, 50, 97}, false, 96},
      {100, 1, {0}, false, 2},
      {100, 1, {74}, false, 2},
      {100, 6, {11, 39, 94, 18, 58, 96}, false, 72},
      {100, 7, {7, 26, 76, 70, 82, 56, 97}, false, 24},
      {101, 1, {0}, false, 3},
      {101, 1, {75}, false, 2},
      {101, 1, {16, 61, 95}, false, 96},
      {1999, 1, {0}, false, 3},
      {1999, 4, {554, 1601, 1272, 1848}, false, 990},
      {1999, 8, {3, 11, 43, 168, 615, 1702, 1008, 1997}, false, 1006},
      {2000, 1, {0}, false, 2},
      {2000, 1, {1499}, false, 14},
      {2000, 2, {691, 1808}, false, 138},
      {2000, 3, {276, 1221, 1900}, false, 6},
      {2000, 8, {3, 11, 43, 168, 615, 1703, 1008, 1998}, false, 1840},
      {2001, 1, {0}, false, 5},
      {2001, 1, {1500}, false, 34},
      {2001, 2, {691, 1809}, false, 92},
      {2001, 8, {3, 11, 43, 168, 615, 1703, 1011, 1999}, false, 608},
      {2001, 18, {35, 137, 510, 1519, 1461, 1574}, true, 263},
      {2001, 25, {27, 106, 401, 1282, 1840, 588}, true, 1262},
  };
  return rows;
}

}  // namespace gopkit::reference
