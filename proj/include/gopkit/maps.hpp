#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gopkit/function_table.hpp"
#include "gopkit/orbit.hpp"

namespace gopkit {

enum class MapKind { logistic, tentpow };

/// A real map of [0,1]: the logistic map 4x(1-x) or 1 - |1-2x|^ell, 1 <= ell <= 2.
struct MapSpec {
  MapKind kind = MapKind::logistic;
  std::optional<double> ell;  ///< present iff kind == tentpow

  static MapSpec logistic() { return {}; }
  static MapSpec tentpow(double ell);

  /// Binary64 evaluation; the logistic map is evaluated as (4x)(1-x).
  double operator()(double x) const;
};

enum class Denominator { n, n_minus_one };
enum class Rounding { floor, nearest_half_up, nearest_half_down };

/// Grid points j / d for j = 0..n-1, d = n or n-1. Images are rounded and clamped to
/// [0, n-1]. The default (n-1, floor) is the convention that matches the reference
/// orbit tables.
struct GridSpec {
  std::uint32_t n = 2;
  Denominator denominator = Denominator::n_minus_one;
  Rounding rounding = Rounding::floor;

  std::uint64_t scale() const noexcept {
    return denominator == Denominator::n ? n : std::uint64_t{n} - 1;
  }
};

/// Grid restriction of the map. The logistic map and tentpow with ell in {1, 2} are
/// evaluated in exact integer arithmetic; other ell go through binary64.
FunctionTable discretize(const MapSpec& map, const GridSpec& grid);

struct CycleReport {
  std::uint32_t period = 0;
  std::vector<Point> cycle;   ///< starts at the least element
  std::size_t basin_size = 0; ///< every start that eventually lands on the cycle
  bool attractive = false;
};

struct OrbitReport {
  OrbitStructure structure;
  std::vector<CycleReport> cycles;  ///< by least cycle element's component representative
};

OrbitReport orbit_report(const MapSpec& map, const GridSpec& grid);

/// Eventual cycle of a binary64 orbit.
struct FloatCycle {
  std::uint64_t length = 0;
  double least = 0.0;  ///< smallest point on the cycle, identifies it
};

/// Brent's cycle detection on x0, f(x0), ... in binary64; constant memory.
FloatCycle float_cycle(const MapSpec& map, double x0);

struct CycleHits {
  std::uint64_t length = 0;
  double least = 0.0;
  std::uint64_t hits = 0;
};

/// Runs float_cycle from `seed_count` uniform starts in [0,1) drawn from a 64-bit
/// Mersenne twister seeded with `rng_seed`, and aggregates hits per distinct cycle.
/// Starts are drawn up front, so the result does not depend on `jobs`.
std::vector<CycleHits> double_precision_cycle(const MapSpec& map, std::uint32_t seed_count,
                                              std::uint64_t rng_seed, std::uint32_t jobs = 1);

std::string to_string(MapKind kind);
std::string to_string(Denominator d);
std::string to_string(Rounding r);

}  // namespace gopkit
