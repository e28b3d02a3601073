#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>

#include "gopkit/bigint.hpp"
#include "gopkit/function_table.hpp"
#include "gopkit/gop.hpp"

namespace gopkit {

/// Exact per-gop function counts over some set of functions of F_N.
struct GopCensus {
  std::uint32_t n = 0;
  std::map<Gop, BigInt, GopPrecedes> counts;  ///< only nonempty classes, in pseudo-decimal order
  BigInt total;

  /// Zero for absent gops.
  BigInt count(const Gop& g) const;
  std::size_t distinct() const noexcept { return counts.size(); }
  std::uint32_t max_period() const;
  std::uint32_t max_modulus() const;
};

using FunctionFilter = std::function<bool(std::span<const Point>)>;

/// Called after each finished partition with (finished, total partitions). May be
/// invoked from worker threads, but never concurrently.
using ProgressCallback = std::function<void(std::size_t, std::size_t)>;

struct CensusOptions {
  std::uint32_t partitions = 1;
  std::uint32_t jobs = 1;            ///< 1 = deterministic single-threaded mode
  bool allow_large = false;          ///< lift the n <= kCensusGuard refusal
  ProgressCallback progress;
};

/// Largest n swept without an explicit override (10^10 functions at n = 10).
inline constexpr std::uint32_t kCensusGuard = 10;
/// Hard limit: n^n must fit the 64-bit rank odometer.
inline constexpr std::uint32_t kCensusHardLimit = 15;

/// Gop census over every function of F_n accepted by `filter` (all when empty).
GopCensus census(std::uint32_t n, const FunctionFilter& filter = {}, bool allow_large = false);

/// Same result as census(); the rank range [1, n^n] is cut into contiguous chunks that
/// are swept independently (possibly concurrently) and merged.
GopCensus census_partitioned(std::uint32_t n, const FunctionFilter& filter,
                             const CensusOptions& options);

/// Builds a census from raw per-mask counters (index = Gop::mask()).
GopCensus census_from_masks(std::uint32_t n, std::span<const std::uint64_t> per_mask);

}  // namespace gopkit
