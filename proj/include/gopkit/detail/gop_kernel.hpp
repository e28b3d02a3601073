#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "gopkit/function_table.hpp"

namespace gopkit::detail {

/// Allocation-free gop extraction for enumeration loops. One instance per worker.
///
/// Starts are walked in ascending order. A walk that runs into itself has found a new
/// cycle and its start is the least element of a new component, so components come out
/// in gop order. The result uses the composition encoding of Gop::mask().
class GopKernel {
 public:
  explicit GopKernel(std::size_t n) : walk_(n), depth_(n) {}

  std::uint64_t mask(std::span<const Point> f) {
    const auto n = static_cast<Point>(f.size());
    std::fill_n(walk_.begin(), n, 0u);
    std::uint64_t result = 0;
    std::uint32_t cumulative = 0;
    max_period_ = 0;
    for (Point start = 0; start < n; ++start) {
      if (walk_[start] != 0) continue;
      const std::uint32_t id = start + 1;
      std::uint32_t len = 0;
      Point x = start;
      while (walk_[x] == 0) {
        walk_[x] = id;
        depth_[x] = len++;
        x = f[x];
      }
      if (walk_[x] == id) {
        const std::uint32_t period = len - depth_[x];
        max_period_ = std::max(max_period_, period);
        cumulative += period;
        result |= std::uint64_t{1} << (cumulative - 1);
      }
    }
    return result;
  }

  /// Largest period seen by the last mask() call.
  std::uint32_t max_period() const noexcept { return max_period_; }

 private:
  std::vector<std::uint32_t> walk_;
  std::vector<std::uint32_t> depth_;
  std::uint32_t max_period_ = 0;
};

}  // namespace gopkit::detail
