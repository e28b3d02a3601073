#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gopkit {

using Point = std::uint32_t;

/// An endofunction f : X_N -> X_N on X_N = {0, ..., N-1}, stored as its image array.
/// Immutable after construction; the constructor rejects n = 0 and out-of-range images.
class FunctionTable {
 public:
  explicit FunctionTable(std::vector<Point> images);

  static FunctionTable identity(std::size_t n);
  static FunctionTable constant(std::size_t n, Point value);

  std::size_t size() const noexcept { return images_.size(); }
  std::span<const Point> images() const noexcept { return images_; }

  /// Unchecked evaluation.
  Point operator()(Point x) const noexcept { return images_[x]; }
  /// Checked evaluation; throws DomainError when x >= size().
  Point at(Point x) const;

  bool operator==(const FunctionTable&) const = default;

 private:
  std::vector<Point> images_;
};

/// f^steps(x0). Steps beyond n are folded modulo the cycle length, so huge counts are cheap.
Point iterate(const FunctionTable& f, Point x0, std::uint64_t steps);

/// Parses `N:i0,i1,...,i{N-1}`. Whitespace is ignored anywhere.
FunctionTable parse_function(std::string_view text);

/// Inverse of parse_function, without whitespace.
std::string to_literal(const FunctionTable& f);

}  // namespace gopkit
