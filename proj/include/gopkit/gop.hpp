#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gopkit/bigint.hpp"
#include "gopkit/function_table.hpp"

namespace gopkit {

/// Global orbit pattern [w1, ..., wp]_N: the periods of the components listed by
/// ascending least element. Invariants: p >= 1, every wi >= 1, sum wi <= N.
class Gop {
 public:
  Gop(std::uint32_t n, std::vector<std::uint32_t> orders);

  /// Decodes the bijection between gops of F_N and nonempty subsets of {1..N}:
  /// bit (c-1) of `mask` is set for every partial sum c = w1 + ... + wk.
  static Gop from_mask(std::uint32_t n, std::uint64_t mask);

  std::uint32_t n() const noexcept { return n_; }
  const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }
  std::size_t length() const noexcept { return orders_.size(); }
  std::uint32_t first() const noexcept { return orders_.front(); }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint64_t mask() const noexcept;

  bool operator==(const Gop& other) const = default;

 private:
  std::uint32_t n_;
  std::vector<std::uint32_t> orders_;
  std::uint32_t modulus_;
};

/// Parses `[2,2,1,3]@11`; `w~k` repeats w k times, so `[2~2,1,3]@11` is the same gop.
Gop parse_gop(std::string_view text);

/// `[2,2,1,3]@11`. With `tilde = true` runs are compressed: `[2~2,1,3]@11`.
std::string to_literal(const Gop& g, bool tilde = false);
/// Orders only, without the ambient size: `[2,2,1,3]`.
std::string orders_literal(const Gop& g, bool tilde = false);

Gop gop_of(const FunctionTable& f);

/// sum f(k) N^(N-1-k) + 1, always in [1, N^N].
BigInt rank(const FunctionTable& f);
/// Inverse of rank. Throws DomainError unless 1 <= r <= n^n.
FunctionTable unrank(std::uint32_t n, const BigInt& r);

/// The unique minimal-rank function whose gop is g.
FunctionTable threshold(const Gop& g);

/// All 2^N - 1 gops of F_N in pseudo-decimal order.
std::vector<Gop> all_gops(std::uint32_t n);

/// Pseudo-decimal order: first order, then modulus minus first order, then the tails
/// lexicographically (shorter tail padded with zeros). Throws DomainError when the
/// ambient sizes differ.
std::strong_ordering gop_compare(const Gop& a, const Gop& b);

/// The defining order: compares rank(threshold(a)) with rank(threshold(b)).
std::strong_ordering compare_by_threshold_rank(const Gop& a, const Gop& b);

struct GopPrecedes {
  bool operator()(const Gop& a, const Gop& b) const { return gop_compare(a, b) < 0; }
};

}  // namespace gopkit
