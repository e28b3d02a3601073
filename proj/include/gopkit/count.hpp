#pragma once

#include <cstdint>

#include "gopkit/bigint.hpp"
#include "gopkit/gop.hpp"

namespace gopkit {

// Exact cardinals of gop classes. Every function throws DomainError on parameters
// outside the stated preconditions.

/// #[1~k]_N = C(N-1, N-k) N^(N-k); 1 <= k <= n.
BigInt count_fixed_points_only(std::uint32_t n, std::uint32_t k);

/// #[k]_N = #[1~k]_N (k-1)!; 1 <= k <= n.
BigInt count_single_cycle(std::uint32_t n, std::uint32_t k);

/// #[p,q]_N = (N-1)! N^(N-p-q) / ((N-p-q)! q); p, q >= 1, p + q <= n.
BigInt count_two_cycles(std::uint32_t n, std::uint32_t p, std::uint32_t q);

/// #[w1..wp]_N = (N-1)! N^(N-s) / ((N-s)! prod_{k=2..p} (w_k + ... + w_p)), s = |g|.
/// The division is checked to be exact.
BigInt count_gop(const Gop& g);

/// Splitting w_j (1-based j) into (w_j - h, h) divides the class size by
/// (h + w_{j+1} + ... + w_p). Returns whether both sides agree under count_gop.
/// Requires w_j >= 2 and 1 <= h <= w_j - 1.
bool check_split_identity(const Gop& g, std::size_t j, std::uint32_t h);

/// Sum of count_gop over all gops of F_N; equals N^N. Enumerates the 2^N - 1 gops
/// directly for n <= kDirectSumLimit and otherwise groups them by modulus, summing the
/// reciprocal suffix-sum products over compositions exactly in rational arithmetic.
BigInt total_over_all_gops(std::uint32_t n);

inline constexpr std::uint32_t kDirectSumLimit = 16;

}  // namespace gopkit
