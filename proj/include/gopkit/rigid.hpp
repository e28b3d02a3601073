#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gopkit/census.hpp"
#include "gopkit/function_table.hpp"

namespace gopkit {

/// Which positions carry a weighted-variation constraint.
enum class WindowBoundary {
  /// Forward sums at p in [0, N-t-1], backward sums at p in [t, N-1]: only windows
  /// whose every offset is in range. This reading reproduces the reference
  /// (20,9,5,2,1) tables.
  full,
  /// Every p, with out-of-range offsets dropped from the sum.
  truncated,
};

/// Locally rigid set LR_{alpha,q,N}: sum_r alpha_r |f(p) - f(p +/- r)| <= q.
struct RigidSpec {
  std::vector<std::uint32_t> alphas;  ///< alpha_1 .. alpha_t, t >= 1
  std::uint64_t q = 0;
  WindowBoundary boundary = WindowBoundary::full;

  RigidSpec(std::vector<std::uint32_t> alphas, std::uint64_t q,
            WindowBoundary boundary = WindowBoundary::full);

  /// LR_{1,N}: adjacent images differ by at most one.
  static RigidSpec lr1() { return RigidSpec({1}, 1); }

  std::size_t window() const noexcept { return alphas.size(); }
};

bool is_rigid(const FunctionTable& f, const RigidSpec& spec);

struct RigidOptions {
  std::uint32_t jobs = 1;  ///< 1 = deterministic single-threaded mode
  bool allow_large = false;
  ProgressCallback progress;
};

/// Largest n enumerated without an explicit override.
inline constexpr std::uint32_t kRigidGuard = 16;

/// Gop census over exactly the rigid functions, by depth-first extension of image
/// prefixes; a prefix whose completed (or partial forward) sums exceed q is abandoned.
GopCensus enumerate_rigid(std::uint32_t n, const RigidSpec& spec,
                          const RigidOptions& options = {});

/// True iff every member of LR_{1,n} has only periods 1 and 2.
bool check_lr1_period_theorem(std::uint32_t n, const RigidOptions& options = {});

struct StatementInstance {
  std::string statement;  ///< one of the names listed at check_statements
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
};

struct StatementSummary {
  std::string statement;
  std::size_t checked = 0;
  std::size_t held = 0;
};

struct StatementReport {
  std::uint32_t n_max = 0;
  std::vector<StatementInstance> instances;

  std::vector<StatementSummary> summary() const;
};

/// Checks the LR_{1,N} conjectures on every admissible (N, k) whose censuses all have
/// N <= n_max. Failures are recorded, never thrown.
///
///   ones-grow           #[1~k]_N = #[1~(k+1)]_{N+1},                         2k <= N+1
///   twos-grow           #[2~k]_N = #[2~(k+1)]_{N+2},                         2k <= N
///   twos-append-one     #[2~k]_N = #[2~k,1]_{N+1},                           2k <= N <= 3k-1
///   ones-closed-form    #[1~(N-k+1)]_N = 1 | 2 | (4/27)(k+1)3^k,             k = 1 | k = 2 | k >= 3, 2k <= N+1
///   twos-split          #[2~k]_N = sum_i #[2~(i-1),1,2~(k-i+1)]_N,           2k+1 <= N
///   ones-grow-shifted   #[1~(N-k+1)]_N = #[1~(N-k+2)]_{N+1},                 2k <= N+1
///   twos-split-shifted  #[2~k]_N = sum_i #[2~(i-1),1,2~(k-i+1)]_{N+1},       2k <= N
StatementReport check_statements(std::uint32_t n_max, const RigidOptions& options = {});

}  // namespace gopkit
