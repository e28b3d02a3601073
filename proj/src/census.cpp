#include "gopkit/census.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <vector>

#include "gopkit/detail/gop_kernel.hpp"
#include "gopkit/error.hpp"

namespace gopkit {

BigInt GopCensus::count(const Gop& g) const {
  const auto it = counts.find(g);
  return it == counts.end() ? BigInt(0) : it->second;
}

std::uint32_t GopCensus::max_period() const {
  std::uint32_t best = 0;
  for (const auto& [g, c] : counts)
    for (auto w : g.orders()) best = std::max(best, w);
  return best;
}

std::uint32_t GopCensus::max_modulus() const {
  std::uint32_t best = 0;
  for (const auto& [g, c] : counts) best = std::max(best, g.modulus());
  return best;
}

GopCensus census_from_masks(std::uint32_t n, std::span<const std::uint64_t> per_mask) {
  GopCensus out;
  out.n = n;
  for (std::uint64_t mask = 1; mask < per_mask.size(); ++mask) {
    if (per_mask[mask] == 0) continue;
    out.counts.emplace(Gop::from_mask(n, mask), BigInt(per_mask[mask]));
    out.total += per_mask[mask];
  }
  return out;
}

GopCensus census(std::uint32_t n, const FunctionFilter& filter, bool allow_large) {
  CensusOptions options;
  options.allow_large = allow_large;
  return census_partitioned(n, filter, options);
}

namespace {

__extension__ using u128 = unsigned __int128;

void check_guard(std::uint32_t n, bool allow_large) {
  if (n == 0) throw DomainError("N must be positive");
  if (n > kCensusHardLimit)
    throw DomainError("exhaustive census supports N <= " + std::to_string(kCensusHardLimit));
  if (n > kCensusGuard && !allow_large)
    throw GuardError("refusing to sweep all " + std::to_string(n) + "^" + std::to_string(n) +
                     " functions; pass --allow-large to override");
}

// Sweeps zero-based ranks [lo, hi) in odometer order, adding into `counts`.
void sweep(std::uint32_t n, std::uint64_t lo, std::uint64_t hi, const FunctionFilter& filter,
           std::vector<std::uint64_t>& counts) {
  if (lo >= hi) return;
  std::vector<Point> images(n);
  std::uint64_t rest = lo;
  for (std::size_t k = n; k-- > 0;) {
    images[k] = static_cast<Point>(rest % n);
    rest /= n;
  }
  detail::GopKernel kernel(n);
  const Point top = n - 1;
  for (std::uint64_t r = lo;;) {
    if (!filter || filter(images)) ++counts[kernel.mask(images)];
    if (++r == hi) break;
    std::size_t k = n - 1;
    while (images[k] == top) images[k--] = 0;
    ++images[k];
  }
}

}  // namespace

GopCensus census_partitioned(std::uint32_t n, const FunctionFilter& filter,
                             const CensusOptions& options) {
  check_guard(n, options.allow_large);
  std::uint64_t space = 1;
  for (std::uint32_t i = 0; i < n; ++i) space *= n;
  const std::uint64_t partitions =
      std::clamp<std::uint64_t>(options.partitions, 1, space);
  const std::uint32_t jobs =
      static_cast<std::uint32_t>(std::clamp<std::uint64_t>(options.jobs, 1, partitions));
  const std::size_t slots = std::size_t{1} << n;

  auto bound = [&](std::uint64_t i) {
    return static_cast<std::uint64_t>(static_cast<u128>(space) * i / partitions);
  };

  std::vector<std::vector<std::uint64_t>> per_worker(jobs, std::vector<std::uint64_t>(slots, 0));
  std::atomic<std::uint64_t> next{0};
  std::size_t finished = 0;
  std::mutex progress_mutex;

  auto worker = [&](std::uint32_t id) {
    for (std::uint64_t i = next++; i < partitions; i = next++) {
      sweep(n, bound(i), bound(i + 1), filter, per_worker[id]);
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(++finished, partitions);
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint32_t id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }

  std::vector<std::uint64_t> merged(slots, 0);
  for (const auto& counts : per_worker)
    for (std::size_t m = 0; m < slots; ++m) merged[m] += counts[m];
  return census_from_masks(n, merged);
}

}  // namespace gopkit
