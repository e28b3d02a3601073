#include "gopkit/rigid.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "gopkit/detail/gop_kernel.hpp"
#include "gopkit/error.hpp"

namespace gopkit {

RigidSpec::RigidSpec(std::vector<std::uint32_t> alphas_, std::uint64_t q_, WindowBoundary boundary_)
    : alphas(std::move(alphas_)), q(q_), boundary(boundary_) {
  if (alphas.empty()) throw DomainError("a rigid spec needs at least one weight");
}

namespace {

std::uint64_t distance(Point a, Point b) { return a > b ? a - b : b - a; }

// Which positions carry a forward / backward constraint for a given n.
struct Windows {
  std::size_t t;
  std::size_t n;
  bool full;

  bool forward(std::size_t p) const { return full ? p + t + 1 <= n : p + 1 < n; }
  bool backward(std::size_t p) const { return full ? p >= t : p >= 1; }
};

class RigidSearch {
 public:
  RigidSearch(std::uint32_t n, const RigidSpec& spec)
      : n_(n),
        spec_(spec),
        windows_{spec.window(), n, spec.boundary == WindowBoundary::full},
        images_(n),
        forward_(n, 0),
        kernel_(n),
        counts_(std::size_t{1} << n, 0) {}

  void run_from(Point first) {
    images_[0] = first;
    if (n_ == 1) {
      ++counts_[kernel_.mask(images_)];
      return;
    }
    extend(1);
  }

  const std::vector<std::uint64_t>& counts() const { return counts_; }

 private:
  void extend(std::size_t i) {
    const auto& alpha = spec_.alphas;
    const std::size_t t = windows_.t;
    const std::size_t p_lo = i > t ? i - t : 0;

    // The adjacent term alone bounds the candidate range whenever it is constrained.
    Point v_lo = 0;
    Point v_hi = n_ - 1;
    if (alpha[0] > 0 && (windows_.forward(i - 1) || windows_.backward(i))) {
      const std::uint64_t reach = spec_.q / alpha[0];
      const Point prev = images_[i - 1];
      v_lo = reach >= prev ? 0 : static_cast<Point>(prev - reach);
      v_hi = static_cast<Point>(std::min<std::uint64_t>(n_ - 1, prev + reach));
    }

    std::uint64_t saved[64];
    for (std::size_t p = p_lo; p < i; ++p) saved[p - p_lo] = forward_[p];

    for (Point v = v_lo; v <= v_hi; ++v) {
      bool ok = true;
      for (std::size_t p = p_lo; p < i && ok; ++p) {
        if (!windows_.forward(p)) continue;
        const std::uint64_t sum = saved[p - p_lo] + alpha[i - p - 1] * distance(images_[p], v);
        ok = sum <= spec_.q;
        forward_[p] = sum;
      }
      if (ok && windows_.backward(i)) {
        std::uint64_t sum = 0;
        for (std::size_t r = 1; r <= t && r <= i; ++r) sum += alpha[r - 1] * distance(v, images_[i - r]);
        ok = sum <= spec_.q;
      }
      if (ok) {
        images_[i] = v;
        if (i + 1 == n_)
          ++counts_[kernel_.mask(images_)];
        else
          extend(i + 1);
      }
    }
    for (std::size_t p = p_lo; p < i; ++p) forward_[p] = saved[p - p_lo];
  }

  std::uint32_t n_;
  const RigidSpec& spec_;
  Windows windows_;
  std::vector<Point> images_;
  std::vector<std::uint64_t> forward_;  // partial forward sums over assigned offsets
  detail::GopKernel kernel_;
  std::vector<std::uint64_t> counts_;
};

}  // namespace

bool is_rigid(const FunctionTable& f, const RigidSpec& spec) {
  const auto images = f.images();
  const std::size_t n = images.size();
  const Windows windows{spec.window(), n, spec.boundary == WindowBoundary::full};
  for (std::size_t p = 0; p < n; ++p) {
    if (windows.forward(p)) {
      std::uint64_t sum = 0;
      for (std::size_t r = 1; r <= windows.t && p + r < n; ++r)
        sum += spec.alphas[r - 1] * distance(images[p], images[p + r]);
      if (sum > spec.q) return false;
    }
    if (windows.backward(p)) {
      std::uint64_t sum = 0;
      for (std::size_t r = 1; r <= windows.t && r <= p; ++r)
        sum += spec.alphas[r - 1] * distance(images[p], images[p - r]);
      if (sum > spec.q) return false;
    }
  }
  return true;
}

GopCensus enumerate_rigid(std::uint32_t n, const RigidSpec& spec, const RigidOptions& options) {
  if (n == 0) throw DomainError("N must be positive");
  if (n > 63) throw DomainError("rigid enumeration supports N <= 63");
  if (n > kRigidGuard && !options.allow_large)
    throw GuardError("refusing rigid enumeration beyond N = " + std::to_string(kRigidGuard) +
                     "; pass --allow-large to override");
  if (spec.window() > 64) throw DomainError("rigid windows longer than 64 are not supported");

  // One task per choice of f(0); every subtree is independent.
  const std::uint32_t jobs = std::clamp<std::uint32_t>(options.jobs, 1, n);
  std::atomic<Point> next{0};
  std::mutex progress_mutex;
  std::size_t finished = 0;
  std::vector<std::vector<std::uint64_t>> per_worker(jobs);

  auto worker = [&](std::uint32_t id) {
    RigidSearch search(n, spec);
    for (Point root = next++; root < n; root = next++) {
      search.run_from(root);
      if (options.progress) {
        std::lock_guard lock(progress_mutex);
        options.progress(++finished, n);
      }
    }
    per_worker[id] = search.counts();
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (std::uint32_t id = 0; id < jobs; ++id) threads.emplace_back(worker, id);
    for (auto& t : threads) t.join();
  }

  std::vector<std::uint64_t> merged(std::size_t{1} << n, 0);
  for (const auto& counts : per_worker)
    for (std::size_t m = 0; m < counts.size(); ++m) merged[m] += counts[m];
  return census_from_masks(n, merged);
}

bool check_lr1_period_theorem(std::uint32_t n, const RigidOptions& options) {
  const auto lr1 = enumerate_rigid(n, RigidSpec::lr1(), options);
  return lr1.max_period() <= 2;
}

std::vector<StatementSummary> StatementReport::summary() const {
  std::vector<StatementSummary> out;
  for (const auto& inst : instances) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const StatementSummary& s) { return s.statement == inst.statement; });
    if (it == out.end()) {
      out.push_back({inst.statement, 0, 0});
      it = std::prev(out.end());
    }
    ++it->checked;
    if (inst.holds) ++it->held;
  }
  return out;
}

namespace {

std::vector<std::uint32_t> run_of(std::uint32_t w, std::uint32_t k) { return std::vector<std::uint32_t>(k, w); }

// [2~(i-1), 1, 2~(k-i+1)]
std::vector<std::uint32_t> one_inserted(std::uint32_t k, std::uint32_t i) {
  std::vector<std::uint32_t> orders(i - 1, 2);
  orders.push_back(1);
  orders.insert(orders.end(), k - i + 1, 2);
  return orders;
}

}  // namespace

StatementReport check_statements(std::uint32_t n_max, const RigidOptions& options) {
  StatementReport report;
  report.n_max = n_max;
  std::vector<GopCensus> lr1(n_max + 1);
  for (std::uint32_t n = 1; n <= n_max; ++n) lr1[n] = enumerate_rigid(n, RigidSpec::lr1(), options);

  auto count = [&](std::uint32_t n, const std::vector<std::uint32_t>& orders) -> BigInt {
    std::uint64_t sum = 0;
    for (auto w : orders) sum += w;
    if (orders.empty() || sum > n) return 0;
    return lr1[n].count(Gop(n, orders));
  };
  auto record = [&](const char* name, std::uint32_t n, std::uint32_t k, BigInt lhs, BigInt rhs) {
    const bool holds = lhs == rhs;
    report.instances.push_back({name, n, k, std::move(lhs), std::move(rhs), holds});
  };

  for (std::uint32_t n = 1; n + 1 <= n_max; ++n)
    for (std::uint32_t k = 1; 2 * k <= n + 1; ++k)
      record("ones-grow", n, k, count(n, run_of(1, k)), count(n + 1, run_of(1, k + 1)));

  for (std::uint32_t n = 1; n + 2 <= n_max; ++n)
    for (std::uint32_t k = 1; 2 * k <= n; ++k)
      record("twos-grow", n, k, count(n, run_of(2, k)), count(n + 2, run_of(2, k + 1)));

  for (std::uint32_t n = 1; n + 1 <= n_max; ++n)
    for (std::uint32_t k = 1; 2 * k <= n; ++k) {
      if (n > 3 * k - 1) continue;
      auto with_one = run_of(2, k);
      with_one.push_back(1);
      record("twos-append-one", n, k, count(n, run_of(2, k)), count(n + 1, with_one));
    }

  for (std::uint32_t n = 1; n <= n_max; ++n)
    for (std::uint32_t k = 1; k <= n; ++k) {
      BigInt expected;
      if (k == 1)
        expected = 1;
      else if (k == 2)
        expected = 2;
      else if (2 * k <= n + 1)
        expected = 4 * (k + 1) * pow_big(3, k - 3);
      else
        continue;
      record("ones-closed-form", n, k, count(n, run_of(1, n - k + 1)), expected);
    }

  for (std::uint32_t n = 1; n <= n_max; ++n)
    for (std::uint32_t k = 1; 2 * k + 1 <= n; ++k) {
      BigInt sum = 0;
      for (std::uint32_t i = 1; i <= k + 1; ++i) sum += count(n, one_inserted(k, i));
      record("twos-split", n, k, count(n, run_of(2, k)), sum);
    }

  for (std::uint32_t n = 1; n + 1 <= n_max; ++n)
    for (std::uint32_t k = 1; 2 * k <= n + 1; ++k)
      record("ones-grow-shifted", n, k, count(n, run_of(1, n - k + 1)), count(n + 1, run_of(1, n - k + 2)));

  for (std::uint32_t n = 1; n + 1 <= n_max; ++n)
    for (std::uint32_t k = 1; 2 * k <= n; ++k) {
      BigInt sum = 0;
      for (std::uint32_t i = 1; i <= k + 1; ++i) sum += count(n + 1, one_inserted(k, i));
      record("twos-split-shifted", n, k, count(n, run_of(2, k)), sum);
    }

  return report;
}

}  // namespace gopkit
