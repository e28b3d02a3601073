#include "gopkit/maps.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <thread>
#include <utility>

#include "gopkit/error.hpp"

namespace gopkit {

MapSpec MapSpec::tentpow(double ell) {
  if (!(ell >= 1.0 && ell <= 2.0)) throw DomainError("tentpow exponent must lie in [1, 2]");
  return MapSpec{MapKind::tentpow, ell};
}

double MapSpec::operator()(double x) const {
  if (kind == MapKind::logistic) return 4.0 * x * (1.0 - x);
  return 1.0 - std::pow(std::fabs(1.0 - 2.0 * x), *ell);
}

namespace {

std::uint64_t round_ratio(std::uint64_t num, std::uint64_t den, Rounding mode) {
  switch (mode) {
    case Rounding::floor:
      return num / den;
    case Rounding::nearest_half_up:
      return (2 * num + den) / (2 * den);
    case Rounding::nearest_half_down:
      return 2 * num <= den ? 0 : (2 * num - den + 2 * den - 1) / (2 * den);
  }
  return 0;
}

double round_real(double y, Rounding mode) {
  switch (mode) {
    case Rounding::floor:
      return std::floor(y);
    case Rounding::nearest_half_up:
      return std::floor(y + 0.5);
    case Rounding::nearest_half_down:
      return std::ceil(y - 0.5);
  }
  return 0.0;
}

// Scaled image d * f(j / d) as an exact ratio, when the map allows it.
std::optional<std::pair<std::uint64_t, std::uint64_t>> exact_image(const MapSpec& map, std::uint64_t j,
                                                                   std::uint64_t d) {
  if (map.kind == MapKind::logistic) return std::pair{4 * j * (d - j), d};
  const std::uint64_t gap = 2 * j > d ? 2 * j - d : d - 2 * j;  // d |1 - 2x|
  if (*map.ell == 1.0) return std::pair{d - std::min(gap, d), std::uint64_t{1}};
  if (*map.ell == 2.0) {
    const std::uint64_t sq = gap * gap;
    return std::pair{d * d > sq ? d * d - sq : 0, d};
  }
  return std::nullopt;
}

}  // namespace

FunctionTable discretize(const MapSpec& map, const GridSpec& grid) {
  if (grid.n < 2) throw DomainError("a grid needs at least 2 points");
  if (grid.n > (1u << 30)) throw DomainError("grid too large");
  if (map.kind == MapKind::tentpow && !map.ell) throw DomainError("tentpow needs an exponent");
  if (map.kind == MapKind::logistic && map.ell) throw DomainError("the logistic map takes no exponent");
  const std::uint64_t d = grid.scale();
  const std::uint64_t top = grid.n - 1;
  std::vector<Point> images(grid.n);
  for (std::uint64_t j = 0; j < grid.n; ++j) {
    std::uint64_t image = 0;
    if (auto ratio = exact_image(map, j, d)) {
      image = round_ratio(ratio->first, ratio->second, grid.rounding);
    } else {
      const double x = static_cast<double>(j) / static_cast<double>(d);
      const double y = round_real(static_cast<double>(d) * map(x), grid.rounding);
      image = y <= 0.0 ? 0 : static_cast<std::uint64_t>(y);
    }
    images[j] = static_cast<Point>(std::min(image, top));
  }
  return FunctionTable(std::move(images));
}

OrbitReport orbit_report(const MapSpec& map, const GridSpec& grid) {
  OrbitReport report{analyze(discretize(map, grid)), {}};
  for (const auto& c : report.structure.components)
    report.cycles.push_back({c.period, c.cycle, c.basin.size(), c.attractive});
  return report;
}

FloatCycle float_cycle(const MapSpec& map, double x0) {
  auto step = [&](double x) {
    const double y = map(x);
    if (std::isnan(y)) throw DomainError("orbit reached NaN");
    return y;
  };
  if (std::isnan(x0)) throw DomainError("start point is NaN");
  std::uint64_t power = 1;
  std::uint64_t length = 1;
  double tortoise = x0;
  double hare = step(x0);
  while (tortoise != hare) {
    if (power == length) {
      tortoise = hare;
      power *= 2;
      length = 0;
    }
    hare = step(hare);
    ++length;
  }
  double least = hare;
  double x = hare;
  for (std::uint64_t i = 1; i < length; ++i) {
    x = step(x);
    least = std::min(least, x);
  }
  return {length, least};
}

std::vector<CycleHits> double_precision_cycle(const MapSpec& map, std::uint32_t seed_count,
                                              std::uint64_t rng_seed, std::uint32_t jobs) {
  // 53 random mantissa bits per start, independent of the standard library's distributions.
  std::mt19937_64 engine(rng_seed);
  std::vector<double> starts(seed_count);
  for (auto& s : starts) s = static_cast<double>(engine() >> 11) * 0x1.0p-53;

  std::vector<FloatCycle> results(seed_count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < starts.size(); i = next++) results[i] = float_cycle(map, starts[i]);
  };
  jobs = std::clamp<std::uint32_t>(jobs, 1, std::max<std::uint32_t>(seed_count, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::uint32_t i = 0; i < jobs; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  std::map<std::pair<std::uint64_t, double>, std::uint64_t> tally;
  for (const auto& r : results) ++tally[{r.length, r.least}];
  std::vector<CycleHits> out;
  for (const auto& [key, hits] : tally) out.push_back({key.first, key.second, hits});
  return out;
}

std::string to_string(MapKind kind) { return kind == MapKind::logistic ? "logistic" : "tentpow"; }

std::string to_string(Denominator d) { return d == Denominator::n ? "n" : "n-1"; }

std::string to_string(Rounding r) {
  switch (r) {
    case Rounding::floor:
      return "floor";
    case Rounding::nearest_half_up:
      return "nearest-half-up";
    case Rounding::nearest_half_down:
      return "nearest-half-down";
  }
  return "?";
}

}  // namespace gopkit
