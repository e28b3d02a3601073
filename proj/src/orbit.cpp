#include "gopkit/orbit.hpp"

#include <algorithm>
#include <limits>

namespace gopkit {

namespace {
constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();
}

OrbitStructure analyze(const FunctionTable& f) {
  const auto n = static_cast<Point>(f.size());
  std::vector<std::uint32_t> membership(n, kUnassigned);
  std::vector<std::uint32_t> on_walk(n, kUnassigned);  // start of the walk that marked x
  std::vector<Point> path;
  path.reserve(n);
  std::vector<Component> components;

  // Ascending starts: a walk that closes on itself starts at the least element of a
  // new component, so components are created already sorted by representative.
  for (Point start = 0; start < n; ++start) {
    if (membership[start] != kUnassigned) continue;
    path.clear();
    Point x = start;
    while (membership[x] == kUnassigned && on_walk[x] != start) {
      on_walk[x] = start;
      path.push_back(x);
      x = f(x);
    }
    std::uint32_t id = 0;
    if (membership[x] != kUnassigned) {
      id = membership[x];
    } else {
      id = static_cast<std::uint32_t>(components.size());
      Component c;
      c.representative = start;
      const auto entry = std::find(path.begin(), path.end(), x);
      c.cycle.assign(entry, path.end());
      std::rotate(c.cycle.begin(), std::min_element(c.cycle.begin(), c.cycle.end()), c.cycle.end());
      c.period = static_cast<std::uint32_t>(c.cycle.size());
      components.push_back(std::move(c));
    }
    for (Point y : path) membership[y] = id;
  }

  for (Point x = 0; x < n; ++x) components[membership[x]].basin.push_back(x);
  for (auto& c : components) c.attractive = c.basin.size() > c.period;

  return OrbitStructure{f, std::move(components), std::move(membership)};
}

std::uint32_t order_of(const FunctionTable& f, Point x) {
  Point y = f.at(x);
  for (std::size_t i = 1; i < f.size(); ++i) y = f(y);
  std::uint32_t period = 1;
  for (Point z = f(y); z != y; z = f(z)) ++period;
  return period;
}

}  // namespace gopkit
