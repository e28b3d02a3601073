#pragma once

#include <cstdint>
#include <vector>

#include "gopkit/function_table.hpp"

namespace gopkit {

/// One weakly connected piece of the functional graph: a cycle and the trees feeding it.
struct Component {
  Point representative = 0;  ///< least element of the basin
  std::uint32_t period = 0;  ///< cycle length, the order of every element in the component
  std::vector<Point> cycle;  ///< starts at the least cycle element and follows f
  std::vector<Point> basin;  ///< every element of the component, ascending, cycle included
  bool attractive = false;   ///< basin strictly larger than the cycle

  bool operator==(const Component&) const = default;
};

struct OrbitStructure {
  FunctionTable function;
  std::vector<Component> components;  ///< ascending by representative
  std::vector<std::uint32_t> membership;  ///< membership[x] indexes `components`

  const Component& component_of(Point x) const { return components[membership.at(x)]; }
};

/// Full decomposition in O(n) time and memory, without recursion.
OrbitStructure analyze(const FunctionTable& f);

/// Period of the cycle in x's component. Throws DomainError when x is out of range.
std::uint32_t order_of(const FunctionTable& f, Point x);

}  // namespace gopkit
