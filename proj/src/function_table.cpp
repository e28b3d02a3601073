#include "gopkit/function_table.hpp"

#include <string>

#include "gopkit/error.hpp"
#include "literal_scanner.hpp"

namespace gopkit {

FunctionTable::FunctionTable(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) throw DomainError("a function needs at least one point");
  const auto n = images_.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (images_[k] >= n)
      throw DomainError("image f(" + std::to_string(k) + ") = " + std::to_string(images_[k]) +
                        " is outside [0, " + std::to_string(n - 1) + "]");
  }
}

FunctionTable FunctionTable::identity(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t k = 0; k < n; ++k) images[k] = static_cast<Point>(k);
  return FunctionTable(std::move(images));
}

FunctionTable FunctionTable::constant(std::size_t n, Point value) {
  return FunctionTable(std::vector<Point>(n, value));
}

Point FunctionTable::at(Point x) const {
  if (x >= images_.size())
    throw DomainError("point " + std::to_string(x) + " is outside [0, " +
                      std::to_string(images_.size() - 1) + "]");
  return images_[x];
}

Point iterate(const FunctionTable& f, Point x0, std::uint64_t steps) {
  f.at(x0);
  Point x = x0;
  const std::uint64_t n = f.size();
  if (steps <= n) {
    for (; steps > 0; --steps) x = f(x);
    return x;
  }
  // After n steps x sits on its cycle; the remainder folds modulo the period.
  for (std::uint64_t i = 0; i < n; ++i) x = f(x);
  steps -= n;
  std::uint64_t period = 1;
  for (Point y = f(x); y != x; y = f(y)) ++period;
  for (steps %= period; steps > 0; --steps) x = f(x);
  return x;
}

FunctionTable parse_function(std::string_view text) {
  detail::LiteralScanner scan(text);
  const std::size_t n_pos = scan.position();
  const auto n = scan.number();
  if (n == 0) throw ParseError("N must be positive", n_pos);
  scan.expect(':');
  std::vector<Point> images;
  images.reserve(n);
  do {
    const std::size_t at = scan.position();
    if (images.size() == n) throw ParseError("more than N = " + std::to_string(n) + " images", at);
    const auto v = scan.number();
    if (v >= n)
      throw ParseError("image " + std::to_string(v) + " is outside [0, " + std::to_string(n - 1) + "]",
                       at);
    images.push_back(static_cast<Point>(v));
  } while (scan.accept(','));
  if (!scan.at_end()) scan.fail("expected ',' or end of literal");
  if (images.size() != n)
    throw ParseError("expected " + std::to_string(n) + " images, got " + std::to_string(images.size()),
                     scan.position());
  return FunctionTable(std::move(images));
}

std::string to_literal(const FunctionTable& f) {
  std::string out = std::to_string(f.size()) + ":";
  const auto images = f.images();
  for (std::size_t k = 0; k < images.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(images[k]);
  }
  return out;
}

}  // namespace gopkit
