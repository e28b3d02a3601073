#include "gopkit/gop.hpp"

#include <algorithm>
#include <numeric>

#include "gopkit/error.hpp"
#include "gopkit/orbit.hpp"
#include "literal_scanner.hpp"

namespace gopkit {

Gop::Gop(std::uint32_t n, std::vector<std::uint32_t> orders) : n_(n), orders_(std::move(orders)) {
  if (n_ == 0) throw DomainError("gop ambient size must be positive");
  if (orders_.empty()) throw DomainError("a gop has at least one order");
  std::uint64_t sum = 0;
  for (auto w : orders_) {
    if (w == 0) throw DomainError("gop orders must be positive");
    sum += w;
  }
  if (sum > n_)
    throw DomainError("gop modulus " + std::to_string(sum) + " exceeds N = " + std::to_string(n_));
  modulus_ = static_cast<std::uint32_t>(sum);
}

Gop Gop::from_mask(std::uint32_t n, std::uint64_t mask) {
  if (mask == 0) throw DomainError("empty composition mask");
  if (n < 64 && (mask >> n) != 0) throw DomainError("composition mask exceeds N");
  std::vector<std::uint32_t> orders;
  std::uint32_t previous = 0;
  for (std::uint32_t c = 1; mask != 0; ++c, mask >>= 1) {
    if (mask & 1) {
      orders.push_back(c - previous);
      previous = c;
    }
  }
  return Gop(n, std::move(orders));
}

std::uint64_t Gop::mask() const noexcept {
  std::uint64_t m = 0;
  std::uint32_t c = 0;
  for (auto w : orders_) {
    c += w;
    m |= std::uint64_t{1} << (c - 1);
  }
  return m;
}

Gop parse_gop(std::string_view text) {
  detail::LiteralScanner scan(text);
  scan.expect('[');
  std::vector<std::uint32_t> orders;
  do {
    const std::size_t at = scan.position();
    const auto w = scan.number();
    if (w == 0) throw ParseError("orders must be positive", at);
    std::uint64_t repeat = 1;
    if (scan.accept('~')) {
      const std::size_t rep_at = scan.position();
      repeat = scan.number();
      if (repeat == 0) throw ParseError("repeat count must be positive", rep_at);
      if (repeat > 4096) throw ParseError("repeat count too large", rep_at);
    }
    orders.insert(orders.end(), repeat, static_cast<std::uint32_t>(w));
  } while (scan.accept(','));
  scan.expect(']');
  scan.expect('@');
  const std::size_t n_pos = scan.position();
  const auto n = scan.number();
  if (!scan.at_end()) scan.fail("unexpected text after gop literal");
  const std::uint64_t sum = std::accumulate(orders.begin(), orders.end(), std::uint64_t{0});
  if (n == 0) throw ParseError("N must be positive", n_pos);
  if (sum > n)
    throw ParseError("modulus " + std::to_string(sum) + " exceeds N = " + std::to_string(n), n_pos);
  return Gop(static_cast<std::uint32_t>(n), std::move(orders));
}

std::string orders_literal(const Gop& g, bool tilde) {
  std::string out = "[";
  const auto& w = g.orders();
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i + 1;
    if (tilde)
      while (j < w.size() && w[j] == w[i]) ++j;
    if (i > 0) out += ',';
    out += std::to_string(w[i]);
    if (j - i > 1) out += "~" + std::to_string(j - i);
    i = j;
  }
  return out + "]";
}

std::string to_literal(const Gop& g, bool tilde) {
  return orders_literal(g, tilde) + "@" + std::to_string(g.n());
}

Gop gop_of(const FunctionTable& f) {
  const auto structure = analyze(f);
  std::vector<std::uint32_t> orders;
  orders.reserve(structure.components.size());
  for (const auto& c : structure.components) orders.push_back(c.period);
  return Gop(static_cast<std::uint32_t>(f.size()), std::move(orders));
}

BigInt rank(const FunctionTable& f) {
  const BigInt base = f.size();
  BigInt r = 0;
  for (Point v : f.images()) r = r * base + v;
  return r + 1;
}

FunctionTable unrank(std::uint32_t n, const BigInt& r) {
  if (n == 0) throw DomainError("N must be positive");
  if (r < 1 || r > pow_big(n, n))
    throw DomainError("rank " + r.str() + " is outside [1, " + std::to_string(n) + "^" +
                      std::to_string(n) + "]");
  BigInt rest = r - 1;
  std::vector<Point> images(n);
  for (std::size_t k = n; k-- > 0;) {
    images[k] = static_cast<Point>(rest % n);
    rest /= n;
  }
  return FunctionTable(std::move(images));
}

namespace {

void canonical_cycle(std::vector<Point>& images, Point start, std::uint32_t length) {
  for (std::uint32_t i = 0; i + 1 < length; ++i) images[start + i] = start + i + 1;
  images[start + length - 1] = start;
}

void compositions(std::uint32_t n, std::uint32_t remaining, std::vector<std::uint32_t>& prefix,
                  std::vector<Gop>& out) {
  for (std::uint32_t w = 1; w <= remaining; ++w) {
    prefix.push_back(w);
    out.emplace_back(n, prefix);
    compositions(n, remaining - w, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

FunctionTable threshold(const Gop& g) {
  const auto n = g.n();
  const auto& w = g.orders();
  // Filler slots map to 0; the first cycle sits at the bottom, the rest packed at the top.
  std::vector<Point> images(n, 0);
  canonical_cycle(images, 0, w.front());
  Point start = w.front() + (n - g.modulus());
  for (std::size_t k = 1; k < w.size(); ++k) {
    canonical_cycle(images, start, w[k]);
    start += w[k];
  }
  return FunctionTable(std::move(images));
}

std::vector<Gop> all_gops(std::uint32_t n) {
  if (n == 0) throw DomainError("N must be positive");
  std::vector<Gop> out;
  if (n < 63) out.reserve((std::size_t{1} << n) - 1);
  std::vector<std::uint32_t> prefix;
  compositions(n, n, prefix, out);
  std::sort(out.begin(), out.end(), GopPrecedes{});
  return out;
}

std::strong_ordering gop_compare(const Gop& a, const Gop& b) {
  if (a.n() != b.n())
    throw DomainError("cannot compare gops of F_" + std::to_string(a.n()) + " and F_" +
                      std::to_string(b.n()));
  if (auto c = a.first() <=> b.first(); c != 0) return c;
  if (auto c = (a.modulus() - a.first()) <=> (b.modulus() - b.first()); c != 0) return c;
  const auto& x = a.orders();
  const auto& y = b.orders();
  const std::size_t len = std::max(x.size(), y.size());
  for (std::size_t i = 1; i < len; ++i) {
    const std::uint32_t xi = i < x.size() ? x[i] : 0;
    const std::uint32_t yi = i < y.size() ? y[i] : 0;
    if (auto c = xi <=> yi; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_by_threshold_rank(const Gop& a, const Gop& b) {
  if (a.n() != b.n())
    throw DomainError("cannot compare gops of F_" + std::to_string(a.n()) + " and F_" +
                      std::to_string(b.n()));
  const int c = rank(threshold(a)).compare(rank(threshold(b)));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace gopkit
