#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace gopkit {

/// Arbitrary-precision signed integer; class cardinals and ranks are always nonnegative.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// "2.98e63"-style approximation with `digits` significant digits (truncated, not rounded).
inline std::string to_scientific(const BigInt& v, int digits = 3) {
  std::string s = v.str();
  if (s.size() <= 1 || s[0] == '-') return s;
  std::string out(1, s[0]);
  if (digits > 1) {
    out += '.';
    out += s.substr(1, static_cast<std::size_t>(digits - 1));
    while (out.size() < static_cast<std::size_t>(digits + 1)) out += '0';
  }
  return out + "e" + std::to_string(s.size() - 1);
}

inline BigInt pow_big(std::uint64_t base, std::uint64_t exponent) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exponent));
}

}  // namespace gopkit
