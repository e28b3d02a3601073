#pragma once

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "gopkit/error.hpp"

namespace gopkit::detail {

// Cursor over a literal that skips whitespace and reports original offsets.
class LiteralScanner {
 public:
  explicit LiteralScanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  std::size_t position() {
    skip_space();
    return pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::uint64_t number() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a number");
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10)
        throw ParseError("number too large", start);
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  [[noreturn]] void fail(const std::string& what) {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(what + ", found end of input", pos_);
    throw ParseError(what + ", found '" + text_[pos_] + "'", pos_);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace gopkit::detail
