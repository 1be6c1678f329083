#pragma once

// Shared low-level cursor for the Turtle, rule, and query scanners:
// byte-wise input walking with 1-based line/column tracking.

#include <cctype>
#include <string>
#include <string_view>

#include "aias/error.hpp"

namespace aias::detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  char advance() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  std::size_t offset() const { return pos_; }

  [[noreturn]] void fail(std::string message, std::string token = "") const {
    throw ParseError(line_, column_, std::move(message), std::move(token));
  }

  static bool is_name_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
  }
  static bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
  }
  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

// Appends a Unicode code point as UTF-8.
void append_utf8(std::string& out, unsigned long code_point);

}  // namespace aias::detail
