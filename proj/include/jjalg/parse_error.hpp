#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jjalg {

/// Input that does not match a grammar. `line` is 1-based (0 when the input
/// is a single expression); `column` is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &message, std::size_t line, std::size_t column)
      : std::runtime_error(format(message, line, column)), message_(message), line_(line),
        column_(column) {}

  const std::string &message() const { return message_; }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string format(const std::string &message, std::size_t line, std::size_t column) {
    std::string where = line ? "line " + std::to_string(line) : "position " + std::to_string(column);
    if (line && column)
      where += ", column " + std::to_string(column);
    return where + ": " + message;
  }

  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

} // namespace jjalg
