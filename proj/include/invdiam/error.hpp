#pragma once

#include <stdexcept>
#include <string>

namespace invdiam {

// Invalid input: malformed graph, out-of-range label, mismatched host, ...
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive computation would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// File parse failure; carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace invdiam
