#pragma once

#include <stdexcept>
#include <string>

namespace boks {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid user-supplied configuration (bad budget, unknown algorithm, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. line() is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A numerical invariant broke at run time (non-finite gradient, negative loss, ...).
class NumericError : public Error {
 public:
  using Error::Error;
};

// Budget accounting violated (odd buffer at split time, budget too small).
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace boks
