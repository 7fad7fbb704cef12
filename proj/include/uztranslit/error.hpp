#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uztranslit {

/// Problem in a data file. `line()` is 1-based; 0 when not tied to a line.
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ParseError : public DataError {
 public:
  using DataError::DataError;
};

class DuplicateError : public DataError {
 public:
  DuplicateError(const std::string& form, std::size_t line)
      : DataError("duplicate entry '" + form + "'", line), form_(form) {}

  const std::string& form() const noexcept { return form_; }

 private:
  std::string form_;
};

}  // namespace uztranslit
