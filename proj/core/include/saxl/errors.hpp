#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace saxl {

/// Raised when a computation would exceed one of the configured caps
/// (element enumeration, class size, point count, graph size, ...).
/// Exceeding a cap is never silently downgraded to an approximation.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested subgroup or object does not exist.
class NotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Data that parsed correctly but failed a declared consistency check.
class CorruptDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace saxl
