#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphmon {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: graph files, element literals, vertex lists.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was applied outside its domain (cyclic graph for a normal
/// form, non-hereditary set for saturation, non-cofinal graph for
/// classification, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap (lattice vertex cap, reduct-set cap) was hit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace graphmon
