#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lexsearch {

// Vertices are dense 1-based ids: 1..n.
using Vertex = std::uint32_t;

// ordering[i - 1] is the vertex numbered at step i.
using Ordering = std::vector<Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 0 when the error is not attached to a single line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidGraphError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

class InvalidPrefixError : public Error {
 public:
  InvalidPrefixError(std::size_t position, const std::string& what)
      : Error("prefix position " + std::to_string(position) + ": " + what),
        position_(position) {}

  // 1-based position of the first offending prefix entry.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Raised by the fast engines when invariant checking is enabled and a
// materialized label or handle disagrees with the engine state.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace lexsearch
