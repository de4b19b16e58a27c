#pragma once

#include <stdexcept>
#include <string>

namespace twodist {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph input. line() is 1-based, 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The graph is complete or null, so it has no two-distance representation.
class DegenerateGraphError : public Error {
 public:
  using Error::Error;
};

// A matrix failed a required property (not an EDM, not PSD, not spherical,
// right-hand side outside the column space, infeasible beta, ...).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Two algebraically equivalent tests disagreed beyond tolerance.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace twodist
