#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clutterlab {

// Base of every error raised by the library. Each subclass maps to one
// failure kind the CLI turns into an exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Two edges where one contains the other.
class AntichainViolation : public Error {
 public:
  using Error::Error;
};

class DuplicateEdge : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

/// A deletion/contraction assignment that empties an edge. The result would be
/// the whole ring, which is not a minor.
class UnitIdeal : public Error {
 public:
  using Error::Error;
};

class NotUniform : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  using Error::Error;
};

/// A checked theorem implication failed on a concrete instance.
class ImplicationViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace clutterlab
