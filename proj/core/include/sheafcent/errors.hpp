// errors.hpp — exception hierarchy shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace sheafcent {

// Base class for all library-raised failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed textual input (edge lists, opinion/relation files, config).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, long line)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  explicit ParseError(const std::string& msg) : Error(msg), line_(-1) {}
  long line() const noexcept { return line_; }

 private:
  long line_;
};

// A file could not be opened, read, or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// An opinion magnitude fell below the floor required for disclosure ratios.
class SingularOpinionError : public Error {
 public:
  using Error::Error;
};

// A centrality denominator (total energy) is zero or not finite.
class DegenerateEnergyError : public Error {
 public:
  using Error::Error;
};

// An underlying numeric routine failed to converge or produced non-finite data.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace sheafcent
