#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mbgram {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

class NonIntegralResult : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class MalformedComponent : public Error {
 public:
  using Error::Error;
};

class UnclassifiableComponent : public Error {
 public:
  using Error::Error;
};

class SharedEndpoint : public Error {
 public:
  using Error::Error;
};

/// Internal invariant of the fraction-free elimination was violated.
class EliminationError : public Error {
 public:
  using Error::Error;
};

class SchemaMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace mbgram
