#pragma once

#include <stdexcept>
#include <string>

namespace gaschutz {

// Base for all library errors. The CLI maps every Error to exit status 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
public:
  using Error::Error;
};

// Raised when a closure grows past the configured order cap.
class OrderCapExceeded : public Error {
public:
  using Error::Error;
};

class PreconditionError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

} // namespace gaschutz
