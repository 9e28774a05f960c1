#pragma once

#include <stdexcept>
#include <string>

namespace braidlab {

// Base class for every error raised by the library. Callers that only care
// about "bad input" can catch this; the subclasses name the failed contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class StrandMismatch : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotTubePreserving : public Error {
 public:
  using Error::Error;
};

}  // namespace braidlab
