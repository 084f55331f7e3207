#pragma once

#include <stdexcept>
#include <string>

namespace convlab {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates an operation's stated precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Instance exceeds a configured size guard (oracle order, cut enumeration).
class GuardError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace convlab
