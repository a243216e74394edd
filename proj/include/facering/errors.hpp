#pragma once

#include <stdexcept>
#include <string>

namespace facering {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or violated precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An enumeration guard was exceeded; `limit()` names the guard.
class GuardExceeded : public Error {
 public:
  GuardExceeded(std::string limit, const std::string& what)
      : Error(what), limit_(std::move(limit)) {}
  const std::string& limit() const { return limit_; }

 private:
  std::string limit_;
};

}  // namespace facering
