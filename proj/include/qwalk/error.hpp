#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

enum class ErrorKind {
  NotUnitary,
  DegenerateCoin,
  CapExceeded,
  ParityViolation,
  PreconditionFailed,
  NonConvergent,
  PoleAtC,
  OutOfWindow,
  InvalidArgument,
  SelfCheckFailed,
};

const char* to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qwalk
