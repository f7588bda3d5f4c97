#pragma once

#include <stdexcept>
#include <string>

namespace gitkit {

enum class ErrorKind {
  DimensionMismatch,
  InvalidInput,
  Unsupported,
  NonPointed,
  EmptyClass,
  Unbounded,
  NotSaturated,
  NotInjective,
  BoundExhausted,
  NotEffective,
  NotDrawable,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gitkit
