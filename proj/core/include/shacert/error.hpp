#pragma once

#include <stdexcept>
#include <string>

namespace shacert {

enum class ErrorKind {
  RingMismatch,
  Domain,
  UnsupportedCharacteristic,
  InconsistentCounts,
  InvariantViolation,
  WrongBranch,
  ReducibleInput,
  Precondition,
  Parse,
  Internal,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace shacert
