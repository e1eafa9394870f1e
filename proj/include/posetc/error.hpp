#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace posetc {

enum class ErrorKind {
  Parse,
  InvalidName,
  DuplicateElement,
  UnknownElement,
  CycleDetected,
  NotPartialOrder,
  TooLarge,
  BaseMismatch,
  NotALattice,
  AntichainOrderNotLattice,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by from_relations when the generated closure is not antisymmetric.
/// The cycle lists element names in order; the last one is strictly below the
/// first.
class CycleError : public Error {
 public:
  explicit CycleError(std::vector<std::string> cycle);

  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

}  // namespace posetc
