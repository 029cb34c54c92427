#pragma once

#include <stdexcept>
#include <string>

namespace ohl {

enum class ErrorKind {
  DuplicateEntry,
  OutOfRange,
  ArityMismatch,
  DegreeMismatch,
  NotDegreeZero,
  BadArity,
  BadSector,
  NotBinary,
  InhomogeneousInput,
  NegativeGenerator,
  ParseError,
  UnknownStructure,
  DomainMismatch,
  InvalidValue,
};

const char* kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ohl
