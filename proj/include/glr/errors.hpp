#pragma once

#include <stdexcept>
#include <string>

namespace glr {

enum class ErrorKind {
  DimensionMismatch,
  NotUnimodular,
  NotInvertible,
  NotFiniteOrder,
  DegreeOutOfRange,
  NegativeDegree,
  NegativeBound,
  CompositionNotZero,
  OrderMismatch,
  OrderNotPrime,
  NotOddPrime,
  PrimeDoesNotDivideOrder,
  NotSquareFree,
  NotACounterexample,
  InternalInconsistency,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// Single exception type carrying a machine-checkable kind; what() always
// starts with the kind name.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& detail);

}  // namespace glr
