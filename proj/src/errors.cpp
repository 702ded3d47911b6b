#include "glr/errors.hpp"

namespace glr {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::NotFiniteOrder: return "NotFiniteOrder";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::NegativeDegree: return "NegativeDegree";
    case ErrorKind::NegativeBound: return "NegativeBound";
    case ErrorKind::CompositionNotZero: return "CompositionNotZero";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::OrderNotPrime: return "OrderNotPrime";
    case ErrorKind::NotOddPrime: return "NotOddPrime";
    case ErrorKind::PrimeDoesNotDivideOrder: return "PrimeDoesNotDivideOrder";
    case ErrorKind::NotSquareFree: return "NotSquareFree";
    case ErrorKind::NotACounterexample: return "NotACounterexample";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind) {}

void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace glr
