#pragma once

#include <stdexcept>
#include <string>

namespace qkcf {

enum class ErrorCode {
  Parse,
  DimensionMismatch,
  Singular,
  IndexOrder,
  IndexRange,
  DuplicatePair,
  JacobiFailure,
  ComplexCoefficientInRealAlgebra,
  OddDimension,
  NotAlmostComplex,
  UnknownCatalogName,
  InvalidParameter,
  PreconditionViolated,
  NotTwoStepNilpotent,
  IntegrableStructure,
  Degenerate,
  InternalInconsistency,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

} // namespace qkcf
