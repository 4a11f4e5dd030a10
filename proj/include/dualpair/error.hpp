#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dp {

enum class ErrorKind {
  CompositeModulus,
  ReducibleModulus,
  ZeroDegreeModulus,
  UnsupportedRing,
  NoSuchRoot,
  NotInSubgroup,
  NotInvertible,
  MixedBase,
  NotSubalgebra,
  NoPrimitiveElement,
  AxiomsFailed,
  CoefficientNotMapped,
  InvalidHopf,
  DimensionCapExceeded,
  AdjointNotAlgebraMap,
  NotAField,
  MixedTarget,
  NotAlgebraMap,
  OrderSearchExceeded,
  SeqMismatch,
  MalformedTable,
  CharDividesOrder,
  SplitCountMismatch,
  ZetaOrderTooSmall,
  PrecisionExhausted,
  NotEtale,
  BadReduction,
  NotAPoint,
  SolveFailed,
  NotDescended,
  SingularVandermonde,
  ZeroParameter,
  UnsupportedBase,
  Parse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dp
