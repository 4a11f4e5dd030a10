#include "dualpair/error.hpp"

namespace dp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CompositeModulus: return "CompositeModulus";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::ZeroDegreeModulus: return "ZeroDegreeModulus";
    case ErrorKind::UnsupportedRing: return "UnsupportedRing";
    case ErrorKind::NoSuchRoot: return "NoSuchRoot";
    case ErrorKind::NotInSubgroup: return "NotInSubgroup";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::MixedBase: return "MixedBase";
    case ErrorKind::NotSubalgebra: return "NotSubalgebra";
    case ErrorKind::NoPrimitiveElement: return "NoPrimitiveElement";
    case ErrorKind::AxiomsFailed: return "AxiomsFailed";
    case ErrorKind::CoefficientNotMapped: return "CoefficientNotMapped";
    case ErrorKind::InvalidHopf: return "InvalidHopf";
    case ErrorKind::DimensionCapExceeded: return "DimensionCapExceeded";
    case ErrorKind::AdjointNotAlgebraMap: return "AdjointNotAlgebraMap";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::MixedTarget: return "MixedTarget";
    case ErrorKind::NotAlgebraMap: return "NotAlgebraMap";
    case ErrorKind::OrderSearchExceeded: return "OrderSearchExceeded";
    case ErrorKind::SeqMismatch: return "SeqMismatch";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::CharDividesOrder: return "CharDividesOrder";
    case ErrorKind::SplitCountMismatch: return "SplitCountMismatch";
    case ErrorKind::ZetaOrderTooSmall: return "ZetaOrderTooSmall";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::NotEtale: return "NotEtale";
    case ErrorKind::BadReduction: return "BadReduction";
    case ErrorKind::NotAPoint: return "NotAPoint";
    case ErrorKind::SolveFailed: return "SolveFailed";
    case ErrorKind::NotDescended: return "NotDescended";
    case ErrorKind::SingularVandermonde: return "SingularVandermonde";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::UnsupportedBase: return "UnsupportedBase";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace dp
