#pragma once

// Deciding whether a triple (A, B, Phi) is a dual pair, and computing the
// group structure of its points, from the table of pairing values.

#include <optional>
#include <string>

#include "dualpair/abelian.hpp"
#include "dualpair/dual_pair.hpp"
#include "dualpair/numeric.hpp"

namespace dp {

struct SplittingField {
  FieldPtr L;
  Elem zeta;  // order n
  std::size_t degree = 1;
};

/// A common splitting field over a finite base containing the n-th roots of
/// unity.  Throws CharDividesOrder, or NotEtale if an algebra is not reduced.
SplittingField splitting_field_finite(const DualPair& P);

struct StructureResult {
  FieldPtr field;
  Elem zeta;
  std::int64_t zeta_order = 1;
  ElemDivSeq d;
  /// A-side points, and points of the subalgebra B' seen by them (all of B
  /// when every point is rational).
  std::vector<Vec> points, dual_points;
  std::vector<HdElement> point_bijection, dual_bijection;
  /// Indices of the points P_i, Q_j at the unit vectors of H_d.
  std::vector<std::size_t> generators, dual_generators;
  PairingTable table;
  std::vector<std::vector<FracCyclic>> U;
};

struct ValidationOutcome {
  bool valid = false;
  std::string reason;
  std::optional<StructureResult> structure;
};

/// Needs n points on each side over L and zeta of order n.  Throws
/// SplitCountMismatch.  A Valid answer is confirmed by verify_axioms and
/// recorded on P.
ValidationOutcome validate_via_splitting(DualPair& P, const FieldPtr& L, const Elem& zeta, std::uint64_t seed = 0);

/// Structure of G(K) for a valid pair over K.  Without zeta, a root of unity
/// of order exp G(K) is read off the pairing values.  Throws
/// ZetaOrderTooSmall, or AxiomsFailed if the table is not a group table.
StructureResult group_structure(const DualPair& P, const std::optional<Elem>& zeta = std::nullopt,
                                std::uint64_t seed = 0);

json structure_to_json(const StructureResult& S);

struct NumericOutcome {
  bool valid = false;
  std::string reason;
  ElemDivSeq d;
  std::vector<HdElement> point_bijection, dual_bijection;
  std::vector<std::vector<num::BigComplex>> points, dual_points;
  PairingTable table;
  mpfr_prec_t precision = 0;
};

/// Doublings of the working precision before giving up.
inline constexpr int kMaxPrecisionDoublings = 8;

/// max(128, 4 * largest bit length of a numerator or denominator of Phi).
mpfr_prec_t default_precision(const DualPair& P);

/// Rounding tolerance min(2^(-phi(n)^2), sin(pi/n)) for the pairing values.
num::BigFloat rounding_tolerance(std::size_t n, mpfr_prec_t prec);

/// Validation over Q through complex points and an exact theta^n = 1 check.
/// prec = 0 selects default_precision.  Throws UnsupportedRing, NotEtale,
/// PrecisionExhausted.
NumericOutcome validate_numeric_q(const DualPair& P, mpfr_prec_t prec = 0);

json numeric_to_json(const NumericOutcome& r);

}  // namespace dp
