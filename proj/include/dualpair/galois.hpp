#pragma once

// Galois action on the points of a dual pair, Frobenius at good primes, and
// the reverse direction: a dual pair from explicit Galois-equivariant data.

#include <functional>

#include "dualpair/validate.hpp"

namespace dp {

/// Endomorphism of H_d acting on coordinate columns: image of e_i is column i,
/// entry (k, i) taken modulo d_k.
struct EndHdMatrix {
  ElemDivSeq d;
  std::vector<std::vector<std::int64_t>> M;

  bool is_identity() const;
  HdElement apply(const HdElement& x) const;
  /// Bijective on H_d.
  bool is_invertible() const;
  friend bool operator==(const EndHdMatrix&, const EndHdMatrix&) = default;
};

/// a o b.
EndHdMatrix compose(const EndHdMatrix& a, const EndHdMatrix& b);
json end_to_json(const EndHdMatrix& M);
std::string end_str(const EndHdMatrix& M);

using FieldAut = std::function<Elem(const Elem&)>;

/// x -> x^p on a finite field of characteristic p (powered `power` times).
FieldAut frobenius_automorphism(const FieldPtr& L, unsigned power = 1);
/// The nontrivial automorphism of a quadratic extension t^2 + b t + c.
FieldAut quadratic_conjugation(const FieldPtr& L);

/// Entry-wise reduction of a pair over Q; throws BadReduction when a
/// denominator is divisible by p, Phi becomes singular or the axioms fail.
DualPair reduce_mod_p(const DualPair& P, const mpz_class& p);

/// M(sigma) with sigma P_i = sum_k M(sigma)_{k,i} P_k, found by locating
/// sigma P_i among the points of S and checked against
/// lambda<sigma P_i, Q_j> = sum_k M_{k,i} U_{k,j}.  S must come from
/// validate_via_splitting or group_structure over L.  Throws NotAPoint,
/// SolveFailed.
EndHdMatrix automorphism_matrix(const DualPair& P, const StructureResult& S, const FieldAut& sigma);

struct FrobeniusResult {
  mpz_class p;
  EndHdMatrix M;
  std::size_t field_degree = 1;  // [L : F_p]
};

/// Reduce, split, validate, then the matrix of x -> x^p.  The matrix depends
/// on the canonical point order; only its conjugacy class is intrinsic.
/// Throws BadReduction, CharDividesOrder.
FrobeniusResult frobenius_matrix(const DualPair& P, const mpz_class& p);

struct GaloisData {
  FieldPtr K, L;
  FieldAut sigma;                             // generates Gal(L/K)
  std::vector<Elem> psi, psi_dual;            // injective labels in L
  std::vector<std::vector<Elem>> pairing;     // <v_i, v'_j> in L
};

/// A = K[x]/(prod (x - psi(v))), B = K[y]/(prod (y - psi'(v'))) and theta the
/// interpolant of the pairing.  Throws NotDescended, SingularVandermonde,
/// AxiomsFailed, Parse (shape).
DualPair pair_from_galois_data(const GaloisData& D);

}  // namespace dp
