#pragma once

// Finite commutative algebras over a field given by structure constants on a
// chosen basis: e_i e_j = sum_k c[i][j][k] e_k.  A monogenic algebra K[x]/(f)
// is stored the same way on its power basis and remembers f.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dualpair/matrix.hpp"
#include "dualpair/poly.hpp"

namespace dp {

/// Default cap on algebra dimension; the dense checks cost O(n^4).
inline constexpr std::size_t kMaxAlgebraDim = 64;

class Algebra {
 public:
  Algebra() = default;
  Algebra(FieldPtr K, std::size_t n, std::vector<Elem> sc, Vec unit);

  /// K[x]/(f) on the basis 1, x, ..., x^(n-1); f monic, coefficients low to high.
  static Algebra monogenic(FieldPtr K, const poly::Poly& f);
  /// K^n with the idempotent basis.
  static Algebra split(FieldPtr K, std::size_t n);

  const FieldPtr& field() const { return K_; }
  std::size_t dim() const { return n_; }
  const Elem& sc(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * n_ + j) * n_ + k]; }
  const std::vector<Elem>& structure_constants() const { return c_; }
  const Vec& unit() const { return unit_; }
  /// The defining polynomial when the basis is a power basis.
  const std::optional<poly::Poly>& monic_poly() const { return f_; }
  bool is_monogenic() const { return f_.has_value(); }

  Vec zero() const { return Vec(n_, K_->zero()); }
  Vec basis(std::size_t i) const;
  Vec mul(const Vec& a, const Vec& b) const;
  Vec add(const Vec& a, const Vec& b) const;
  Vec sub(const Vec& a, const Vec& b) const;
  Vec scale(const Vec& a, const Elem& s) const;
  Vec pow(const Vec& a, std::size_t k) const;
  /// Matrix of multiplication by a (column j = a e_j).
  Matrix mult_matrix(const Vec& a) const;
  bool is_zero(const Vec& a) const;
  /// Value of a polynomial over K at an element.
  Vec eval(const poly::Poly& f, const Vec& a) const;
  Elem trace(const Vec& a) const;

  /// Same structure constants with entries mapped into L.
  Algebra base_change(FieldPtr L) const;
  /// Failed invariants (commutativity, associativity, unit law); empty if sound.
  std::vector<std::string> check() const;

  bool operator==(const Algebra& o) const;

 private:
  FieldPtr K_;
  std::size_t n_ = 0;
  std::vector<Elem> c_;
  Vec unit_;
  std::optional<poly::Poly> f_;
};

Algebra monogenic_to_sc(FieldPtr K, const poly::Poly& f);
/// Basis e_i (x) e'_j at index i * dim B + j.
Algebra tensor_sc(const Algebra& A, const Algebra& B);

/// Product in A (x) B computed from the factors' structure constants.
Vec tensor_mul(const Algebra& A, const Algebra& B, const Vec& x, const Vec& y);

struct Quotient {
  Algebra algebra;
  Matrix projection;  // dim(A/I) x dim A
  Matrix ideal;       // rows: reduced echelon basis of I
};
/// Quotient by the smallest ideal containing gens.  The quotient basis is the
/// image of the standard basis vectors at the non-pivot columns of the ideal.
Quotient ideal_quotient(const Algebra& A, const std::vector<Vec>& gens);

struct Subalgebra {
  Algebra algebra;
  Matrix inclusion;  // dim A x dim S, columns: basis of S in A
};
/// The subspace spanned by the rows of W, checked to be a unital subalgebra.
/// Its basis is the reduced echelon basis of the row space.
Subalgebra subalgebra(const Algebra& A, const Matrix& W);
/// Kernel of g - g0 (linear maps B -> B'), as a subalgebra of B.
Subalgebra equalizer_subalgebra(const Algebra& B, const Matrix& g, const Matrix& g0);

poly::Poly min_poly(const Algebra& A, const Vec& a);

struct PrimitiveElement {
  Vec g;
  poly::Poly minpoly;  // monic, degree dim A
  Matrix C;            // column k = g^k in the basis of A
  Matrix Cinv;
};
std::optional<PrimitiveElement> find_primitive_element(const Algebra& A);
/// Throws NoPrimitiveElement.
PrimitiveElement primitive_element(const Algebra& A);

/// Nonzero trace-form discriminant (separable algebras over perfect fields).
bool is_etale(const Algebra& A);

/// All roots of m (coefficients in the base field) in the algebra Y.
std::vector<Vec> roots_in_algebra(const Algebra& Y, const poly::Poly& m, std::uint64_t seed = 0);

/// All unital K-algebra homomorphisms X -> Y, as dim Y x dim X matrices,
/// sorted by descending lexicographic order of their entries.
std::vector<Matrix> algebra_homs(const Algebra& X, const Algebra& Y, std::uint64_t seed = 0);

/// Whether the linear map F: X -> Y (dim Y x dim X) is unital and multiplicative.
bool is_algebra_map(const Algebra& X, const Algebra& Y, const Matrix& F);

/// Descending lexicographic comparison of coordinate vectors.
bool lex_greater(const Vec& a, const Vec& b);

json algebra_sc_to_json(const Algebra& A);
Algebra algebra_from_sc_json(FieldPtr K, const json& sc, const json& unit);

}  // namespace dp
