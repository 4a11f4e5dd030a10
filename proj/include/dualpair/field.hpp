#pragma once

// Exact base rings: the rationals, prime fields F_p and towers of simple
// extensions K[t]/(h).  Elements are flat coordinate vectors over the prime
// field; a field object is immutable and shared between all its elements'
// users.

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"

namespace dp {

using json = nlohmann::json;

/// Element of a Field.  `c` holds the coordinates over the prime field
/// (length 1 for Q and F_p).  Prime-field coordinates of F_p elements are
/// integers normalised to [0, p).
struct Elem {
  std::vector<mpq_class> c;

  bool operator==(const Elem&) const = default;
};

enum class FieldKind { Rationals, PrimeField, Extension };

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field : public std::enable_shared_from_this<Field> {
 public:
  /// The rationals.
  static FieldPtr rationals();
  /// F_p; throws CompositeModulus unless p is prime.
  static FieldPtr prime_field(const mpz_class& p);
  /// base[t]/(t^d + c_{d-1} t^{d-1} + ... + c_0).  `modulus` holds c_0..c_{d-1}.
  /// Over a finite base the modulus is checked for irreducibility; over Q it
  /// is accepted as given.
  static FieldPtr extension(FieldPtr base, std::vector<Elem> modulus);

  FieldKind kind() const { return kind_; }
  bool is_finite() const { return kind_ != FieldKind::Rationals && characteristic_ != 0; }
  /// 0 for fields of characteristic zero.
  const mpz_class& characteristic() const { return characteristic_; }
  std::optional<mpz_class> cardinality() const;
  /// Dimension over the prime field.
  std::size_t dim() const { return dim_; }
  /// Degree over the immediate base (1 for prime fields).
  std::size_t degree() const { return kind_ == FieldKind::Extension ? modulus_.size() : 1; }
  const FieldPtr& base() const { return base_; }
  const std::vector<Elem>& modulus() const { return modulus_; }
  FieldPtr prime_field() const;
  FieldPtr ptr() const { return shared_from_this(); }

  bool equals(const Field& other) const;

  Elem zero() const;
  Elem one() const;
  Elem from_int(long v) const;
  /// Image of a rational number; throws CoefficientNotMapped when the
  /// denominator vanishes in characteristic p.
  Elem from_rational(const mpq_class& q) const;
  /// The generator t of an extension, as an element of this field.
  Elem generator() const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  /// Throws NotInvertible for zero (or zero divisors of an unverified extension of Q).
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(const Elem& a, const mpz_class& e) const;
  /// a + b*c
  Elem fma(const Elem& a, const Elem& b, const Elem& c) const { return add(a, mul(b, c)); }

  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const { return a == one(); }
  /// Canonical order: lexicographic on the flat coordinate vector.
  static std::strong_ordering compare(const Elem& a, const Elem& b);

  // Finite fields: canonical enumeration, index 0 is zero.
  Elem element_at(const mpz_class& index) const;
  mpz_class index_of(const Elem& a) const;

  /// True if `sub` occurs in the tower below (or equal to) this field.
  bool has_subfield(const Field& sub) const;
  /// Inclusion of an element of a subfield of the tower.
  Elem embed(const Field& sub, const Elem& x) const;
  /// Preimage of x in the subfield, if x lies there.
  std::optional<Elem> restrict_to(const Field& sub, const Elem& x) const;
  /// Maps an element of `from` to this field: tower inclusion, or reduction
  /// of rationals modulo the characteristic.  Throws CoefficientNotMapped.
  Elem map_from(const Field& from, const Elem& x) const;

  /// Coefficients over the immediate base (extension fields only).
  std::vector<Elem> split(const Elem& a) const;
  Elem join(const std::vector<Elem>& parts) const;

  std::string to_string(const Elem& a) const;
  json to_json(const Elem& a) const;
  Elem from_json(const json& j) const;
  json descriptor() const;
  static FieldPtr from_descriptor(const json& j);
  std::string name() const;

 private:
  Field() = default;

  Elem reduce_prime(mpq_class v) const;
  Elem poly_mul_reduce(const std::vector<Elem>& a, const std::vector<Elem>& b) const;

  FieldKind kind_ = FieldKind::Rationals;
  mpz_class characteristic_ = 0;
  FieldPtr base_;
  std::vector<Elem> modulus_;
  std::size_t dim_ = 1;
};

/// Primality via GMP (BPSW plus 40 Miller-Rabin rounds).
bool is_prime(const mpz_class& n);

/// Parses a field shorthand such as "Q", "F7", "F7^2", "Q(sqrt(2))" or a JSON
/// ring descriptor.
FieldPtr parse_field_spec(const std::string& spec);

}  // namespace dp
