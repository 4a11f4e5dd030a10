#pragma once

// Dense univariate polynomials over a Field, coefficients stored low to high.
// All functions keep results trimmed (no trailing zero coefficients); the
// zero polynomial is the empty vector.

#include <cstdint>
#include <vector>

#include "dualpair/field.hpp"

namespace dp::poly {

using Poly = std::vector<Elem>;

void trim(const Field& F, Poly& f);
long degree(const Poly& f);
bool is_zero(const Poly& f);

Poly constant(const Field& F, const Elem& c);
/// x - r
Poly linear(const Field& F, const Elem& r);
Poly x_power(const Field& F, std::size_t k);

Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly mul(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, const Elem& c);
/// Quotient and remainder; throws NotInvertible when b is zero or its
/// leading coefficient is not a unit.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& a, const Poly& b);
Poly rem(const Field& F, const Poly& a, const Poly& b);
Poly monic(const Field& F, const Poly& a);
/// Monic gcd (zero if both are zero).
Poly gcd(const Field& F, Poly a, Poly b);
/// g = s*a + t*b with g monic.
struct XGcd {
  Poly g, s, t;
};
XGcd xgcd(const Field& F, const Poly& a, const Poly& b);

Poly derivative(const Field& F, const Poly& f);
Elem eval(const Field& F, const Poly& f, const Elem& x);
Poly mulmod(const Field& F, const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Field& F, const Poly& a, const mpz_class& e, const Poly& m);
/// prod (x - r) over the given roots.
Poly from_roots(const Field& F, const std::vector<Elem>& roots);
/// f / gcd(f, f'); in characteristic zero this is the squarefree part.
Poly squarefree_part(const Field& F, const Poly& f);

/// Coefficient map into a field containing (or receiving) the coefficients.
Poly map_coefficients(const Field& from, const Field& to, const Poly& f);

/// Rabin's test over a finite field.
bool is_irreducible(const Field& F, const Poly& f);
/// Degrees (with repetition) of the irreducible factors of a squarefree
/// polynomial over a finite field, by distinct-degree factorisation.
std::vector<std::size_t> factor_degrees(const Field& F, const Poly& f);
/// Smallest monic irreducible polynomial of degree d in canonical order.
Poly find_irreducible(const Field& F, std::size_t d);

std::string to_string(const Field& F, const Poly& f, const char* var = "x");

}  // namespace dp::poly
