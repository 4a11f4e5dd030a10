#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dualpair/field.hpp"
#include "dualpair/frac_cyclic.hpp"
#include "dualpair/poly.hpp"

namespace dp {

/// Fields up to this size are searched exhaustively.
inline constexpr unsigned long kExhaustiveRootSearch = 64;

/// All roots in S of f (coefficients in K, which must map into S), without
/// repetition and in ascending canonical order.  Over Q and simple
/// extensions of Q the candidates come from complex approximations and each
/// is verified exactly.
std::vector<Elem> roots_in_ring(const Field& K, const poly::Poly& f, const Field& S, std::uint64_t seed = 0);

/// Same, with f already over S.
std::vector<Elem> roots_in_field(const Field& S, const poly::Poly& f, std::uint64_t seed = 0);

/// Multiplicative order of a unit of a finite field, given that it divides
/// `bound`; returns 0 if x^bound != 1.
std::uint64_t multiplicative_order(const Field& S, const Elem& x, std::uint64_t bound);

/// zeta = g^((|S|-1)/n) for the first g in canonical order for which this has
/// order exactly n.
Elem root_of_unity(const Field& S, std::uint64_t n);

/// k/n with beta = zeta^k.
FracCyclic dlog_mu(const Field& S, const Elem& zeta, const Elem& beta, std::uint64_t n);

/// Roots of a monic squarefree f in the etale Q-algebra Q[t]/(h), with
/// elements written in the power basis of t.  `h` is monic (low to high,
/// leading 1 included); each coefficient of f is a vector of length deg h.
/// Candidates are passed to `verify`, which must check them exactly.
std::vector<std::vector<mpq_class>> q_power_basis_roots(const std::vector<mpq_class>& h,
                                                        const std::vector<std::vector<mpq_class>>& f,
                                                        const std::function<bool(const std::vector<mpq_class>&)>& verify);

/// Degree over the finite field K of the splitting field of f.
std::size_t splitting_degree(const Field& K, const poly::Poly& f);
/// K[t]/(h) with h the first monic irreducible polynomial of degree m in
/// canonical order; K itself when m = 1.
FieldPtr extension_of_degree(const FieldPtr& K, std::size_t m);

/// Prime factors of n without multiplicity.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace dp
