#pragma once

// Standard dual pairs used as fixtures and by the CLI.

#include <optional>

#include "dualpair/dual_pair.hpp"

namespace dp::gallery {

/// A = B = R, Phi = [1].
DualPair trivial_pair(FieldPtr R);

/// 2-torsion of y^2 = x^3 - a x over Q.  A = B = Q x Q x Q[t]/(t^2 - a) on the
/// basis (1,0,0), (0,1,0), (0,0,1), (0,0,t).  Throws ZeroParameter for a = 0.
DualPair e2_pair(const mpq_class& a);

/// A = B = F_2[t]/(t^4) with the swap of t and t^2 as pairing matrix.
DualPair supersingular_e2_pair();

/// mu_n against the constant group Z/n: A = R[x]/(x^n - 1),
/// B = R[y]/(y (y - 1) ... (y - n + 1)), theta = sum x^i (x) e_i with e_i the
/// Lagrange idempotent at y = i.  R is Q or F_p with n <= p and p not dividing
/// n; anything else throws UnsupportedBase.
DualPair mu_constant_pair(std::size_t n, FieldPtr R);

/// The same group with B = R^n on its idempotent basis, so Theta = Phi = I.
/// Defined over any field; reduces well at every prime not dividing n.
DualPair mu_idempotent_pair(std::size_t n, FieldPtr R);

/// dual(mu_constant_pair(n, R)).
DualPair constant_pair(std::size_t n, FieldPtr R);

/// Both algebras rewritten on power bases of primitive elements, when these
/// exist; Phi changes to C^t Phi D.
std::optional<DualPair> monogenic_form(const DualPair& P);

}  // namespace dp::gallery
