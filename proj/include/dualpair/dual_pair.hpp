#pragma once

// Dual pairs (A, B, Phi) and their morphisms.  Phi is stored with rows
// indexed by the basis of A and columns by the basis of B; Theta is the
// inverse transpose of Phi and holds the coefficients of theta in A (x) B.
// Elements of A (x) B are flat vectors with index i * dim B + j.

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dualpair/algebra.hpp"

namespace dp {

enum class Validation { Unchecked, AxiomsVerified, NumericallyVerified };
enum class Side { A, B };

std::string to_string(Validation v);

class DualPair {
 public:
  DualPair() = default;
  /// Throws MixedBase, Parse (dimension mismatch) or NotInvertible.
  DualPair(Algebra A, Algebra B, Matrix phi);

  const FieldPtr& field() const { return A_.field(); }
  std::size_t dim() const { return A_.dim(); }
  const Algebra& A() const { return A_; }
  const Algebra& B() const { return B_; }
  const Algebra& algebra(Side s) const { return s == Side::A ? A_ : B_; }
  const Matrix& phi() const { return phi_; }
  const Matrix& theta() const { return theta_; }

  Validation validation() const { return validation_; }
  void set_validation(Validation v) { validation_ = v; }

  /// Matrix of mu_1 (A -> A (x) A) or mu_2 (B -> B (x) B); n^2 x n.
  /// Computed once per pair and shared between copies.
  const Matrix& comultiplication(Side s) const;

 private:
  struct Cache {
    std::once_flag once[2];
    Matrix mu[2];
  };

  Algebra A_, B_;
  Matrix phi_, theta_;
  Validation validation_ = Validation::Unchecked;
  std::shared_ptr<Cache> cache_;
};

const Matrix& theta_of(const DualPair& P);
const Matrix& comultiplication(const DualPair& P, Side s);
/// eps_1(a_i) = Phi(a_i, 1_B) or eps_2(b_j) = Phi(1_A, b_j).
Vec counit(const DualPair& P, Side s);

struct AxiomReport {
  std::vector<std::string> failures;  // "(k) ..." with a witness basis pair
  bool ok() const { return failures.empty(); }
};

/// Checks that eps_1, eps_2, mu_1, mu_2 are unital and multiplicative on basis
/// pairs, and that theta^n = 1 in A (x) B.
AxiomReport verify_axioms(const DualPair& P);
/// theta^n = 1 in A (x) B, exactly.
bool theta_power_is_one(const DualPair& P);
/// verify_axioms, recording AxiomsVerified on success.
AxiomReport certify(DualPair& P);

DualPair base_change(const DualPair& P, const FieldPtr& L);
DualPair dual(const DualPair& P);

/// A morphism (f: A' -> A, g: B -> B') from `source` = (A, B, Phi) to
/// `target` = (A', B', Phi').  F is dim A x dim A', G is dim B' x dim B.
struct Morphism {
  DualPair source, target;
  Matrix F, G;
};

/// G determined by adjointness, G = Phi'^-1 F^t Phi.
Matrix adjoint_of(const DualPair& source, const DualPair& target, const Matrix& F);
/// Builds (F, adjoint G); throws NotAlgebraMap or AdjointNotAlgebraMap.
Morphism morphism_from_f(const DualPair& source, const DualPair& target, const Matrix& F);
/// Algebra maps and adjointness all hold.
bool is_morphism(const Morphism& m);

Morphism identity_morphism(const DualPair& P);
/// f0 = 1_A . eps'_1, g0 = 1_B' . eps_2.
Morphism zero_morphism(const DualPair& source, const DualPair& target);
/// second o first.
Morphism compose(const Morphism& second, const Morphism& first);
/// (G, F) from dual(target) to dual(source).
Morphism dual_morphism(const Morphism& m);
bool same_morphism(const Morphism& a, const Morphism& b);
/// Both components invertible.
bool is_isomorphism(const Morphism& m);

/// All morphisms source -> target, sorted like algebra_homs on F.
std::vector<Morphism> hom_set(const DualPair& source, const DualPair& target, std::uint64_t seed = 0);
Morphism add_morphisms(const Morphism& m1, const Morphism& m2);
/// The first isomorphism in hom_set, if any.
std::optional<Morphism> find_isomorphism(const DualPair& P, const DualPair& Q, std::uint64_t seed = 0);

struct DirectSum {
  DualPair pair;
  Morphism inj1, inj2;    // P -> P (+) P', P' -> P (+) P'
  Morphism proj1, proj2;  // P (+) P' -> P, P (+) P' -> P'
};
DirectSum direct_sum(const DualPair& P, const DualPair& Pp);

struct KernelResult {
  DualPair pair;
  Morphism map;  // kernel -> source, or target -> cokernel
};
KernelResult kernel(const Morphism& m);
KernelResult cokernel(const Morphism& m);

struct HopfData {
  Algebra algebra;
  Matrix comult;  // n^2 x n
  Vec counit;
};
/// Failed Hopf-algebra axioms; empty if sound.
std::vector<std::string> check_hopf(const HopfData& H);
/// Throws AxiomsFailed.
HopfData hopf_export(const DualPair& P);
/// (A, A^dual, identity); throws InvalidHopf.
DualPair pair_from_hopf(const HopfData& H);

/// File format: {"base", "f" | "sc_a"+"unit_a", "g" | "sc_b"+"unit_b", "phi"}.
json pair_to_json(const DualPair& P);
DualPair pair_from_json(const json& j);
DualPair load_pair(const std::string& path);
void save_pair(const DualPair& P, const std::string& path);

}  // namespace dp
