#include <random>

#include "dualpair/dual_pair.hpp"
#include "dualpair/gallery.hpp"
#include "test_util.hpp"

using namespace dp;
using namespace dp::testing;
using namespace dp::gallery;

namespace {

FieldPtr QQ() { return Field::rationals(); }

std::vector<DualPair> fixtures() {
  return {trivial_pair(QQ()),
          trivial_pair(Field::prime_field(2)),
          e2_pair(1),
          e2_pair(2),
          e2_pair(mpq_class(-3, 2)),
          supersingular_e2_pair(),
          mu_constant_pair(2, QQ()),
          mu_constant_pair(3, QQ()),
          mu_constant_pair(3, Field::prime_field(7)),
          mu_idempotent_pair(5, QQ()),
          constant_pair(4, QQ())};
}

// A single pairing-matrix entry moved by a small rational.
DualPair perturbed(const DualPair& P, std::mt19937_64& rng) {
  for (;;) {
    Matrix phi = P.phi();
    const std::size_t i = rng() % P.dim(), j = rng() % P.dim();
    const long num = 1 + static_cast<long>(rng() % 5);
    const long den = 1 + static_cast<long>(rng() % 4);
    const Field& K = *P.field();
    phi.at(i, j) = K.add(phi.at(i, j), K.is_finite() ? K.from_int(num) : K.from_rational(mpq_class(num, den)));
    try {
      return DualPair(P.A(), P.B(), phi);
    } catch (const Error&) {
      // singular: draw again
    }
  }
}

}  // namespace

TEST_CASE("e2_pair matches the published matrices") {
  for (long a : {1L, 2L, 5L, -1L}) {
    CAPTURE(a);
    const DualPair P = e2_pair(a);
    const auto Q = QQ();
    const std::string as = std::to_string(a);
    CHECK(P.phi() == rat(Q, {{"1/4", "1/4", "1/2", "0"}, {"1/4", "1/4", "-1/2", "0"}, {"1/2", "-1/2", "0", "0"}, {"0", "0", "0", as}}));
    const std::string inv = a == 1 ? "1" : a == -1 ? "-1" : "1/" + as;
    CHECK(P.theta() == rat(Q, {{"1", "1", "1", "0"}, {"1", "1", "-1", "0"}, {"1", "-1", "0", "0"}, {"0", "0", "0", inv}}));
    CHECK(verify_axioms(P).ok());
  }
  expect_error(ErrorKind::ZeroParameter, [] { e2_pair(0); });
}

TEST_CASE("supersingular pair") {
  const DualPair P = supersingular_e2_pair();
  CHECK(verify_axioms(P).ok());
  CHECK(P.theta() == P.phi());
  // mu(t) = t (x) 1 + 1 (x) t + t^2 (x) t^2, index i * 4 + j for t^i (x) t^j.
  const auto F2 = P.field();
  Vec expected(16, F2->zero());
  expected[1 * 4 + 0] = expected[0 * 4 + 1] = expected[2 * 4 + 2] = F2->one();
  CHECK(P.comultiplication(Side::A).col_vec(1) == expected);
  CHECK(P.comultiplication(Side::B).col_vec(1) == expected);
}

TEST_CASE("mu and constant pairs") {
  const auto Q = QQ();
  CHECK(mu_constant_pair(2, Q).phi() == rat(Q, {{"1", "0"}, {"1", "1"}}));
  CHECK(constant_pair(2, Q).phi() == rat(Q, {{"1", "1"}, {"0", "1"}}));
  // Phi_{l,m} = l^m: Theta holds the Lagrange idempotents, Phi the Vandermonde.
  const DualPair M5 = mu_constant_pair(5, Q);
  for (long l = 0; l < 5; ++l) {
    mpq_class pw = 1;
    for (long m = 0; m < 5; ++m, pw *= l) CHECK(M5.phi().at(static_cast<std::size_t>(l), static_cast<std::size_t>(m)) == Q->from_rational(pw));
  }
  expect_error(ErrorKind::UnsupportedBase, [] { mu_constant_pair(5, Field::prime_field(3)); });
  expect_error(ErrorKind::UnsupportedBase, [] { mu_constant_pair(3, Field::prime_field(3)); });
  CHECK(mu_idempotent_pair(4, Q).theta().is_identity());
}

TEST_CASE("every fixture passes the axioms; the perturbed e2 pair does not") {
  for (const auto& P : fixtures()) {
    CAPTURE(P.field()->name());
    CAPTURE(P.dim());
    CHECK(verify_axioms(P).ok());
  }
  Matrix phi = e2_pair(1).phi();
  phi.at(2, 2) = QQ()->one();
  const DualPair bad(e2_pair(1).A(), e2_pair(1).B(), phi);
  const AxiomReport rep = verify_axioms(bad);
  CHECK(!rep.ok());
  CHECK(!theta_power_is_one(bad));
}

TEST_CASE("certify records the validation state") {
  DualPair P = e2_pair(3);
  CHECK(P.validation() == Validation::Unchecked);
  CHECK(certify(P).ok());
  CHECK(P.validation() == Validation::AxiomsVerified);
}

TEST_CASE("property: a triple passes the axioms iff its dual does") {
  std::mt19937_64 rng(17);
  for (const auto& P : fixtures()) {
    const DualPair D = dual(P);
    CHECK(dual(D).phi() == P.phi());
    CHECK(verify_axioms(D).ok());
    for (int k = 0; k < 4; ++k) {
      const DualPair X = perturbed(P, rng);
      CHECK(verify_axioms(X).ok() == verify_axioms(dual(X)).ok());
    }
  }
}

TEST_CASE("counits and comultiplication of the mu_2 pair") {
  const auto Q = QQ();
  const DualPair P = mu_constant_pair(2, Q);
  // eps_1: x -> 1 (identity of mu_2), eps_2: y -> 0 (identity of Z/2).
  CHECK(counit(P, Side::A) == vec(Q, {1, 1}));
  CHECK(counit(P, Side::B) == vec(Q, {1, 0}));
  // mu_1(x) = x (x) x; mu_2(y) = y (x) 1 + 1 (x) y - 2 y (x) y.
  CHECK(P.comultiplication(Side::A).col_vec(1) == vec(Q, {0, 0, 0, 1}));
  CHECK(P.comultiplication(Side::B).col_vec(1) == vec(Q, {0, 1, 1, -2}));
}

TEST_CASE("morphisms between mu_2 and Z/2") {
  const auto Q = QQ();
  const DualPair Z2 = constant_pair(2, Q), M2 = mu_constant_pair(2, Q);
  const auto homs = hom_set(Z2, M2);
  REQUIRE(homs.size() == 2);
  const Morphism zero = zero_morphism(Z2, M2);
  int zeros = 0;
  for (const auto& m : homs) {
    CHECK(is_morphism(m));
    zeros += same_morphism(m, zero);
  }
  CHECK(zeros == 1);
  const Morphism& g = same_morphism(homs[0], zero) ? homs[1] : homs[0];
  CHECK(same_morphism(add_morphisms(g, g), zero));
  CHECK(same_morphism(add_morphisms(g, zero), g));
  CHECK(is_isomorphism(g));
  // Over Q, mu_2 and Z/2 are isomorphic.
  CHECK(find_isomorphism(Z2, M2).has_value());
}

TEST_CASE("property: hom sets are abelian groups under addition") {
  const auto Q = QQ();
  const std::vector<std::pair<DualPair, DualPair>> cases = {
      {constant_pair(2, Q), mu_constant_pair(2, Q)},
      {constant_pair(4, Q), constant_pair(4, Q)},
      {e2_pair(1), e2_pair(1)},
      {constant_pair(2, Q), e2_pair(1)}};
  for (const auto& [S, T] : cases) {
    const auto H = hom_set(S, T);
    CAPTURE(H.size());
    auto index = [&](const Morphism& m) {
      for (std::size_t k = 0; k < H.size(); ++k)
        if (same_morphism(H[k], m)) return k;
      return H.size();
    };
    CHECK(index(zero_morphism(S, T)) < H.size());
    for (const auto& a : H)
      for (const auto& b : H) {
        const Morphism ab = add_morphisms(a, b);
        CHECK(index(ab) < H.size());
        CHECK(same_morphism(ab, add_morphisms(b, a)));
      }
    // Associativity on 64 seeded triples.
    std::mt19937_64 rng(H.size());
    for (int t = 0; t < 64; ++t) {
      const Morphism &a = H[rng() % H.size()], &b = H[rng() % H.size()], &c = H[rng() % H.size()];
      CHECK(same_morphism(add_morphisms(add_morphisms(a, b), c), add_morphisms(a, add_morphisms(b, c))));
    }
  }
  // Known sizes: End(Z/4) = Z/4, End(E[2]) over Q with a = 1 is M_2(F_2).
  CHECK(hom_set(constant_pair(4, Q), constant_pair(4, Q)).size() == 4);
  CHECK(hom_set(e2_pair(1), e2_pair(1)).size() == 16);
}

TEST_CASE("composition, identity and duality of morphisms") {
  const auto Q = QQ();
  const DualPair P = constant_pair(4, Q);
  const auto H = hom_set(P, P);
  const Morphism id = identity_morphism(P);
  for (const auto& m : H) {
    CHECK(same_morphism(compose(m, id), m));
    CHECK(same_morphism(compose(id, m), m));
    const Morphism d = dual_morphism(m);
    CHECK(is_morphism(d));
    CHECK(same_morphism(dual_morphism(d), m));
  }
  // Composition is multiplication in End(Z/4) = Z/4.
  const Morphism two = add_morphisms(id, id);
  CHECK(same_morphism(compose(two, two), zero_morphism(P, P)));
}

TEST_CASE("direct sums") {
  const auto Q = QQ();
  const DualPair M2 = mu_constant_pair(2, Q);
  const DirectSum S = direct_sum(M2, M2);
  CHECK(S.pair.dim() == 4);
  CHECK(verify_axioms(S.pair).ok());
  for (const Morphism* m : {&S.inj1, &S.inj2, &S.proj1, &S.proj2}) CHECK(is_morphism(*m));
  CHECK(same_morphism(compose(S.proj1, S.inj1), identity_morphism(M2)));
  CHECK(same_morphism(compose(S.proj2, S.inj1), zero_morphism(M2, M2)));
  const Morphism sum = add_morphisms(compose(S.inj1, S.proj1), compose(S.inj2, S.proj2));
  CHECK(same_morphism(sum, identity_morphism(S.pair)));
}

TEST_CASE("kernels and cokernels of doubling on Z/4") {
  const auto Q = QQ();
  const DualPair P = constant_pair(4, Q);
  const Morphism id = identity_morphism(P);
  const Morphism two = add_morphisms(id, id);
  const KernelResult K = kernel(two);
  CHECK(K.pair.dim() == 2);
  CHECK(verify_axioms(K.pair).ok());
  CHECK(is_morphism(K.map));
  CHECK(same_morphism(compose(two, K.map), zero_morphism(K.pair, P)));
  const KernelResult C = cokernel(two);
  CHECK(C.pair.dim() == 2);
  CHECK(verify_axioms(C.pair).ok());
  CHECK(is_morphism(C.map));
  CHECK(same_morphism(compose(C.map, two), zero_morphism(P, C.pair)));
  // Kernel of the identity is trivial, kernel of zero is everything.
  CHECK(kernel(id).pair.dim() == 1);
  CHECK(kernel(zero_morphism(P, P)).pair.dim() == 4);
  CHECK(cokernel(id).pair.dim() == 1);
}

TEST_CASE("Hopf export and import") {
  for (const auto& P : fixtures()) {
    CAPTURE(P.dim());
    const HopfData H = hopf_export(P);
    CHECK(check_hopf(H).empty());
    const DualPair R = pair_from_hopf(H);
    CHECK(R.phi().is_identity());
    CHECK(verify_axioms(R).ok());
    if (P.dim() <= 4) CHECK(find_isomorphism(R, P).has_value());
  }
  HopfData bad = hopf_export(mu_constant_pair(2, QQ()));
  bad.counit[1] = QQ()->from_int(3);
  CHECK(!check_hopf(bad).empty());
  expect_error(ErrorKind::InvalidHopf, [&] { pair_from_hopf(bad); });
}

TEST_CASE("serialization round trip is byte-stable") {
  for (const auto& P : fixtures()) {
    const json j = pair_to_json(P);
    const DualPair R = pair_from_json(j);
    CHECK(R.phi() == P.phi());
    CHECK(R.A() == P.A());
    CHECK(R.B() == P.B());
    CHECK(pair_to_json(R).dump(2) == j.dump(2));
  }
  json j = pair_to_json(e2_pair(1));
  j["extra"] = 1;
  expect_error(ErrorKind::Parse, [&] { pair_from_json(j); });
}

TEST_CASE("monogenic form of e2") {
  const DualPair P = e2_pair(2);
  const auto M = monogenic_form(P);
  REQUIRE(M.has_value());
  CHECK(M->A().is_monogenic());
  CHECK(verify_axioms(*M).ok());
  CHECK(find_isomorphism(*M, P).has_value());
  // F_2 x F_2 x F_2 has no primitive element over F_2.
  CHECK(!monogenic_form(mu_idempotent_pair(3, Field::prime_field(2))).has_value());
}

TEST_CASE("mismatched shapes") {
  const auto Q = QQ();
  expect_error(ErrorKind::NotInvertible, [&] {
    DualPair(e2_pair(1).A(), e2_pair(1).B(), Matrix(Q, 4, 4));
  });
  expect_error(ErrorKind::MixedBase, [&] {
    DualPair(e2_pair(1).A(), supersingular_e2_pair().B(), Matrix::identity(Q, 4));
  });
}
