#include "dualpair/galois.hpp"
#include "dualpair/gallery.hpp"
#include "dualpair/points.hpp"
#include "dualpair/roots.hpp"
#include "test_util.hpp"

using namespace dp;
using namespace dp::testing;
using namespace dp::gallery;

namespace {

FieldPtr QQ() { return Field::rationals(); }

// Quadratic-reciprocity oracle: 2 is a square mod an odd prime p iff p = +-1 mod 8.
bool two_is_square(long p) { return p % 8 == 1 || p % 8 == 7; }

struct Split {
  DualPair R;
  SplittingField sf;
  StructureResult S;
};

Split split_over(DualPair R) {
  Split out{R, splitting_field_finite(R), {}};
  ValidationOutcome v = validate_via_splitting(out.R, out.sf.L, out.sf.zeta);
  REQUIRE(v.valid);
  out.S = *v.structure;
  return out;
}

GaloisData weil_data_a2() {
  const auto Q = QQ();
  const auto L = Field::extension(Q, {Q->from_int(-2), Q->zero()});
  const Elem r = L->generator();
  GaloisData D;
  D.K = Q;
  D.L = L;
  D.sigma = quadratic_conjugation(L);
  // x = 2 e1 + 3 e2 + (0, t) separates the four points O, (0,0), (r,0), (-r,0).
  D.psi = {L->from_int(2), L->from_int(3), r, L->neg(r)};
  D.psi_dual = D.psi;
  for (std::size_t i = 0; i < 4; ++i) {
    D.pairing.emplace_back();
    for (std::size_t j = 0; j < 4; ++j) D.pairing[i].push_back(L->from_int(i == 0 || j == 0 || i == j ? 1 : -1));
  }
  return D;
}

}  // namespace

TEST_CASE("reduce_mod_p") {
  const DualPair R = reduce_mod_p(e2_pair(1), 7);
  CHECK(R.field()->equals(*Field::prime_field(7)));
  CHECK(R.validation() == Validation::AxiomsVerified);
  CHECK(R.phi().at(0, 0) == R.field()->from_rational(mpq_class(1, 4)));
  expect_error(ErrorKind::BadReduction, [] { reduce_mod_p(e2_pair(1), 2); });
  expect_error(ErrorKind::BadReduction, [] { reduce_mod_p(e2_pair(5), 5); });  // Phi_44 = 5 vanishes
  CHECK(verify_axioms(reduce_mod_p(e2_pair(2), 5)).ok());
  expect_error(ErrorKind::BadReduction, [] { reduce_mod_p(mu_constant_pair(5, QQ()), 3); });
  // Reduction commutes with duality.
  for (long p : {3L, 5L, 7L, 11L}) {
    const DualPair P = e2_pair(mpq_class(3, 7));
    if (p == 7 || p == 3) continue;
    CHECK(reduce_mod_p(dual(P), p).phi() == dual(reduce_mod_p(P, p)).phi());
  }
  CHECK(reduce_mod_p(dual(mu_constant_pair(3, QQ())), 7).phi() == dual(reduce_mod_p(mu_constant_pair(3, QQ()), 7)).phi());
}

TEST_CASE("automorphism matrices") {
  const auto F7 = Field::prime_field(7);
  const Split s = split_over(mu_constant_pair(5, F7));
  CHECK(s.sf.degree == 4);
  const EndHdMatrix id = automorphism_matrix(s.R, s.S, [](const Elem& x) { return x; });
  CHECK(id.is_identity());
  const EndHdMatrix M = automorphism_matrix(s.R, s.S, frobenius_automorphism(s.sf.L));
  CHECK(M.d == ElemDivSeq{5});
  CHECK(M.M == std::vector<std::vector<std::int64_t>>{{2}});
  // Monoid homomorphism over powers of Frobenius.
  EndHdMatrix acc = id;
  for (unsigned k = 1; k <= 4; ++k) {
    acc = compose(M, acc);
    CHECK(automorphism_matrix(s.R, s.S, frobenius_automorphism(s.sf.L, k)) == acc);
  }
  CHECK(acc.is_identity());
}

TEST_CASE("Frobenius on E[2] for a = 2 at 5 swaps the irrational points") {
  const Split s = split_over(reduce_mod_p(e2_pair(2), 5));
  CHECK(*s.sf.L->cardinality() == 25);
  const EndHdMatrix M = automorphism_matrix(s.R, s.S, frobenius_automorphism(s.sf.L));
  CHECK(!M.is_identity());
  CHECK(compose(M, M).is_identity());
  expect_error(ErrorKind::NotAPoint, [&] {
    automorphism_matrix(s.R, s.S, [&](const Elem& x) { return s.sf.L->add(x, s.sf.L->one()); });
  });
}

TEST_CASE("frobenius_matrix follows quadratic reciprocity and the cyclotomic character") {
  for (long p : {3L, 5L, 7L, 17L, 23L, 41L}) {
    CAPTURE(p);
    const FrobeniusResult r = frobenius_matrix(e2_pair(2), p);
    CHECK(r.M.d == ElemDivSeq{2, 2});
    CHECK(r.M.is_identity() == two_is_square(p));
  }
  for (long p : {2L, 3L, 7L, 11L, 13L}) {
    const FrobeniusResult r = frobenius_matrix(mu_idempotent_pair(5, QQ()), p);
    CHECK(r.M.M == std::vector<std::vector<std::int64_t>>{{p % 5}});
  }
  // The Vandermonde presentation of mu_5 only reduces well above 5.
  CHECK(frobenius_matrix(mu_constant_pair(5, QQ()), 7).M.M == std::vector<std::vector<std::int64_t>>{{2}});
  expect_error(ErrorKind::CharDividesOrder, [] { frobenius_matrix(mu_idempotent_pair(5, QQ()), 5); });
  expect_error(ErrorKind::BadReduction, [] { frobenius_matrix(e2_pair(2), 2); });
}

TEST_CASE("property: Frobenius matrices at distinct primes commute") {
  std::vector<EndHdMatrix> Ms;
  for (long p : {3L, 5L, 7L, 11L, 13L}) Ms.push_back(frobenius_matrix(e2_pair(2), p).M);
  for (const auto& a : Ms)
    for (const auto& b : Ms) CHECK(compose(a, b) == compose(b, a));
}

TEST_CASE("pair_from_galois_data: mu_2 against Z/2") {
  const auto Q = QQ();
  GaloisData D;
  D.K = D.L = Q;
  D.sigma = [](const Elem& x) { return x; };
  D.psi = {Q->from_int(1), Q->from_int(-1)};
  D.psi_dual = {Q->from_int(0), Q->from_int(1)};
  // (v, b) -> v^b
  D.pairing = {{Q->one(), Q->one()}, {Q->one(), Q->from_int(-1)}};
  const DualPair P = pair_from_galois_data(D);
  CHECK(P.phi() == rat(Q, {{"1", "0"}, {"1", "1"}}));
  // theta = 1 - y + x y
  CHECK(P.theta() == rat(Q, {{"1", "-1"}, {"0", "1"}}));
  CHECK(P.validation() == Validation::AxiomsVerified);
}

TEST_CASE("pair_from_galois_data: the Weil pairing on E[2] for a = 2") {
  const GaloisData D = weil_data_a2();
  const DualPair P = pair_from_galois_data(D);
  CHECK(verify_axioms(P).ok());
  CHECK(find_isomorphism(P, e2_pair(2)).has_value());
  // Points over L, located by their x-value psi, reproduce the table.
  const PointGroup G(P, D.L);
  const auto pts = G.points(Side::A), dpts = G.points(Side::B);
  REQUIRE(pts.size() == 4);
  auto find = [](const std::vector<Vec>& v, const Elem& x) {
    for (const auto& p : v)
      if (p[1] == x) return p;
    FAIL("no point with that label");
    return Vec{};
  };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(G.pairing(find(pts, D.psi[i]), find(dpts, D.psi_dual[j])) == D.pairing[i][j]);
}

TEST_CASE("pair_from_galois_data: trivial and failing inputs") {
  const auto Q = QQ();
  GaloisData T;
  T.K = T.L = Q;
  T.sigma = [](const Elem& x) { return x; };
  T.psi = {Q->from_int(5)};
  T.psi_dual = {Q->from_int(-2)};
  T.pairing = {{Q->one()}};
  const DualPair P = pair_from_galois_data(T);
  CHECK(P.dim() == 1);
  CHECK(P.phi().is_identity());

  GaloisData D = weil_data_a2();
  D.psi[1] = D.psi[0];
  expect_error(ErrorKind::SingularVandermonde, [&] { pair_from_galois_data(D); });

  D = weil_data_a2();
  D.psi[3] = D.L->from_int(7);  // the labels are no longer Galois-stable
  expect_error(ErrorKind::NotDescended, [&] { pair_from_galois_data(D); });

  D = weil_data_a2();
  D.pairing[2][3] = D.pairing[3][2] = D.L->one();  // not a group pairing
  try {
    pair_from_galois_data(D);
    FAIL("accepted a non-group table");
  } catch (const Error& e) {
    CHECK((e.kind() == ErrorKind::AxiomsFailed || e.kind() == ErrorKind::NotInvertible));
  }
}

TEST_CASE("EndHdMatrix helpers") {
  const EndHdMatrix M{{4, 2}, {{1, 2}, {1, 1}}};
  CHECK(M.apply({1, 0}) == HdElement{1, 1});
  CHECK(M.apply({0, 1}) == HdElement{2, 1});
  CHECK(M.is_invertible());
  const EndHdMatrix Z{{4, 2}, {{2, 0}, {0, 1}}};
  CHECK(!Z.is_invertible());
  CHECK(end_str(M) == "[[1 2], [1 1]] on H(4,2)");
}
