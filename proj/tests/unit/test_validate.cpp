#include <random>

#include "dualpair/galois.hpp"
#include "dualpair/gallery.hpp"
#include "dualpair/roots.hpp"
#include "dualpair/validate.hpp"
#include "test_util.hpp"

using namespace dp;
using namespace dp::testing;
using namespace dp::gallery;

namespace {

FieldPtr QQ() { return Field::rationals(); }
FieldPtr F(long p) { return Field::prime_field(p); }

DualPair with_entry(const DualPair& P, std::size_t i, std::size_t j, const Elem& v) {
  Matrix phi = P.phi();
  phi.at(i, j) = v;
  return DualPair(P.A(), P.B(), phi);
}

bool reconstructs(const StructureResult& S) {
  for (std::size_t i = 0; i < S.table.n; ++i)
    for (std::size_t j = 0; j < S.table.n; ++j)
      if (hd_pairing(S.d, S.point_bijection[i], S.dual_bijection[j]) != S.table.T[i][j]) return false;
  return true;
}

}  // namespace

TEST_CASE("splitting_field_finite") {
  const SplittingField s3 = splitting_field_finite(mu_constant_pair(3, F(5)));
  CHECK(s3.degree == 2);
  CHECK(*s3.L->cardinality() == 25);
  const SplittingField s7 = splitting_field_finite(reduce_mod_p(e2_pair(1), 7));
  CHECK(*s7.L->cardinality() == 49);
  CHECK(multiplicative_order(*s7.L, s7.zeta, 4) == 4);
  expect_error(ErrorKind::CharDividesOrder, [] { splitting_field_finite(supersingular_e2_pair()); });
  // a = 3 is not a square mod 7, but F_49 is still enough.
  CHECK(splitting_field_finite(reduce_mod_p(e2_pair(3), 7)).degree == 2);
}

TEST_CASE("validate_via_splitting") {
  DualPair P = reduce_mod_p(e2_pair(1), 7);
  P.set_validation(Validation::Unchecked);
  const SplittingField sf = splitting_field_finite(P);
  const ValidationOutcome v = validate_via_splitting(P, sf.L, sf.zeta);
  REQUIRE(v.valid);
  CHECK(v.structure->d == ElemDivSeq{2, 2});
  CHECK(reconstructs(*v.structure));
  CHECK(P.validation() == Validation::AxiomsVerified);

  DualPair M5 = base_change(mu_constant_pair(5, QQ()), F(11));
  const auto F11 = F(11);
  const ValidationOutcome v5 = validate_via_splitting(M5, F11, root_of_unity(*F11, 5));
  REQUIRE(v5.valid);
  CHECK(v5.structure->d == ElemDivSeq{5});

  DualPair bad = with_entry(P, 2, 2, F(7)->one());
  const ValidationOutcome vb = validate_via_splitting(bad, sf.L, sf.zeta);
  CHECK(!vb.valid);
  CHECK(!vb.reason.empty());
  CHECK(bad.validation() == Validation::Unchecked);

  DualPair P3 = reduce_mod_p(e2_pair(3), 7);
  expect_error(ErrorKind::SplitCountMismatch, [&] { validate_via_splitting(P3, F(7), F(7)->one()); });
}

TEST_CASE("property: validate_via_splitting agrees with the axioms on perturbations") {
  std::mt19937_64 rng(77);
  const DualPair base = reduce_mod_p(e2_pair(1), 7);
  const SplittingField sf = splitting_field_finite(base);
  for (int t = 0; t < 10; ++t) {
    Matrix phi = base.phi();
    phi.at(rng() % 4, rng() % 4) = F(7)->from_int(static_cast<long>(rng() % 7));
    DualPair X;
    try {
      X = DualPair(base.A(), base.B(), phi);
    } catch (const Error&) {
      continue;
    }
    const bool axioms = verify_axioms(X).ok();
    try {
      CHECK(validate_via_splitting(X, sf.L, sf.zeta).valid == axioms);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SplitCountMismatch);
      CHECK(!axioms);
    }
  }
}

TEST_CASE("group_structure examples") {
  const auto Q = QQ();
  CHECK(group_structure(e2_pair(1), Q->from_int(-1)).d == ElemDivSeq{2, 2});
  CHECK(group_structure(e2_pair(1)).d == ElemDivSeq{2, 2});
  CHECK(group_structure(e2_pair(2)).d == ElemDivSeq{2});
  CHECK(group_structure(trivial_pair(Q)).d.empty());
  CHECK(group_structure(mu_constant_pair(4, Q)).d == ElemDivSeq{2});
  // Z/4 is rational but its characters need i.
  expect_error(ErrorKind::ZetaOrderTooSmall, [&] { group_structure(constant_pair(4, Q)); });
  const auto Qi = Field::extension(Q, {Q->one(), Q->zero()});
  CHECK(group_structure(base_change(constant_pair(4, Q), Qi)).d == ElemDivSeq{4});
  // mu_3 over F_7 with zeta of order 3.
  const auto F7 = F(7);
  const StructureResult S = group_structure(mu_constant_pair(3, F7), root_of_unity(*F7, 3));
  CHECK(S.d == ElemDivSeq{3});
  CHECK(S.zeta_order == 3);
  CHECK(reconstructs(S));
  CHECK(S.U == std::vector<std::vector<FracCyclic>>{{FracCyclic(1, 3)}});
  expect_error(ErrorKind::ZetaOrderTooSmall, [&] { group_structure(mu_constant_pair(3, F7), F7->from_int(-1)); });
}

TEST_CASE("property: G and its dual have the same structure") {
  const auto Q = QQ();
  const auto F13 = F(13);
  std::vector<DualPair> pairs{e2_pair(1), e2_pair(-1), trivial_pair(Q), mu_constant_pair(2, Q),
                              mu_constant_pair(4, F13), constant_pair(3, F13), mu_idempotent_pair(6, F13)};
  for (const auto& P : pairs) {
    const StructureResult S = group_structure(P), D = group_structure(dual(P));
    CHECK(S.d == D.d);
    CHECK(reconstructs(S));
    // U is the identity pattern diag(1/d_i).
    for (std::size_t i = 0; i < S.d.size(); ++i)
      for (std::size_t j = 0; j < S.d.size(); ++j) CHECK(S.U[i][j] == (i == j ? FracCyclic(1, S.d[i]) : FracCyclic()));
  }
}

TEST_CASE("e2 structure over Q follows squareness of a") {
  for (long a : {1L, 4L, 9L, 2L, 3L, -1L, -4L}) {
    const bool square = a == 1 || a == 4 || a == 9;
    CHECK(group_structure(e2_pair(a)).d == (square ? ElemDivSeq{2, 2} : ElemDivSeq{2}));
  }
}

TEST_CASE("rounding tolerance") {
  CHECK(rounding_tolerance(2, 64).to_double() == 0.5);
  CHECK(rounding_tolerance(4, 64).to_double() == 1.0 / 16);
  CHECK(rounding_tolerance(5, 64).to_double() == 1.0 / 65536);
  CHECK(rounding_tolerance(1, 64).to_double() == 0.5);
  // The separation term sin(pi/n) never wins for n >= 2.
  CHECK(rounding_tolerance(3, 64).to_double() == 1.0 / 16);
  CHECK(default_precision(e2_pair(1)) == 128);
  CHECK(default_precision(e2_pair(mpq_class("123456789012345678901234567890123456789"))) == 4 * 127);
}

TEST_CASE("validate_numeric_q") {
  const auto Q = QQ();
  const NumericOutcome r = validate_numeric_q(e2_pair(2));
  REQUIRE(r.valid);
  CHECK(r.d == ElemDivSeq{2, 2});
  CHECK(r.precision == 128);
  CHECK(validate_numeric_q(mu_constant_pair(3, Q)).d == ElemDivSeq{3});
  CHECK(validate_numeric_q(mu_idempotent_pair(6, Q)).d == ElemDivSeq{6});
  CHECK(validate_numeric_q(direct_sum(mu_constant_pair(2, Q), mu_constant_pair(2, Q)).pair).d == ElemDivSeq{2, 2});
  const NumericOutcome bad = validate_numeric_q(with_entry(e2_pair(1), 2, 2, Q->one()));
  CHECK(!bad.valid);
  expect_error(ErrorKind::UnsupportedRing, [] { validate_numeric_q(supersingular_e2_pair()); });
  const Algebra N = Algebra::monogenic(Q, {Q->zero(), Q->zero(), Q->one()});
  expect_error(ErrorKind::NotEtale, [&] { validate_numeric_q(DualPair(N, N, Matrix::identity(Q, 2))); });
}

TEST_CASE("property: numeric validation never accepts what the axioms reject") {
  std::mt19937_64 rng(3);
  const auto Q = QQ();
  std::vector<DualPair> pairs{e2_pair(1), e2_pair(2), mu_constant_pair(3, Q), mu_idempotent_pair(4, Q)};
  int invalid = 0, total = 0;
  for (const auto& P : pairs)
    for (int t = 0; t < 6; ++t) {
      const std::size_t i = rng() % P.dim(), j = rng() % P.dim();
      const Elem shift = Q->from_rational(mpq_class(1 + static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 3)));
      DualPair X;
      try {
        X = with_entry(P, i, j, Q->add(P.phi().at(i, j), shift));
      } catch (const Error&) {
        continue;
      }
      ++total;
      const NumericOutcome r = validate_numeric_q(X);
      CHECK(r.valid == verify_axioms(X).ok());
      invalid += !r.valid;
    }
  CHECK(invalid == total);
}

TEST_CASE("property: numeric and splitting validation agree on the gallery") {
  const auto Q = QQ();
  std::vector<DualPair> pairs{e2_pair(1), e2_pair(2), e2_pair(-1), mu_constant_pair(2, Q), mu_constant_pair(3, Q),
                              mu_idempotent_pair(5, Q), constant_pair(3, Q)};
  for (const auto& P : pairs) {
    const NumericOutcome r = validate_numeric_q(P);
    REQUIRE(r.valid);
    int checked = 0;
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
      if (P.dim() % p == 0) continue;
      DualPair R;
      try {
        R = reduce_mod_p(P, p);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadReduction);
        continue;
      }
      const SplittingField sf = splitting_field_finite(R);
      const ValidationOutcome v = validate_via_splitting(R, sf.L, sf.zeta);
      REQUIRE(v.valid);
      CHECK(v.structure->d == r.d);
      ++checked;
    }
    CHECK(checked > 5);
  }
}
