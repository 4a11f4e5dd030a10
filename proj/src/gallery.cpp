#include "dualpair/gallery.hpp"

#include "dualpair/error.hpp"

namespace dp::gallery {

DualPair trivial_pair(FieldPtr R) {
  const Algebra A = Algebra::monogenic(R, poly::x_power(*R, 1));
  return DualPair(A, A, Matrix::identity(R, 1));
}

DualPair e2_pair(const mpq_class& a) {
  if (a == 0) throw Error(ErrorKind::ZeroParameter, "e2_pair needs a != 0");
  const FieldPtr Q = Field::rationals();
  std::vector<Elem> sc(64, Q->zero());
  auto set = [&](int i, int j, int k, const Elem& v) {
    sc[(i * 4 + j) * 4 + k] = v;
    sc[(j * 4 + i) * 4 + k] = v;
  };
  set(0, 0, 0, Q->one());
  set(1, 1, 1, Q->one());
  set(2, 2, 2, Q->one());
  set(2, 3, 3, Q->one());
  set(3, 3, 2, Q->from_rational(a));
  const Vec unit{Q->one(), Q->one(), Q->one(), Q->zero()};
  const Algebra A(Q, 4, std::move(sc), unit);
  const std::string as = a.get_str();
  const Matrix phi = Matrix::from_rationals(Q, {{"1/4", "1/4", "1/2", "0"},
                                                {"1/4", "1/4", "-1/2", "0"},
                                                {"1/2", "-1/2", "0", "0"},
                                                {"0", "0", "0", as}});
  return DualPair(A, A, phi);
}

DualPair supersingular_e2_pair() {
  const FieldPtr F2 = Field::prime_field(2);
  const Algebra A = Algebra::monogenic(F2, poly::x_power(*F2, 4));
  const Matrix phi = Matrix::from_rationals(F2, {{"1", "0", "0", "0"}, {"0", "0", "1", "0"}, {"0", "1", "0", "0"}, {"0", "0", "0", "1"}});
  return DualPair(A, A, phi);
}

namespace {

poly::Poly x_n_minus_one(const Field& R, std::size_t n) {
  return poly::sub(R, poly::x_power(R, n), poly::constant(R, R.one()));
}

}  // namespace

DualPair mu_constant_pair(std::size_t n, FieldPtr R) {
  if (n == 0) throw Error(ErrorKind::UnsupportedBase, "n must be positive");
  if (R->kind() == FieldKind::Extension) throw Error(ErrorKind::UnsupportedBase, "base must be Q or a prime field");
  if (R->kind() == FieldKind::PrimeField) {
    const mpz_class& p = R->characteristic();
    if (p < static_cast<unsigned long>(n) || mpz_class(static_cast<unsigned long>(n)) % p == 0)
      throw Error(ErrorKind::UnsupportedBase, "need n <= p and p not dividing n over " + R->name());
  }
  std::vector<Elem> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(R->from_int(static_cast<long>(i)));
  const Algebra A = Algebra::monogenic(R, x_n_minus_one(*R, n));
  const Algebra B = Algebra::monogenic(R, poly::from_roots(*R, pts));

  Matrix theta(R, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    poly::Poly e = poly::constant(*R, R->one());
    for (std::size_t k = 0; k < n; ++k) {
      if (k == i) continue;
      e = poly::mul(*R, e, poly::linear(*R, pts[k]));
      e = poly::scale(*R, e, R->inv(R->sub(pts[i], pts[k])));
    }
    for (std::size_t m = 0; m < e.size(); ++m) theta.at(i, m) = e[m];
  }
  return DualPair(A, B, inverse_transpose(theta));
}

DualPair mu_idempotent_pair(std::size_t n, FieldPtr R) {
  if (n == 0) throw Error(ErrorKind::UnsupportedBase, "n must be positive");
  const Algebra A = Algebra::monogenic(R, x_n_minus_one(*R, n));
  return DualPair(A, Algebra::split(R, n), Matrix::identity(R, n));
}

DualPair constant_pair(std::size_t n, FieldPtr R) { return dual(mu_constant_pair(n, std::move(R))); }

std::optional<DualPair> monogenic_form(const DualPair& P) {
  auto ga = find_primitive_element(P.A());
  auto gb = find_primitive_element(P.B());
  if (!ga || !gb) return std::nullopt;
  const FieldPtr& K = P.field();
  return DualPair(Algebra::monogenic(K, ga->minpoly), Algebra::monogenic(K, gb->minpoly),
                  ga->C.transpose() * P.phi() * gb->C);
}

}  // namespace dp::gallery
