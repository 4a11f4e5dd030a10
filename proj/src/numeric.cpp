#include "dualpair/numeric.hpp"

#include <algorithm>

namespace dp::num {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(mpfr_prec_t prec, const mpq_class& q) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(mpfr_prec_t prec, long v) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.prec());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  // Leave the moved-from value valid with a tiny allocation.
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

namespace {
mpfr_prec_t pmin(const BigFloat& a, const BigFloat& b) { return std::min(a.prec(), b.prec()); }
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(pmin(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(pmin(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(pmin(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(pmin(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

long BigFloat::exponent2() const {
  if (mpfr_zero_p(v_)) return -(1L << 40);
  return static_cast<long>(mpfr_get_exp(v_)) - 1;
}

mpz_class BigFloat::round() const {
  mpz_class z;
  BigFloat t(prec());
  mpfr_round(t.v_, v_);
  mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
  return z;
}

std::string BigFloat::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(mpfr_prec_t prec, long e) {
  BigFloat r(prec);
  mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(prec());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sin() const {
  BigFloat r(prec());
  mpfr_sin(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::cos() const {
  BigFloat r(prec());
  mpfr_cos(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::atan2(const BigFloat& x) const {
  BigFloat r(pmin(*this, x));
  mpfr_atan2(r.v_, v_, x.v_, MPFR_RNDN);
  return r;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  BigFloat d = b.norm2();
  return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
}

BigFloat BigComplex::norm2() const { return re_ * re_ + im_ * im_; }

BigComplex BigComplex::root_of_unity(mpfr_prec_t prec, long k, long n) {
  BigFloat angle = BigFloat::pi(prec) * BigFloat(prec, 2 * k) / BigFloat(prec, n);
  return {angle.cos(), angle.sin()};
}

std::string BigComplex::str(int digits) const {
  std::string s = re_.str(digits);
  if (im_.sign() >= 0) s += "+";
  return s + im_.str(digits) + "i";
}

BigComplex horner(const CPoly& f, const BigComplex& z) {
  BigComplex acc(z.prec());
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * z + f[i];
  return acc;
}

bool complex_roots(const CPoly& f0, mpfr_prec_t prec, std::vector<BigComplex>& roots) {
  roots.clear();
  if (f0.size() < 2) return true;
  const std::size_t n = f0.size() - 1;
  // Work with the monic polynomial.
  CPoly f;
  for (const auto& c : f0) f.push_back(c / f0.back());
  CPoly df;
  for (std::size_t i = 1; i <= n; ++i) df.push_back(f[i] * BigComplex(prec, mpq_class(static_cast<long>(i))));

  // Cauchy radius 1 + max |a_i| bounds all roots.
  BigFloat radius(prec, 0L);
  for (std::size_t i = 0; i < n; ++i) {
    BigFloat a = f[i].abs();
    if (a > radius) radius = a;
  }
  radius = radius + BigFloat(prec, 1L);
  // Start on a circle with an irrational-looking phase offset.
  const BigFloat two_pi = BigFloat::pi(prec) * BigFloat(prec, 2L);
  for (std::size_t k = 0; k < n; ++k) {
    BigFloat angle = two_pi * BigFloat(prec, static_cast<long>(k)) / BigFloat(prec, static_cast<long>(n)) +
                     BigFloat(prec, mpq_class(2, 5));
    BigFloat r = radius * BigFloat(prec, mpq_class(1, 2));
    roots.emplace_back(r * angle.cos(), r * angle.sin());
  }

  const BigFloat stop = BigFloat::pow2(prec, -static_cast<long>(prec) + 8);
  const int max_iter = 500 + 4 * static_cast<int>(prec);
  const BigComplex one(prec, mpq_class(1));
  bool converged = false;
  for (int it = 0; it < max_iter && !converged; ++it) {
    converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      BigComplex fz = horner(f, roots[k]);
      if (fz.re().is_zero() && fz.im().is_zero()) continue;
      BigComplex w = fz / horner(df, roots[k]);
      BigComplex s(prec);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s = s + one / (roots[k] - roots[j]);
      BigComplex step = w / (one - w * s);
      roots[k] = roots[k] - step;
      BigFloat scale = roots[k].abs() + BigFloat(prec, 1L);
      if (step.abs() > stop * scale) converged = false;
    }
  }
  // Newton polish.
  for (auto& z : roots)
    for (int it = 0; it < 3; ++it) {
      BigComplex d = horner(df, z);
      if (d.re().is_zero() && d.im().is_zero()) break;
      z = z - horner(f, z) / d;
    }
  const BigFloat tol = BigFloat::pow2(prec, -static_cast<long>(prec) / 2);
  for (const auto& z : roots) {
    BigFloat scale = z.abs() + BigFloat(prec, 1L);
    BigFloat bound = tol;
    for (std::size_t i = 0; i < n; ++i) bound = bound * scale;
    // Relative residual: |f(z)| is compared with 2^(-prec/2) (1 + |z|)^n.
    if (horner(f, z).abs() > bound) return false;
  }
  return true;
}

}  // namespace dp::num
