#pragma once

// Arbitrary-precision real and complex floats on top of MPFR, plus a
// simultaneous (Aberth) polynomial root finder.  Every value carries its own
// precision; binary operations produce the smaller precision of the two.

#include <string>
#include <vector>

#include <gmpxx.h>
#include <mpfr.h>

namespace dp::num {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 128);
  BigFloat(mpfr_prec_t prec, const mpq_class& q);
  BigFloat(mpfr_prec_t prec, long v);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Floor of log2 |x|; very negative for zero.
  long exponent2() const;
  /// Nearest integer.
  mpz_class round() const;
  std::string str(int digits = 20) const;

  static BigFloat pi(mpfr_prec_t prec);
  static BigFloat pow2(mpfr_prec_t prec, long e);
  BigFloat abs() const;
  BigFloat sqrt() const;
  BigFloat sin() const;
  BigFloat cos() const;
  BigFloat atan2(const BigFloat& x) const;  // atan2(*this, x)

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }

 private:
  mpfr_t v_;
};

class BigComplex {
 public:
  explicit BigComplex(mpfr_prec_t prec = 128) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {}
  BigComplex(mpfr_prec_t prec, const mpq_class& re) : re_(prec, re), im_(prec, 0L) {}

  const BigFloat& re() const { return re_; }
  const BigFloat& im() const { return im_; }
  mpfr_prec_t prec() const { return std::min(re_.prec(), im_.prec()); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  BigComplex operator-() const { return BigComplex(-re_, -im_); }

  BigFloat norm2() const;
  BigFloat abs() const { return norm2().sqrt(); }
  /// exp(2 pi i k / n)
  static BigComplex root_of_unity(mpfr_prec_t prec, long k, long n);
  std::string str(int digits = 12) const;

 private:
  BigFloat re_, im_;
};

using CPoly = std::vector<BigComplex>;  // low to high

BigComplex horner(const CPoly& f, const BigComplex& z);

/// All complex roots of a squarefree polynomial with nonzero leading
/// coefficient.  Returns false if the iteration did not converge or the
/// residual check |f(z)/lc| < 2^(-prec/2) failed for some root.
bool complex_roots(const CPoly& f, mpfr_prec_t prec, std::vector<BigComplex>& roots);

}  // namespace dp::num
