#include "dualpair/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "dualpair/error.hpp"
#include "dualpair/roots.hpp"

namespace dp {

Algebra::Algebra(FieldPtr K, std::size_t n, std::vector<Elem> sc, Vec unit)
    : K_(std::move(K)), n_(n), c_(std::move(sc)), unit_(std::move(unit)) {
  if (n_ > kMaxAlgebraDim) throw Error(ErrorKind::DimensionCapExceeded, "algebra dimension " + std::to_string(n_));
  if (c_.size() != n_ * n_ * n_ || unit_.size() != n_) throw Error(ErrorKind::Parse, "structure constants have the wrong size");
}

Algebra Algebra::monogenic(FieldPtr K, const poly::Poly& f0) {
  poly::Poly f = f0;
  poly::trim(*K, f);
  if (f.empty() || !K->is_one(f.back())) throw Error(ErrorKind::Parse, "defining polynomial must be monic");
  const std::size_t n = f.size() - 1;
  // x^k mod f for k < 2n - 1
  std::vector<Vec> red;
  Vec cur(n, K->zero());
  if (n > 0) cur[0] = K->one();
  for (std::size_t k = 0; k + 1 < 2 * n; ++k) {
    red.push_back(cur);
    // multiply by x
    Vec next(n, K->zero());
    for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] = cur[i];
    const Elem top = cur[n - 1];
    if (!K->is_zero(top))
      for (std::size_t i = 0; i < n; ++i) next[i] = K->sub(next[i], K->mul(top, f[i]));
    cur = std::move(next);
  }
  std::vector<Elem> sc(n * n * n, K->zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) sc[(i * n + j) * n + k] = red[i + j][k];
  Vec unit(n, K->zero());
  if (n > 0) unit[0] = K->one();
  Algebra A(K, n, std::move(sc), std::move(unit));
  A.f_ = f;
  return A;
}

Algebra Algebra::split(FieldPtr K, std::size_t n) {
  std::vector<Elem> sc(n * n * n, K->zero());
  for (std::size_t i = 0; i < n; ++i) sc[(i * n + i) * n + i] = K->one();
  return Algebra(K, n, std::move(sc), Vec(n, K->one()));
}

Vec Algebra::basis(std::size_t i) const {
  Vec v = zero();
  v[i] = K_->one();
  return v;
}

Vec Algebra::mul(const Vec& a, const Vec& b) const {
  const Field& K = *K_;
  if (f_) {
    poly::Poly pa = a, pb = b;
    poly::trim(K, pa);
    poly::trim(K, pb);
    poly::Poly r = poly::rem(K, poly::mul(K, pa, pb), *f_);
    r.resize(n_, K.zero());
    return r;
  }
  Vec r = zero();
  for (std::size_t i = 0; i < n_; ++i) {
    if (K.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (K.is_zero(b[j])) continue;
      const Elem ab = K.mul(a[i], b[j]);
      const Elem* row = &c_[(i * n_ + j) * n_];
      for (std::size_t k = 0; k < n_; ++k)
        if (!K.is_zero(row[k])) r[k] = K.fma(r[k], ab, row[k]);
    }
  }
  return r;
}

Vec Algebra::add(const Vec& a, const Vec& b) const {
  Vec r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = K_->add(a[i], b[i]);
  return r;
}

Vec Algebra::sub(const Vec& a, const Vec& b) const {
  Vec r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = K_->sub(a[i], b[i]);
  return r;
}

Vec Algebra::scale(const Vec& a, const Elem& s) const {
  Vec r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = K_->mul(a[i], s);
  return r;
}

Vec Algebra::pow(const Vec& a, std::size_t k) const {
  Vec r = unit_;
  Vec b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    k >>= 1;
    if (k) b = mul(b, b);
  }
  return r;
}

Matrix Algebra::mult_matrix(const Vec& a) const {
  Matrix m(K_, n_, n_);
  for (std::size_t j = 0; j < n_; ++j) m.set_col(j, mul(a, basis(j)));
  return m;
}

bool Algebra::is_zero(const Vec& a) const {
  for (const auto& x : a)
    if (!K_->is_zero(x)) return false;
  return true;
}

Vec Algebra::eval(const poly::Poly& f, const Vec& a) const {
  Vec acc = zero();
  for (std::size_t i = f.size(); i-- > 0;) acc = add(mul(acc, a), scale(unit_, f[i]));
  return acc;
}

Elem Algebra::trace(const Vec& a) const {
  Elem t = K_->zero();
  for (std::size_t i = 0; i < n_; ++i) {
    if (K_->is_zero(a[i])) continue;
    Elem s = K_->zero();
    for (std::size_t k = 0; k < n_; ++k) s = K_->add(s, sc(i, k, k));
    t = K_->fma(t, a[i], s);
  }
  return t;
}

Algebra Algebra::base_change(FieldPtr L) const {
  std::vector<Elem> sc;
  sc.reserve(c_.size());
  for (const auto& x : c_) sc.push_back(L->map_from(*K_, x));
  Vec u;
  for (const auto& x : unit_) u.push_back(L->map_from(*K_, x));
  Algebra B(L, n_, std::move(sc), std::move(u));
  if (f_) B.f_ = poly::map_coefficients(*K_, *L, *f_);
  return B;
}

std::vector<std::string> Algebra::check() const {
  std::vector<std::string> bad;
  const Field& K = *K_;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (!(sc(i, j, k) == sc(j, i, k))) {
          bad.push_back("commutativity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
          k = n_;
          j = n_;
          i = n_;
        }
  for (std::size_t i = 0; i < n_ && bad.size() < 2; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      Vec eij = mul(basis(i), basis(j));
      for (std::size_t k = 0; k < n_; ++k) {
        if (mul(eij, basis(k)) != mul(basis(i), mul(basis(j), basis(k)))) {
          bad.push_back("associativity fails at (" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
          k = n_;
          j = n_;
          break;
        }
      }
    }
  for (std::size_t i = 0; i < n_; ++i)
    if (mul(unit_, basis(i)) != basis(i)) {
      bad.push_back("unit law fails at e" + std::to_string(i));
      break;
    }
  (void)K;
  return bad;
}

bool Algebra::operator==(const Algebra& o) const {
  return n_ == o.n_ && K_->equals(*o.K_) && c_ == o.c_ && unit_ == o.unit_;
}

Algebra monogenic_to_sc(FieldPtr K, const poly::Poly& f) { return Algebra::monogenic(std::move(K), f); }

Algebra tensor_sc(const Algebra& A, const Algebra& B) {
  if (!A.field()->equals(*B.field())) throw Error(ErrorKind::MixedBase, "tensor product over different base rings");
  const Field& K = *A.field();
  const std::size_t na = A.dim(), nb = B.dim(), n = na * nb;
  if (n > kMaxAlgebraDim) throw Error(ErrorKind::DimensionCapExceeded, "tensor product of dimension " + std::to_string(n));
  std::vector<Elem> sc(n * n * n, K.zero());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t k = 0; k < na; ++k)
      for (std::size_t m = 0; m < na; ++m) {
        const Elem& a = A.sc(i, k, m);
        if (K.is_zero(a)) continue;
        for (std::size_t j = 0; j < nb; ++j)
          for (std::size_t l = 0; l < nb; ++l)
            for (std::size_t r = 0; r < nb; ++r) {
              const Elem& b = B.sc(j, l, r);
              if (K.is_zero(b)) continue;
              sc[((i * nb + j) * n + (k * nb + l)) * n + (m * nb + r)] = K.mul(a, b);
            }
      }
  Vec unit(n, K.zero());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = K.mul(A.unit()[i], B.unit()[j]);
  return Algebra(A.field(), n, std::move(sc), std::move(unit));
}

Vec tensor_mul(const Algebra& A, const Algebra& B, const Vec& x, const Vec& y) {
  const Field& K = *A.field();
  const std::size_t na = A.dim(), nb = B.dim();
  Vec z(na * nb, K.zero());
  std::vector<Vec> xr(na), yr(na);
  std::vector<bool> xz(na), yz(na);
  for (std::size_t i = 0; i < na; ++i) {
    xr[i] = Vec(x.begin() + static_cast<long>(i * nb), x.begin() + static_cast<long>((i + 1) * nb));
    yr[i] = Vec(y.begin() + static_cast<long>(i * nb), y.begin() + static_cast<long>((i + 1) * nb));
    xz[i] = B.is_zero(xr[i]);
    yz[i] = B.is_zero(yr[i]);
  }
  for (std::size_t i = 0; i < na; ++i) {
    if (xz[i]) continue;
    for (std::size_t k = 0; k < na; ++k) {
      if (yz[k]) continue;
      Vec w = B.mul(xr[i], yr[k]);
      for (std::size_t m = 0; m < na; ++m) {
        const Elem& a = A.sc(i, k, m);
        if (K.is_zero(a)) continue;
        for (std::size_t r = 0; r < nb; ++r)
          if (!K.is_zero(w[r])) z[m * nb + r] = K.fma(z[m * nb + r], a, w[r]);
      }
    }
  }
  return z;
}

namespace {

// Coordinates of v in the span of the rows of R (reduced echelon, pivots piv),
// or nullopt if v is not in the span.
std::optional<Vec> echelon_coords(const Field& K, const Matrix& R, const std::vector<std::size_t>& piv, const Vec& v) {
  Vec coords(piv.size());
  Vec rest = v;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    coords[r] = v[piv[r]];
    if (K.is_zero(coords[r])) continue;
    for (std::size_t j = 0; j < v.size(); ++j) rest[j] = K.sub(rest[j], K.mul(coords[r], R.at(r, j)));
  }
  for (const auto& x : rest)
    if (!K.is_zero(x)) return std::nullopt;
  return coords;
}

}  // namespace

Quotient ideal_quotient(const Algebra& A, const std::vector<Vec>& gens) {
  const FieldPtr& K = A.field();
  const std::size_t n = A.dim();
  Matrix I = row_space(Matrix::from_rows(K, gens, n));
  while (true) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < I.rows(); ++r) {
      Vec v = I.row_vec(r);
      rows.push_back(v);
      for (std::size_t k = 0; k < n; ++k) rows.push_back(A.mul(v, A.basis(k)));
    }
    Matrix J = row_space(Matrix::from_rows(K, rows, n));
    const bool stable = J.rows() == I.rows();
    I = std::move(J);
    if (stable) break;
  }
  std::vector<std::size_t> piv;
  rref(I, &piv);
  std::vector<bool> is_pivot(n, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::size_t m = free_cols.size();
  auto project = [&](const Vec& a) {
    Vec rest = a;
    for (std::size_t r = 0; r < piv.size(); ++r) {
      const Elem c = rest[piv[r]];
      if (K->is_zero(c)) continue;
      for (std::size_t j = 0; j < n; ++j) rest[j] = K->sub(rest[j], K->mul(c, I.at(r, j)));
    }
    Vec out(m);
    for (std::size_t a2 = 0; a2 < m; ++a2) out[a2] = rest[free_cols[a2]];
    return out;
  };
  Matrix proj(K, m, n);
  for (std::size_t j = 0; j < n; ++j) proj.set_col(j, project(A.basis(j)));
  std::vector<Elem> sc(m * m * m, K->zero());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec p = project(A.mul(A.basis(free_cols[a]), A.basis(free_cols[b])));
      for (std::size_t k = 0; k < m; ++k) sc[(a * m + b) * m + k] = p[k];
    }
  return Quotient{Algebra(K, m, std::move(sc), project(A.unit())), proj, I};
}

Subalgebra subalgebra(const Algebra& A, const Matrix& W) {
  const FieldPtr& K = A.field();
  std::vector<std::size_t> piv;
  Matrix R = rref(W, &piv);
  R = R.block(0, 0, piv.size(), A.dim());
  const std::size_t m = piv.size();
  auto u = echelon_coords(*K, R, piv, A.unit());
  if (!u) throw Error(ErrorKind::NotSubalgebra, "subspace does not contain the unit");
  std::vector<Elem> sc(m * m * m, K->zero());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      auto p = echelon_coords(*K, R, piv, A.mul(R.row_vec(a), R.row_vec(b)));
      if (!p) throw Error(ErrorKind::NotSubalgebra, "subspace is not closed under multiplication");
      for (std::size_t k = 0; k < m; ++k) sc[(a * m + b) * m + k] = sc[(b * m + a) * m + k] = (*p)[k];
    }
  return Subalgebra{Algebra(K, m, std::move(sc), *u), R.transpose()};
}

Subalgebra equalizer_subalgebra(const Algebra& B, const Matrix& g, const Matrix& g0) {
  Matrix ker = kernel_basis(g - g0);
  if (ker.rows() == 0 && B.dim() > 0) throw Error(ErrorKind::NotSubalgebra, "equaliser is zero");
  return subalgebra(B, ker);
}

namespace {

// Krylov matrix with columns g^0 .. g^(n-1).
Matrix krylov(const Algebra& A, const Vec& g) {
  Matrix C(A.field(), A.dim(), A.dim());
  Vec p = A.unit();
  for (std::size_t k = 0; k < A.dim(); ++k) {
    C.set_col(k, p);
    if (k + 1 < A.dim()) p = A.mul(p, g);
  }
  return C;
}

std::optional<PrimitiveElement> try_primitive(const Algebra& A, const Vec& g) {
  Matrix C = krylov(A, g);
  if (rank(C) != A.dim()) return std::nullopt;
  Matrix Cinv = inverse(C);
  const FieldPtr& K = A.field();
  Vec gn = A.mul(C.col_vec(A.dim() - 1), g);
  Vec s = Cinv.apply(gn);
  poly::Poly m(A.dim() + 1, K->zero());
  for (std::size_t i = 0; i < A.dim(); ++i) m[i] = K->neg(s[i]);
  m[A.dim()] = K->one();
  return PrimitiveElement{g, m, C, Cinv};
}

}  // namespace

poly::Poly min_poly(const Algebra& A, const Vec& a) {
  const FieldPtr& K = A.field();
  std::vector<Vec> powers{A.unit()};
  while (true) {
    Vec next = A.mul(powers.back(), a);
    Matrix M = Matrix::from_rows(K, powers, A.dim()).transpose();
    const std::size_t r = rank(M);
    if (rank(M.hstack(Matrix::column(K, next))) == r) {
      Matrix s = solve(M, Matrix::column(K, next));
      poly::Poly m(powers.size() + 1, K->zero());
      for (std::size_t i = 0; i < powers.size(); ++i) m[i] = K->neg(s.at(i, 0));
      m.back() = K->one();
      return m;
    }
    powers.push_back(std::move(next));
  }
}

std::optional<PrimitiveElement> find_primitive_element(const Algebra& A) {
  const FieldPtr& K = A.field();
  const std::size_t n = A.dim();
  if (n == 0) return std::nullopt;
  if (A.is_monogenic()) return try_primitive(A, A.basis(std::min<std::size_t>(1, n - 1)));
  if (n == 1) return try_primitive(A, A.unit());
  for (std::size_t i = 0; i < n; ++i)
    if (auto p = try_primitive(A, A.basis(i))) return p;
  // sum i e_i separates the factors of a split algebra at once.
  if (K->characteristic() == 0 || K->characteristic() >= static_cast<unsigned long>(n)) {
    Vec g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = K->from_int(static_cast<long>(i));
    if (auto p = try_primitive(A, g)) return p;
  }
  long cmax = static_cast<long>(n);
  if (K->characteristic() != 0 && K->characteristic() <= cmax) cmax = K->characteristic().get_si() - 1;
  std::size_t tried = 0;
  constexpr std::size_t kCandidateCap = 20000;
  for (long c = 1; c <= cmax; ++c) {
    // All vectors over {0..c} with maximum c, lexicographic, first coordinate most significant.
    std::vector<long> digits(n, 0);
    while (true) {
      const long mx = *std::max_element(digits.begin(), digits.end());
      const long nonzero = std::count_if(digits.begin(), digits.end(), [](long d) { return d != 0; });
      if (mx == c && !(c == 1 && nonzero == 1)) {
        if (++tried > kCandidateCap) return std::nullopt;
        Vec g(n);
        for (std::size_t i = 0; i < n; ++i) g[i] = K->from_int(digits[i]);
        if (auto p = try_primitive(A, g)) return p;
      }
      std::size_t pos = n;
      while (pos > 0 && ++digits[pos - 1] > c) digits[--pos] = 0;
      if (pos == 0) break;
    }
  }
  return std::nullopt;
}

PrimitiveElement primitive_element(const Algebra& A) {
  auto p = find_primitive_element(A);
  if (!p) throw Error(ErrorKind::NoPrimitiveElement, "no primitive element found in dimension " + std::to_string(A.dim()));
  return *p;
}

bool is_etale(const Algebra& A) {
  const std::size_t n = A.dim();
  const FieldPtr& K = A.field();
  Vec tau(n, K->zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) tau[i] = K->add(tau[i], A.sc(i, k, k));
  Matrix T(K, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Elem s = K->zero();
      for (std::size_t m = 0; m < n; ++m) s = K->fma(s, A.sc(i, j, m), tau[m]);
      T.at(i, j) = s;
    }
  return rank(T) == n;
}

namespace {

bool fits_exhaustive(const Field& K, std::size_t n) {
  auto q = K.cardinality();
  if (!q) return false;
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), q->get_mpz_t(), n);
  return total <= kExhaustiveRootSearch;
}

std::vector<Vec> roots_exhaustive(const Algebra& Y, const poly::Poly& m) {
  const Field& K = *Y.field();
  const mpz_class q = *K.cardinality();
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), q.get_mpz_t(), Y.dim());
  std::vector<Vec> out;
  for (mpz_class idx = 0; idx < total; ++idx) {
    Vec y(Y.dim());
    mpz_class rest = idx;
    for (std::size_t i = Y.dim(); i-- > 0;) {
      y[i] = K.element_at(rest % q);
      rest /= q;
    }
    if (Y.is_zero(Y.eval(m, y))) out.push_back(std::move(y));
  }
  return out;
}

// Y etale over a finite field with primitive element g: evaluate at the
// roots of its minimal polynomial in a splitting field and interpolate.
std::vector<Vec> roots_split_finite(const Algebra& Y, const PrimitiveElement& pe, const poly::Poly& m, std::uint64_t seed) {
  const FieldPtr& K = Y.field();
  const std::size_t s = Y.dim();
  FieldPtr L = extension_of_degree(K, splitting_degree(*K, pe.minpoly));
  std::vector<Elem> beta = roots_in_ring(*K, pe.minpoly, *L, seed);
  if (beta.size() != s) throw Error(ErrorKind::SolveFailed, "splitting field construction failed");
  std::vector<Elem> rho = roots_in_ring(*K, m, *L, seed);
  if (rho.empty()) return {};
  if (std::pow(static_cast<double>(rho.size()), static_cast<double>(s)) > 2e5)
    throw Error(ErrorKind::DimensionCapExceeded, "too many root assignments");
  Matrix V(L, s, s);
  for (std::size_t k = 0; k < s; ++k) {
    Elem pw = L->one();
    for (std::size_t j = 0; j < s; ++j) {
      V.at(k, j) = pw;
      pw = L->mul(pw, beta[k]);
    }
  }
  Matrix Vinv = inverse(V);
  std::vector<Vec> out;
  std::vector<std::size_t> idx(s, 0);
  while (true) {
    Vec v(s);
    for (std::size_t k = 0; k < s; ++k) v[k] = rho[idx[k]];
    Vec r = Vinv.apply(v);
    Vec rk(s);
    bool rational = true;
    for (std::size_t j = 0; j < s && rational; ++j) {
      auto x = L->restrict_to(*K, r[j]);
      if (!x) rational = false;
      else rk[j] = *x;
    }
    if (rational) {
      Vec y = pe.C.apply(rk);
      if (Y.is_zero(Y.eval(m, y))) out.push_back(std::move(y));
    }
    std::size_t pos = 0;
    while (pos < s && ++idx[pos] == rho.size()) idx[pos++] = 0;
    if (pos == s) break;
  }
  return out;
}

std::vector<Vec> roots_split_rational(const Algebra& Y, const PrimitiveElement& pe, const poly::Poly& m) {
  const Field& K = *Y.field();
  poly::Poly sf = poly::squarefree_part(K, m);
  if (poly::degree(sf) <= 0) return {};
  const std::size_t s = Y.dim();
  std::vector<mpq_class> h;
  for (const auto& c : pe.minpoly) h.push_back(c.c[0]);
  std::vector<std::vector<mpq_class>> coeffs;
  for (const auto& c : sf) {
    std::vector<mpq_class> v(s, 0);
    v[0] = c.c[0];
    coeffs.push_back(v);
  }
  auto to_vec = [&](const std::vector<mpq_class>& r) {
    Vec rk(s);
    for (std::size_t j = 0; j < s; ++j) rk[j] = Elem{{r[j]}};
    return pe.C.apply(rk);
  };
  auto found = q_power_basis_roots(h, coeffs, [&](const std::vector<mpq_class>& r) { return Y.is_zero(Y.eval(sf, to_vec(r))); });
  std::vector<Vec> out;
  for (const auto& r : found) out.push_back(to_vec(r));
  return out;
}

}  // namespace

bool lex_greater(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    auto c = Field::compare(a[i], b[i]);
    if (c != 0) return c > 0;
  }
  return a.size() > b.size();
}

std::vector<Vec> roots_in_algebra(const Algebra& Y, const poly::Poly& m0, std::uint64_t seed) {
  const FieldPtr& K = Y.field();
  poly::Poly m = m0;
  poly::trim(*K, m);
  if (m.empty()) throw Error(ErrorKind::UnsupportedRing, "roots of the zero polynomial");
  std::vector<Vec> out;
  if (Y.dim() == 0) return {Vec{}};
  if (poly::degree(m) == 0) return {};
  if (Y.dim() == 1) {
    for (const auto& r : roots_in_field(*K, m, seed)) out.push_back(Y.scale(Y.unit(), r));
  } else if (K->is_finite()) {
    std::optional<PrimitiveElement> pe;
    const bool etale = is_etale(Y);
    if (etale) pe = find_primitive_element(Y);
    if (pe) out = roots_split_finite(Y, *pe, m, seed);
    else if (fits_exhaustive(*K, Y.dim())) out = roots_exhaustive(Y, m);
    else throw Error(ErrorKind::DimensionCapExceeded, "algebra too large for exhaustive root search");
  } else if (K->kind() == FieldKind::Rationals) {
    if (!is_etale(Y)) throw Error(ErrorKind::UnsupportedRing, "roots in a non-reduced algebra over Q");
    out = roots_split_rational(Y, primitive_element(Y), m);
  } else {
    throw Error(ErrorKind::UnsupportedRing, "roots in algebras over " + K->name());
  }
  std::sort(out.begin(), out.end(), [](const Vec& a, const Vec& b) { return lex_greater(b, a); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_algebra_map(const Algebra& X, const Algebra& Y, const Matrix& F) {
  if (F.rows() != Y.dim() || F.cols() != X.dim()) return false;
  if (F.apply(X.unit()) != Y.unit()) return false;
  std::vector<Vec> img(X.dim());
  for (std::size_t i = 0; i < X.dim(); ++i) img[i] = F.col_vec(i);
  for (std::size_t i = 0; i < X.dim(); ++i)
    for (std::size_t j = i; j < X.dim(); ++j)
      if (F.apply(X.mul(X.basis(i), X.basis(j))) != Y.mul(img[i], img[j])) return false;
  return true;
}

std::vector<Matrix> algebra_homs(const Algebra& X, const Algebra& Y, std::uint64_t seed) {
  if (!X.field()->equals(*Y.field())) throw Error(ErrorKind::MixedBase, "algebra maps between different base rings");
  const FieldPtr& K = X.field();
  std::vector<Matrix> out;
  if (X.dim() == 0) {
    if (Y.dim() == 0) out.emplace_back(K, 0, 0);
    return out;
  }
  if (auto pe = find_primitive_element(X)) {
    for (const Vec& r : roots_in_algebra(Y, pe->minpoly, seed)) {
      Matrix R(K, Y.dim(), X.dim());
      Vec p = Y.unit();
      for (std::size_t k = 0; k < X.dim(); ++k) {
        R.set_col(k, p);
        p = Y.mul(p, r);
      }
      out.push_back(R * pe->Cinv);
    }
  } else {
    // Images of each basis vector among the roots of its minimal polynomial.
    const std::size_t n = X.dim();
    std::vector<std::vector<Vec>> cand(n);
    double combos = 1;
    for (std::size_t i = 0; i < n; ++i) {
      cand[i] = roots_in_algebra(Y, min_poly(X, X.basis(i)), seed);
      combos *= static_cast<double>(cand[i].size());
    }
    if (combos > 1e6) throw Error(ErrorKind::DimensionCapExceeded, "too many candidate algebra maps");
    std::vector<std::size_t> choice(n, 0);
    std::vector<Vec> img(n);
    // Depth-first search, checking e_i e_j whenever the support of the product is assigned.
    std::function<void(std::size_t)> dfs = [&](std::size_t i) {
      if (i == n) {
        Matrix F(K, Y.dim(), n);
        for (std::size_t k = 0; k < n; ++k) F.set_col(k, img[k]);
        if (is_algebra_map(X, Y, F)) out.push_back(std::move(F));
        return;
      }
      for (const Vec& c : cand[i]) {
        img[i] = c;
        bool ok = true;
        for (std::size_t j = 0; j <= i && ok; ++j) {
          Vec prod = X.mul(X.basis(i), X.basis(j));
          bool assigned = true;
          for (std::size_t k = i + 1; k < n; ++k)
            if (!K->is_zero(prod[k])) assigned = false;
          if (!assigned) continue;
          Vec lhs = Y.zero();
          for (std::size_t k = 0; k <= i; ++k)
            if (!K->is_zero(prod[k])) lhs = Y.add(lhs, Y.scale(img[k], prod[k]));
          ok = lhs == Y.mul(img[i], img[j]);
        }
        if (ok) dfs(i + 1);
      }
    };
    dfs(0);
  }
  auto flat = [](const Matrix& M) {
    Vec v;
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j) v.push_back(M.at(i, j));
    return v;
  };
  std::sort(out.begin(), out.end(), [&](const Matrix& a, const Matrix& b) { return lex_greater(flat(a), flat(b)); });
  return out;
}

json algebra_sc_to_json(const Algebra& A) {
  const Field& K = *A.field();
  json t = json::array();
  for (std::size_t i = 0; i < A.dim(); ++i) {
    json ti = json::array();
    for (std::size_t j = 0; j < A.dim(); ++j) {
      json tij = json::array();
      for (std::size_t k = 0; k < A.dim(); ++k) tij.push_back(K.to_json(A.sc(i, j, k)));
      ti.push_back(tij);
    }
    t.push_back(ti);
  }
  return t;
}

Algebra algebra_from_sc_json(FieldPtr K, const json& sc, const json& unit) {
  if (!sc.is_array() || !unit.is_array()) throw Error(ErrorKind::Parse, "structure constants must be nested arrays");
  const std::size_t n = unit.size();
  if (sc.size() != n) throw Error(ErrorKind::Parse, "structure tensor size does not match unit");
  std::vector<Elem> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sc[i].size() != n) throw Error(ErrorKind::Parse, "structure tensor is ragged");
    for (std::size_t j = 0; j < n; ++j) {
      if (sc[i][j].size() != n) throw Error(ErrorKind::Parse, "structure tensor is ragged");
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = K->from_json(sc[i][j][k]);
    }
  }
  Vec u;
  for (const auto& x : unit) u.push_back(K->from_json(x));
  return Algebra(K, n, std::move(c), std::move(u));
}

}  // namespace dp
