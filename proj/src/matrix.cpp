#include "dualpair/matrix.hpp"

#include <sstream>

#include "dualpair/error.hpp"

namespace dp {

Matrix::Matrix(FieldPtr K, std::size_t rows, std::size_t cols)
    : K_(std::move(K)), rows_(rows), cols_(cols), a_(rows * cols, K_->zero()) {}

Matrix Matrix::identity(FieldPtr K, std::size_t n) {
  Matrix m(K, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K->one();
  return m;
}

Matrix Matrix::from_rationals(FieldPtr K, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(K, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error(ErrorKind::Parse, "ragged matrix");
    for (std::size_t j = 0; j < c; ++j) {
      mpq_class q(rows[i][j]);
      q.canonicalize();
      m.at(i, j) = K->from_rational(q);
    }
  }
  return m;
}

Matrix Matrix::from_rows(FieldPtr K, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(K, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Matrix Matrix::column(FieldPtr K, const Vec& v) {
  Matrix m(K, v.size(), 1);
  m.set_col(0, v);
  return m;
}

Matrix Matrix::row(FieldPtr K, const Vec& v) {
  Matrix m(K, 1, v.size());
  m.set_row(0, v);
  return m;
}

Vec Matrix::row_vec(std::size_t i) const {
  return Vec(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
}

Vec Matrix::col_vec(std::size_t j) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw Error(ErrorKind::Parse, "row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw Error(ErrorKind::Parse, "column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::transpose() const {
  Matrix t(K_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorKind::Parse, "matrix shape mismatch in product");
  Matrix r(K_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem& x = at(i, k);
      if (K_->is_zero(x)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) = K_->fma(r.at(i, j), x, o.at(k, j));
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::Parse, "matrix shape mismatch in sum");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = K_->add(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::Parse, "matrix shape mismatch in difference");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = K_->sub(a_[i], o.a_[i]);
  return r;
}

Matrix Matrix::scaled(const Elem& c) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = K_->mul(x, c);
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::Parse, "vector length mismatch in matrix product");
  Vec y(rows_, K_->zero());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!K_->is_zero(x[j])) y[i] = K_->fma(y[i], at(i, j), x[j]);
  return y;
}

Vec Matrix::apply_left(const Vec& y) const {
  if (y.size() != rows_) throw Error(ErrorKind::Parse, "vector length mismatch in matrix product");
  Vec x(cols_, K_->zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    if (K_->is_zero(y[i])) continue;
    for (std::size_t j = 0; j < cols_; ++j) x[j] = K_->fma(x[j], y[i], at(i, j));
  }
  return x;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!K_->is_zero(x)) return false;
  return true;
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(K_, rows_); }

Matrix Matrix::map_to(FieldPtr L) const {
  Matrix r(L, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = L->map_from(*K_, a_[i]);
  return r;
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
  Matrix b(K_, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) b.at(i, j) = at(i0 + i, j0 + j);
  return b;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw Error(ErrorKind::Parse, "vstack column mismatch");
  Matrix r(K_, rows_ + below.rows_, cols_);
  std::copy(a_.begin(), a_.end(), r.a_.begin());
  std::copy(below.a_.begin(), below.a_.end(), r.a_.begin() + static_cast<long>(a_.size()));
  return r;
}

Matrix Matrix::hstack(const Matrix& right) const { return transpose().vstack(right.transpose()).transpose(); }

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << K_->to_string(at(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Field& K = *a.field();
  Matrix r(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (K.is_zero(a.at(i, j))) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r.at(i * b.rows() + k, j * b.cols() + l) = K.mul(a.at(i, j), b.at(k, l));
    }
  return r;
}

Matrix rref(const Matrix& M, std::vector<std::size_t>* pivots) {
  const Field& K = *M.field();
  Matrix R = M;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < R.cols() && r < R.rows(); ++c) {
    std::size_t p = r;
    while (p < R.rows() && K.is_zero(R.at(p, c))) ++p;
    if (p == R.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < R.cols(); ++j) std::swap(R.at(p, j), R.at(r, j));
    const Elem inv = K.inv(R.at(r, c));
    for (std::size_t j = c; j < R.cols(); ++j) R.at(r, j) = K.mul(R.at(r, j), inv);
    for (std::size_t i = 0; i < R.rows(); ++i) {
      if (i == r || K.is_zero(R.at(i, c))) continue;
      const Elem k = R.at(i, c);
      for (std::size_t j = c; j < R.cols(); ++j) R.at(i, j) = K.sub(R.at(i, j), K.mul(k, R.at(r, j)));
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return R;
}

std::size_t rank(const Matrix& M) {
  std::vector<std::size_t> piv;
  rref(M, &piv);
  return piv.size();
}

Elem determinant(const Matrix& M) {
  if (M.rows() != M.cols()) throw Error(ErrorKind::Parse, "determinant of a non-square matrix");
  const Field& K = *M.field();
  Matrix R = M;
  Elem det = K.one();
  const std::size_t n = R.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && K.is_zero(R.at(p, c))) ++p;
    if (p == n) return K.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(R.at(p, j), R.at(c, j));
      det = K.neg(det);
    }
    det = K.mul(det, R.at(c, c));
    const Elem inv = K.inv(R.at(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (K.is_zero(R.at(i, c))) continue;
      const Elem k = K.mul(R.at(i, c), inv);
      for (std::size_t j = c; j < n; ++j) R.at(i, j) = K.sub(R.at(i, j), K.mul(k, R.at(c, j)));
    }
  }
  return det;
}

Matrix inverse(const Matrix& M) {
  if (M.rows() != M.cols()) throw Error(ErrorKind::NotInvertible, "non-square matrix");
  const std::size_t n = M.rows();
  std::vector<std::size_t> piv;
  Matrix R = rref(M.hstack(Matrix::identity(M.field(), n)), &piv);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw Error(ErrorKind::NotInvertible, "singular matrix");
  return R.block(0, n, n, n);
}

Matrix inverse_transpose(const Matrix& M) { return inverse(M.transpose()); }

Matrix solve(const Matrix& M, const Matrix& B) {
  const std::size_t n = M.cols();
  std::vector<std::size_t> piv;
  Matrix R = rref(M.hstack(B), &piv);
  const Field& K = *M.field();
  Matrix X(M.field(), n, B.cols());
  for (std::size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] >= n) throw Error(ErrorKind::SolveFailed, "inconsistent linear system");
    for (std::size_t j = 0; j < B.cols(); ++j) X.at(piv[r], j) = R.at(r, n + j);
  }
  (void)K;
  return X;
}

Matrix kernel_basis(const Matrix& M) {
  const Field& K = *M.field();
  std::vector<std::size_t> piv;
  Matrix R = rref(M, &piv);
  std::vector<bool> is_pivot(M.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < M.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(M.cols(), K.zero());
    v[f] = K.one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = K.neg(R.at(r, f));
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(M.field(), basis, M.cols());
}

Matrix row_space(const Matrix& M) {
  std::vector<std::size_t> piv;
  Matrix R = rref(M, &piv);
  return R.block(0, 0, piv.size(), M.cols());
}

Matrix complement_basis(const Matrix& W) {
  const Field& K = *W.field();
  std::vector<std::size_t> piv;
  rref(W, &piv);
  std::vector<bool> is_pivot(W.cols(), false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t c = 0; c < W.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(W.cols(), K.zero());
    v[c] = K.one();
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(W.field(), basis, W.cols());
}

Matrix orthogonal_complement(const Matrix& Phi, const Matrix& W) {
  if (Phi.rows() != Phi.cols()) throw Error(ErrorKind::NotInvertible, "pairing matrix is not square");
  if (rank(Phi) != Phi.rows()) throw Error(ErrorKind::NotInvertible, "pairing matrix is singular");
  if (W.rows() == 0) return Matrix::identity(Phi.field(), Phi.cols());
  return kernel_basis(W * Phi);
}

bool unit_determinant_over_z(const Matrix& M) {
  if (M.field()->kind() != FieldKind::Rationals) return false;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (M.at(i, j).c[0].get_den() != 1) return false;
  Elem d = determinant(M);
  return abs(d.c[0]) == 1;
}

json matrix_to_json(const Matrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) r.push_back(M.field()->to_json(M.at(i, j)));
    rows.push_back(r);
  }
  return rows;
}

Matrix matrix_from_json(FieldPtr K, const json& j) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, "matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Matrix m(K, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw Error(ErrorKind::Parse, "ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m.at(i, c) = K->from_json(j[i][c]);
  }
  return m;
}

}  // namespace dp
