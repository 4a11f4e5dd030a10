#pragma once

// Dense matrices over a Field.  Linear maps use the column convention: a map
// V -> W with dim V = n, dim W = m is an m x n matrix acting on column vectors.
// Subspaces are passed around as matrices whose rows form a basis.

#include <string>
#include <vector>

#include "dualpair/field.hpp"

namespace dp {

using Vec = std::vector<Elem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr K, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr K, std::size_t n);
  /// Entries given as rational strings such as "1/4" (row-major).
  static Matrix from_rationals(FieldPtr K, const std::vector<std::vector<std::string>>& rows);
  static Matrix from_rows(FieldPtr K, const std::vector<Vec>& rows, std::size_t cols);
  static Matrix column(FieldPtr K, const Vec& v);
  static Matrix row(FieldPtr K, const Vec& v);

  const FieldPtr& field() const { return K_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Vec row_vec(std::size_t i) const;
  Vec col_vec(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Elem& c) const;
  Vec apply(const Vec& x) const;         // M x
  Vec apply_left(const Vec& y) const;    // y M
  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  bool is_identity() const;

  /// Entries mapped into another field (tower inclusion or reduction mod p).
  Matrix map_to(FieldPtr L) const;
  /// Rows i0.. and columns j0.. of the given sizes.
  Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
  /// Stacks the rows of `below` under this matrix.
  Matrix vstack(const Matrix& below) const;
  Matrix hstack(const Matrix& right) const;

  std::string str() const;

 private:
  FieldPtr K_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row.  Pivot rule: leftmost column, first row with a nonzero entry.
Matrix rref(const Matrix& M, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Matrix& M);
Elem determinant(const Matrix& M);
/// Throws NotInvertible.
Matrix inverse(const Matrix& M);
/// N with M^t N = 1.
Matrix inverse_transpose(const Matrix& M);
/// Solves M X = B; throws SolveFailed if inconsistent.  Any solution is
/// returned when it is not unique (free variables set to zero).
Matrix solve(const Matrix& M, const Matrix& B);

/// Rows form a basis of {x : M x = 0}, one vector per free column in
/// increasing order, with a 1 in that column.
Matrix kernel_basis(const Matrix& M);
/// The nonzero rows of rref(M): a canonical basis of the row space.
Matrix row_space(const Matrix& M);
/// Standard basis vectors completing the row space of W (rows) to the whole
/// space, taken at the non-pivot columns of rref(W) in increasing order.
Matrix complement_basis(const Matrix& W);

/// Orthogonal complement of a subspace W of A (rows of W) under the pairing
/// Phi: basis (rows) of {b in B : w^t Phi b = 0 for all w in W}.
Matrix orthogonal_complement(const Matrix& Phi, const Matrix& W);

/// Determinant of an integral rational matrix is +-1.
bool unit_determinant_over_z(const Matrix& M);

json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(FieldPtr K, const json& j);

}  // namespace dp
