#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liegeo/scalar.hpp"

namespace liegeo {

/// Dense row-major matrix over the rationals.
///
/// Linear maps act on column vectors: `(A * v)[r] = sum_c A(r, c) v[c]`.
/// Subspaces are represented by the row space of a matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  std::vector<Vector> row_vectors() const;
  void set_row(std::size_t r, const Vector& v);
  void set_col(std::size_t c, const Vector& v);
  void swap_rows(std::size_t r1, std::size_t r2);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  /// Lexicographic order on (rows, cols, entries); used for deterministic sorting.
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Scalar& s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
/// Row vector times matrix: v^T A.
Vector left_multiply(const Vector& v, const Matrix& a);

/// In-place reduced row echelon form; returns pivot columns (0-based).
/// Zero rows are dropped from the result.
std::vector<std::size_t> rref_in_place(Matrix& m);
Matrix rref(Matrix m);
std::size_t rank(Matrix m);

/// Rows form a basis of {v : m * v = 0}, in canonical reduced echelon form.
Matrix kernel(const Matrix& m);

Scalar determinant(Matrix m);
/// Leading principal minors det(m[0..k, 0..k]) for k = 1..n.
std::vector<Scalar> leading_principal_minors(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
/// Unique solution of m x = b, or nullopt when singular or inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Some solution of m x = b (free variables set to zero), or nullopt when
/// the system is inconsistent.
std::optional<Vector> particular_solution(const Matrix& m, const Vector& b);

/// Power of a square matrix.
Matrix power(const Matrix& m, unsigned k);

}  // namespace liegeo
