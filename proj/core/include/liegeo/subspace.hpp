#pragma once

#include <cstddef>
#include <vector>

#include "liegeo/matrix.hpp"

namespace liegeo {

/// A linear subspace of R^n held as the row space of a matrix in reduced row
/// echelon form. The form is canonical, so equality is matrix equality.
class Subspace {
 public:
  /// The zero subspace of R^n.
  explicit Subspace(std::size_t ambient = 0) : n_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);
  static Subspace whole(std::size_t ambient);
  /// span(X_first, ..., X_n), 1-based.
  static Subspace tail(std::size_t ambient, std::size_t first);
  /// span of the listed basis vectors, 1-based indices.
  static Subspace coordinate(std::size_t ambient, const std::vector<std::size_t>& indices);

  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_whole() const noexcept { return dim() == n_; }

  /// Canonical basis rows.
  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
  Vector basis_vector(std::size_t r) const { return basis_.row(r); }
  /// Pivot column of each basis row (0-based).
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& w) const;
  /// Coordinates of v in the canonical basis; v must lie in the subspace.
  Vector coordinates(const Vector& v) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.basis_ < b.basis_;
  }

 private:
  std::size_t n_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace liegeo
