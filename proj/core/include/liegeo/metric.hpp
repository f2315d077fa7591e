#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liegeo/errors.hpp"
#include "liegeo/lie_algebra.hpp"

namespace liegeo {

/// Inner product given by a symmetric positive-definite rational Gram matrix.
class Metric {
 public:
  /// Throws InvalidArgument unless `gram` is symmetric with all leading
  /// principal minors positive.
  explicit Metric(Matrix gram);
  static Metric standard(std::size_t n);
  /// The metric for which the rows of `basis` are orthonormal.
  static Metric orthonormal_basis(const Matrix& basis);

  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }
  const Matrix& gram_inverse() const noexcept { return inverse_; }
  bool is_standard() const;

  Scalar inner(const Vector& x, const Vector& y) const;
  Scalar norm_sq(const Vector& x) const { return inner(x, x); }
  /// G x: the coordinate covector of x.
  Vector lower(const Vector& x) const { return gram_ * x; }
  /// G^{-1} a: the vector dual to the covector a.
  Vector raise(const Vector& a) const { return inverse_ * a; }

  friend bool operator==(const Metric& a, const Metric& b) { return a.gram_ == b.gram_; }

 private:
  Matrix gram_;
  Matrix inverse_;
};

/// A Lie algebra with an inner product.
struct MetricLieAlgebra {
  MetricLieAlgebra(LieAlgebra g, Metric m);
  /// Standard metric: the defining basis is orthonormal.
  explicit MetricLieAlgebra(LieAlgebra g);

  LieAlgebra algebra;
  Metric metric;

  std::size_t dim() const noexcept { return algebra.dim(); }
};

Scalar inner(const Metric& m, const Vector& x, const Vector& y);
Subspace orthogonal_complement(const Metric& m, const Subspace& w);
/// Orthogonal projection of x onto W.
Vector project(const Metric& m, const Subspace& w, const Vector& x);
/// Coordinates of the projection of x onto W in W's canonical basis.
Vector projection_coordinates(const Metric& m, const Subspace& w, const Vector& x);

/// nabla_x y of the left-invariant Levi-Civita connection.
Vector levi_civita(const MetricLieAlgebra& mg, const Vector& x, const Vector& y);

/// f(y): the vector dual to X -> <[X, y], y>. Zero exactly at geodesics.
Vector geodesic_defect(const MetricLieAlgebra& mg, const Vector& y);

struct GeodesicReport {
  bool geodesic = false;
  Vector defect;
  /// <f(y), f(y)>
  Scalar residual_norm_sq;
};
/// Throws InvalidArgument for y = 0. Decides via both nabla_y y and the
/// defect functional; a disagreement raises InternalInvariantError.
GeodesicReport is_geodesic(const MetricLieAlgebra& mg, const Vector& y);

struct TGWitness {
  /// X in the complement, Y and Z in h.
  Vector x, y, z;
  /// 1-based positions in the canonical bases of h-perp and h.
  std::array<std::size_t, 3> indices{};
  /// <[X,Y],Z> + <[X,Z],Y>, nonzero.
  Scalar value;
};

struct TGReport {
  bool totally_geodesic = false;
  std::optional<TGWitness> witness;
  bool complement_invariant = false;
};

/// Totally-geodesic test over canonical bases of h-perp and h; the first
/// violating triple in lexicographic order is reported.
TGReport is_totally_geodesic(const MetricLieAlgebra& mg, const Subalgebra& h);
/// Convenience overload; throws InvalidArgument if h is not a subalgebra.
TGReport is_totally_geodesic(const MetricLieAlgebra& mg, const Subspace& h);
/// Only the verdict; cheaper, no witness or invariance evaluation.
bool totally_geodesic_fast(const MetricLieAlgebra& mg, const Subspace& h);

/// [X, Y] in h-perp for all X in h-perp, Y in h.
bool is_invariant_complement(const MetricLieAlgebra& mg, const Subalgebra& h);

/// phi(x): Y -> pi_h [x, Y], as a matrix in h's canonical basis. x in h-perp.
Matrix phi_map(const MetricLieAlgebra& mg, const Subalgebra& h, const Vector& x);
/// psi(y): X -> pi_perp [y, X], as a matrix in h-perp's canonical basis. y in h.
Matrix psi_map(const MetricLieAlgebra& mg, const Subalgebra& h, const Vector& y);
/// Gram matrix of the metric restricted to W's canonical basis.
Matrix restricted_gram(const Metric& m, const Subspace& w);

/// Raised when no inner product makes y a geodesic; carries X with [X, y] = y.
class NoGeodesicMetric : public InvalidArgument {
 public:
  NoGeodesicMetric(const std::string& what, Vector witness)
      : InvalidArgument(what), witness_(std::move(witness)) {}
  const Vector& witness() const noexcept { return witness_; }

 private:
  Vector witness_;
};

/// A metric under which y is a geodesic: y is made orthogonal to im ad(y).
Metric construct_geodesic_metric(const LieAlgebra& g, const Vector& y);

/// Every ad(X) skew-adjoint.
bool is_bi_invariant(const MetricLieAlgebra& mg);
Matrix killing_form(const LieAlgebra& g);
/// -Killing form; throws InvalidArgument unless it is positive definite.
Metric killing_metric(const LieAlgebra& g);

/// Downward Gram-Schmidt: E_n = B_n, E_i = B_i minus its projection on
/// span(E_{i+1}, ..., E_n). Orthogonal, not normalized, deg_B(E_i) = i.
std::vector<Vector> gram_schmidt_adapted(const Metric& m, const std::vector<Vector>& basis);

}  // namespace liegeo
