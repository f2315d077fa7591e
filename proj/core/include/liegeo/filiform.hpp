#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liegeo/metric.hpp"

namespace liegeo {

/// L_n: [X_1, X_i] = X_{i+1} for 2 <= i <= n-1. Requires n >= 3.
LieAlgebra standard_filiform(std::size_t n);
/// L_C: [X_1, X_i] = c_i X_{i+1}; `c` lists c_2, ..., c_{n-1}, all nonzero.
LieAlgebra filiform_LC(const std::vector<Scalar>& c);
/// [X_1, X_i] = X_{i+1} (i = 2..5), [X_2, X_3] = -X_6.
LieAlgebra dim6_example();

struct FiliformVerdict {
  bool filiform = false;
  std::optional<Vector> witness;
};
/// Requires g nilpotent of dimension >= 3. The sweep tries basis vectors,
/// then X_1 + t X_j (t = 1..n), then three pairwise independent directions
/// modulo [g, g]; a filiform algebra cannot fail all three.
FiliformVerdict is_filiform(const LieAlgebra& g);
/// ad(x)^{n-2} != 0
bool has_maximal_nilpotency_rank(const LieAlgebra& g, const Vector& x);

/// Adapted basis with [X_1, X_i] = X_{i+1}, [X_i, X_j] in g_{i+j} off the
/// antidiagonal and [X_i, X_{n-i+1}] = (-1)^i alpha X_n.
struct VergneBasis {
  std::vector<Vector> vectors;
  Scalar alpha;
  bool regular_for_this_basis = true;

  /// Rows are the basis vectors.
  Matrix matrix() const;
  /// Coordinates of x in this basis.
  Vector coordinates(const Vector& x) const;
};

/// Throws InvalidArgument when g is not filiform, InternalInvariantError if the
/// constructed basis misses a relation.
VergneBasis vergne_basis(const LieAlgebra& g);
/// Throws InternalInvariantError naming the first failing relation.
void verify_vergne_relations(const LieAlgebra& g, const VergneBasis& vb);

/// x = sum a_i X_i in the Vergne basis has maximal nilpotency iff a_1 != 0
/// and alpha a_2 != -a_1. Requires dim >= 5; cross-checked against the rank test.
bool has_maximal_nilpotency(const LieAlgebra& g, const VergneBasis& vb, const Vector& x);

struct RegularityReport {
  VergneBasis computed;
  /// alpha == 0 for the computed basis, or a basis with alpha == 0 was found.
  bool regular_basis_found = false;
  std::optional<VergneBasis> regular_basis;
  std::size_t attempts = 0;
  std::string verdict;
};
/// For even n >= 6 with alpha != 0, retries the construction after up to
/// `max_attempts` seeded random changes of basis.
RegularityReport regularity_report(const LieAlgebra& g, std::uint64_t seed, std::size_t max_attempts = 32);

/// Diagonal matrix of X_1 -> X_1, X_i -> f_i X_i with f_2 = 1, f_i f_{i+1} = c_i.
Matrix lc_rescaling_map(const std::vector<Scalar>& c);
/// Image of a subspace under a linear map given as a matrix on columns.
Subspace image_of(const Matrix& map, const Subspace& w);

struct Cd2f {
  LieAlgebra algebra;  // L_n
  std::vector<Vector> e;
  Metric metric;  // E orthonormal
  std::vector<Vector> y;  // Y_2, ..., Y_{n-2}, Y_n
  Subalgebra h;
  Vector z1, z2;
};
/// Codimension-2 totally geodesic subalgebra of L_n under a suitable metric.
Cd2f cd2f_construction(std::size_t n);
/// [E_1, E_i] = E_{i+1} + E_{i+3} + ... for 2 <= i <= n-1.
bool cd2f_bracket_identity(const Cd2f& c);

struct Irreg6 {
  LieAlgebra algebra;
  std::vector<Vector> e;  // E_1 = X_1 - X_2, E_i = X_i
  Metric metric;          // E orthonormal
  Subalgebra h;           // span(E_2, E_5, E_6)
};
Irreg6 irreg6_example();

/// Orthogonal (not normalized) basis with [X_1, X_2] = alpha X_3 + beta X_4,
/// [X_1, X_3] = gamma X_4, other brackets zero, alpha, gamma > 0.
struct FourDimNormalForm {
  std::array<Vector, 4> basis;
  /// <X_i, X_i>
  std::array<Scalar, 4> norms;
  Scalar alpha, beta, gamma;

  /// Squares of the constants for the normalized basis X_i / |X_i|.
  Scalar alpha_sq_normalized() const;
  Scalar gamma_sq_normalized() const;
  /// beta^2 n_4 / (n_1 n_2), carrying the sign of beta.
  Scalar beta_sq_signed_normalized() const;
  /// The algebra and metric written in `basis`.
  MetricLieAlgebra in_basis(const LieAlgebra& g) const;
};
/// Requires dim 4, nilpotent, dim [g, g] = 2.
FourDimNormalForm normalize_4d(const MetricLieAlgebra& mg);
/// Is x X_2 + y X_3 + z X_4 (coordinates in nf.basis) a geodesic?
/// alpha n_3 xy + beta n_4 xz + gamma n_4 yz = 0.
bool geodesic_cone_4d(const FourDimNormalForm& nf, const Scalar& x, const Scalar& y, const Scalar& z);
/// Full predicate for sum a_i X_i: if a_1 != 0 then a_3 = a_4 = 0, else the cone.
bool geodesic_4d(const FourDimNormalForm& nf, const Vector& a);
/// Empty when beta != 0; span(X_2, X_4) and span(gamma n_4 X_2 - alpha n_3 X_4, X_3) otherwise.
std::vector<Subalgebra> tg_2d_subalgebras_4d(const LieAlgebra& g, const FourDimNormalForm& nf);

/// g has an abelian ideal of codimension one. Requires g filiform.
bool is_standard_filiform(const LieAlgebra& g);

struct HeisConditionReport {
  bool two_step = false;
  bool holds = false;
  std::size_t samples_checked = 0;
  std::optional<Vector> counterexample;
};
/// Sampling check that g is 2-step and ad(X) maps onto [g, g] for X outside
/// the centre: basis vectors, pairwise sums and differences, then seeded
/// random integer vectors.
HeisConditionReport heis_condition_b(const LieAlgebra& g, std::uint64_t seed, std::size_t random_samples = 64);

}  // namespace liegeo
