#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liegeo/filiform.hpp"

namespace liegeo {

struct SearchBudget {
  std::uint64_t seed = 1;
  /// Cap on candidate subspaces evaluated by search_tg_subalgebras.
  std::size_t max_candidates = 10000;
  double tolerance = 1e-10;
  /// Per start of the numeric solver.
  std::size_t max_iterations = 400;
};

struct NumericGeodesic {
  /// Unit vector for the metric, in the defining basis.
  std::vector<double> unit_vector;
  /// |f(Y)| for the metric.
  double residual = 0;
  bool converged = false;
  std::size_t starts_used = 0;
  /// max |<f(Y), Y>| over all iterates.
  double max_orthogonality_defect = 0;
  /// Rational vector near the result, if continued fractions found one.
  std::optional<Vector> rational;
  /// The rational vector has exactly zero geodesic defect.
  bool exact_confirmed = false;
};

/// Multi-start projected gradient on the unit sphere for |f(Y)|^2 with a
/// Levenberg-Marquardt polish; 8(n-1) starts (basis directions first, then
/// scrambled Halton directions).
NumericGeodesic find_geodesic_numeric(const MetricLieAlgebra& mg, const SearchBudget& budget);

/// Continued-fraction rounding of each coordinate after scaling the largest
/// to 1; nullopt when some coordinate needs a denominator above max_den.
std::optional<Vector> rational_reconstruction(const std::vector<double>& x, long max_den = 1000000, double tol = 1e-9);

/// Orthogonal basis adapted to g: the Gram-Schmidt (top-down) image of a
/// Vergne basis when g is filiform, of the defining basis otherwise.
std::vector<Vector> adapted_orthogonal_basis(const MetricLieAlgebra& mg);

struct SearchResult {
  std::vector<Subalgebra> found;
  std::size_t candidates = 0;
  std::size_t found_coordinate = 0, found_pencil = 0, found_random = 0;
  bool budget_exhausted = false;
  /// Searches give evidence, never proofs of nonexistence.
  std::string note;
};

/// Totally geodesic subalgebras of dimension k, 1 <= k < dim. Every result
/// passed the exact check; duplicates removed; sorted canonically.
SearchResult search_tg_subalgebras(const MetricLieAlgebra& mg, std::size_t k, const SearchBudget& budget);

struct MaxNilpotencyProbe {
  bool found = false;
  std::optional<Vector> element;
};
/// Decides whether W contains an element of maximal nilpotency by testing
/// 2 dim(W) - 1 points on the moment curve of its basis (no two proper
/// subspaces of W contain them all). Requires g filiform.
MaxNilpotencyProbe contains_maximal_nilpotency(const LieAlgebra& g, const Subspace& w);

struct FoundProperties {
  bool totally_geodesic = false;
  bool complement_invariant = false;
  bool psi_homomorphism = true;
  /// Meaningful for nilpotent g.
  bool psi_nilpotent = true;
  bool codim2 = false;
  /// Codimension-2 checks; true when not applicable.
  bool z_bracket_in_h = true;
  bool z_bracket_in_center = true;
  /// a = subalgebra generated by h-perp; a cap h inside z(h). Computed for
  /// every codimension in nilpotent g, required only in codimension 2.
  bool a_cap_h_in_center = true;
  Subspace a_cap_h;
  /// Filiform g only.
  bool contains_max_nilpotent = false;
  bool complement_contains_max_nilpotent = false;
  bool dim_bound_applies = false;
  bool dim_bound_holds = true;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};
/// Requires h totally geodesic (InvalidArgument otherwise).
FoundProperties verify_found_subalgebra_properties(const MetricLieAlgebra& mg, const Subalgebra& h);

struct DimensionAudit {
  std::size_t n = 0;
  std::size_t max_dim_found = 0;
  std::vector<std::size_t> found_per_dim;  // index k
  bool any_invariant_complement = false;
  std::vector<Subalgebra> found;
  std::vector<bool> invariant;
  std::size_t candidates = 0;
  std::string note;
};
/// Runs the search for every k and checks the dimension bounds; a violation
/// throws PropertyViolation carrying the subalgebra basis. Requires g filiform.
DimensionAudit audit_dimension_bounds(const MetricLieAlgebra& mg, const SearchBudget& budget);

}  // namespace liegeo
