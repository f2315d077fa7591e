#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liegeo/matrix.hpp"
#include "liegeo/scalar.hpp"
#include "liegeo/subspace.hpp"

namespace liegeo {

enum class JacobiCheck { verify, skip };

struct JacobiVerdict {
  bool holds = true;
  /// First violating basis triple (i, j, k), 1-based, i < j < k.
  std::optional<std::array<std::size_t, 3>> triple;
  Vector residual;
};

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [X_i, X_j] = sum_k c_ij^k X_k, stored for i < j only.
///
/// Values are immutable and cheap to copy (shared storage).
class LieAlgebra {
 public:
  class Builder {
   public:
    explicit Builder(std::size_t dim, std::string name = {});

    /// [X_i, X_j] := value. Requires i != j; i > j stores the negation.
    Builder& set(std::size_t i, std::size_t j, const Vector& value);
    /// [X_i, X_j] += c X_k.
    Builder& add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);
    Builder& name(std::string name);

    /// Throws InvalidArgument if `check` is verify and the Jacobi identity fails.
    LieAlgebra build(JacobiCheck check = JacobiCheck::verify) const;

   private:
    std::size_t n_;
    std::string name_;
    std::vector<Vector> c_;
  };

  /// The abelian algebra R^n.
  static LieAlgebra abelian(std::size_t n, std::string name = {});

  std::size_t dim() const noexcept;
  const std::string& name() const noexcept;
  LieAlgebra renamed(std::string name) const;

  /// Structure vector [X_i, X_j] for any 1-based i, j.
  Vector basis_bracket(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& x, const Vector& y) const;
  /// Matrix of ad(x) acting on column coordinate vectors.
  Matrix ad(const Vector& x) const;

  /// True when every structure constant vanishes.
  bool is_abelian() const noexcept;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

 private:
  struct Term {
    std::size_t k;
    Scalar c;
  };
  struct Pair {
    std::size_t i, j;  // 0-based, i < j
    std::vector<Term> terms;
  };
  struct Data {
    std::size_t n = 0;
    std::string name;
    std::vector<Vector> c;     // packed i < j
    std::vector<Pair> nonzero;  // sparse view of c
  };

  explicit LieAlgebra(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::size_t packed(std::size_t i0, std::size_t j0) const noexcept;

  std::shared_ptr<const Data> d_;
};

JacobiVerdict verify_jacobi(const LieAlgebra& g);

/// span{[u, w] : u in U, w in W}
Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& w);
Subspace derived_algebra(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);
/// Kernel of ad restricted to W (vectors of g commuting with all of W).
Subspace centralizer(const LieAlgebra& g, const Subspace& w);
/// [g, g], [g, [g, g]], ... starting with g itself; ends with the first
/// repeated term (0 for nilpotent algebras).
std::vector<Subspace> lower_central_series(const LieAlgebra& g);

struct NilpotencyVerdict {
  bool nilpotent = false;
  /// Smallest c with C_c(g) = 0; meaningful only when nilpotent.
  std::size_t nilpotency_class = 0;
};
NilpotencyVerdict is_nilpotent(const LieAlgebra& g);

bool is_abelian(const LieAlgebra& g, const Subspace& w);
bool is_ideal(const LieAlgebra& g, const Subspace& w);
bool is_subalgebra(const LieAlgebra& g, const Subspace& w);

/// A bracket-closed subspace together with its ambient algebra.
class Subalgebra {
 public:
  /// Throws InvalidArgument when `space` is not bracket-closed.
  Subalgebra(LieAlgebra g, Subspace space);

  const LieAlgebra& algebra() const noexcept { return g_; }
  const Subspace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  /// Center of the subalgebra itself, as a subspace of g.
  Subspace own_center() const;

  friend bool operator==(const Subalgebra& a, const Subalgebra& b) { return a.space_ == b.space_; }
  friend bool operator<(const Subalgebra& a, const Subalgebra& b) { return a.space_ < b.space_; }

 private:
  LieAlgebra g_;
  Subspace space_;
};

/// Smallest subalgebra containing `gens`.
Subalgebra generated_subalgebra(const LieAlgebra& g, const std::vector<Vector>& gens);
/// As above, giving up (nullopt) as soon as the closure exceeds `max_dim`.
std::optional<Subspace> generated_subalgebra_capped(const LieAlgebra& g, const std::vector<Vector>& gens,
                                                     std::size_t max_dim);

struct Quotient {
  LieAlgebra algebra;
  /// Rows x cols = dim(g/I) x dim(g); maps g-coordinates to quotient coordinates.
  Matrix projection;
  /// Representatives in g of the quotient basis.
  std::vector<Vector> lifts;
};
/// g / I. Throws InvalidArgument when I is not an ideal.
Quotient quotient(const LieAlgebra& g, const Subspace& ideal);

/// Structure constants in the basis Y_i = sum_k M(i, k) X_k (rows of M).
/// Throws InvalidArgument when M is singular.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& m);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

struct AbelianizationVerdict {
  /// span(a, [g,g]) == g
  bool surjective = false;
  bool is_whole = false;
};
/// Requires g nilpotent (InvalidArgument otherwise). A surjective proper
/// subalgebra would contradict nilpotency and raises InternalInvariantError.
AbelianizationVerdict abelianization_surjectivity_check(const LieAlgebra& g, const Subalgebra& a);

}  // namespace liegeo
