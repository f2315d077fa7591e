#include "liegeo/filiform.hpp"

#include "liegeo/errors.hpp"
#include "liegeo/random.hpp"

namespace liegeo {

LieAlgebra standard_filiform(std::size_t n) {
  if (n < 3) throw InvalidArgument("standard_filiform: need n >= 3");
  LieAlgebra::Builder b(n, "L" + std::to_string(n));
  for (std::size_t i = 2; i < n; ++i) b.add(1, i, i + 1, 1);
  return b.build(JacobiCheck::skip);
}

LieAlgebra filiform_LC(const std::vector<Scalar>& c) {
  const std::size_t n = c.size() + 2;
  if (n < 3) throw InvalidArgument("filiform_LC: need at least one coefficient");
  LieAlgebra::Builder b(n, "LC");
  for (std::size_t i = 2; i < n; ++i) {
    const Scalar& ci = c[i - 2];
    if (sgn(ci) == 0) throw InvalidArgument("filiform_LC: coefficient c_" + std::to_string(i) + " is zero");
    b.add(1, i, i + 1, ci);
  }
  return b.build(JacobiCheck::skip);
}

LieAlgebra dim6_example() {
  LieAlgebra::Builder b(6, "dim6");
  for (std::size_t i = 2; i <= 5; ++i) b.add(1, i, i + 1, 1);
  b.add(2, 3, 6, -1);
  return b.build();
}

bool has_maximal_nilpotency_rank(const LieAlgebra& g, const Vector& x) {
  const std::size_t n = g.dim();
  if (x.size() != n) throw InvalidArgument("maximal nilpotency: dimension mismatch");
  if (n < 2) return false;
  const Matrix a = g.ad(x);
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    p = a * p;
    if (p.is_zero()) return false;
  }
  return !p.is_zero();
}

FiliformVerdict is_filiform(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  if (n < 3) throw InvalidArgument("is_filiform: need dimension >= 3");
  if (!is_nilpotent(g).nilpotent) throw InvalidArgument("is_filiform: algebra is not nilpotent");
  FiliformVerdict v;
  const Subspace d = derived_algebra(g);
  if (d.dim() != n - 2) return v;
  auto found = [&](const Vector& x) {
    if (!has_maximal_nilpotency_rank(g, x)) return false;
    v.filiform = true;
    v.witness = x;
    return true;
  };
  for (std::size_t i = 1; i <= n; ++i)
    if (found(Vector::unit(n, i))) return v;
  for (std::size_t j = 2; j <= n; ++j)
    for (std::size_t t = 1; t <= n; ++t) {
      Vector x = Vector::unit(n, 1);
      x[j - 1] = static_cast<long>(t);
      if (found(x)) return v;
    }
  // The bad set is contained in at most two lines of g/[g,g].
  std::vector<std::size_t> free;
  std::vector<bool> pivot(n, false);
  for (auto p : d.pivots()) pivot[p] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) free.push_back(c + 1);
  const Vector u1 = Vector::unit(n, free[0]), u2 = Vector::unit(n, free[1]);
  for (const auto& x : {u1 + u2, u1 - u2})
    if (found(x)) return v;
  throw InternalInvariantError("is_filiform: three independent directions all lack maximal nilpotency");
}

Matrix VergneBasis::matrix() const {
  const std::size_t n = vectors.size();
  return Matrix::from_rows(vectors, n);
}

Vector VergneBasis::coordinates(const Vector& x) const {
  auto c = solve(matrix().transpose(), x);
  if (!c) throw InvalidArgument("vergne coordinates: basis is singular or vector has wrong size");
  return *c;
}

namespace {

std::vector<Vector> chain(const LieAlgebra& g, const Vector& x1, const Vector& x2) {
  std::vector<Vector> vs{x1, x2};
  while (vs.size() < g.dim()) vs.push_back(g.bracket(x1, vs.back()));
  return vs;
}

Vector coords_in(const std::vector<Vector>& basis, const Vector& v) {
  auto c = solve(Matrix::from_rows(basis, v.size()).transpose(), v);
  if (!c) throw InternalInvariantError("vergne: chain vectors are not a basis");
  return *c;
}

}  // namespace

VergneBasis vergne_basis(const LieAlgebra& g) {
  const FiliformVerdict fv = is_filiform(g);
  if (!fv.filiform) throw InvalidArgument("vergne_basis: algebra is not filiform");
  const std::size_t n = g.dim();
  const Vector x1 = *fv.witness;
  Matrix p = Matrix::identity(n);
  const Matrix a = g.ad(x1);
  for (std::size_t k = 0; k + 2 < n; ++k) p = a * p;
  Vector x2;
  for (std::size_t j = 0; j < n && x2.size() == 0; ++j)
    if (!p.col(j).is_zero()) x2 = Vector::unit(n, j + 1);
  std::vector<Vector> vs = chain(g, x1, x2);
  if (n >= 4) {
    const Scalar b = coords_in(vs, g.bracket(vs[1], vs[2]))[3];
    if (sgn(b) != 0) {
      x2.add_scaled(-b, x1);
      vs = chain(g, x1, x2);
    }
  }
  VergneBasis vb;
  vb.vectors = std::move(vs);
  vb.alpha = 0;
  if (n % 2 == 0 && n >= 4) vb.alpha = coords_in(vb.vectors, g.bracket(vb.vectors[1], vb.vectors[n - 2]))[n - 1];
  vb.regular_for_this_basis = sgn(vb.alpha) == 0;
  verify_vergne_relations(g, vb);
  return vb;
}

void verify_vergne_relations(const LieAlgebra& g, const VergneBasis& vb) {
  const std::size_t n = g.dim();
  if (vb.vectors.size() != n) throw InternalInvariantError("vergne: wrong number of basis vectors");
  if (rank(vb.matrix()) != n) throw InternalInvariantError("vergne: vectors are not a basis");
  if (n % 2 == 1 && sgn(vb.alpha) != 0) throw InternalInvariantError("vergne: alpha nonzero in odd dimension");
  const LieAlgebra h = change_basis(g, vb.matrix());
  auto fail = [](std::size_t i, std::size_t j, const char* what) {
    throw InternalInvariantError("vergne relation fails at [X_" + std::to_string(i) + ", X_" + std::to_string(j) +
                                 "]: " + what);
  };
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      const Vector br = h.basis_bracket(i, j);
      if (i == 1) {
        const Vector want = j < n ? Vector::unit(n, j + 1) : Vector::zero(n);
        if (br != want) fail(i, j, "expected X_{j+1}");
      } else if (i + j == n + 1) {
        Vector want = Vector::zero(n);
        want[n - 1] = (i % 2 == 0) ? vb.alpha : Scalar(-vb.alpha);
        if (br != want) fail(i, j, "expected (-1)^i alpha X_n");
      } else {
        for (std::size_t k = 0; k + 1 < i + j && k < n; ++k)
          if (sgn(br[k]) != 0) fail(i, j, "not in g_{i+j}");
      }
    }
}

bool has_maximal_nilpotency(const LieAlgebra& g, const VergneBasis& vb, const Vector& x) {
  if (g.dim() < 5) throw InvalidArgument("has_maximal_nilpotency: need dimension >= 5");
  const Vector a = vb.coordinates(x);
  const bool by_coefficients = sgn(a[0]) != 0 && vb.alpha * a[1] != -a[0];
  const bool by_rank = has_maximal_nilpotency_rank(g, x);
  if (by_coefficients != by_rank) throw InternalInvariantError("has_maximal_nilpotency: coefficient test disagrees with rank");
  return by_coefficients;
}

RegularityReport regularity_report(const LieAlgebra& g, std::uint64_t seed, std::size_t max_attempts) {
  RegularityReport r;
  r.computed = vergne_basis(g);
  if (r.computed.regular_for_this_basis) {
    r.regular_basis_found = true;
    r.regular_basis = r.computed;
    r.verdict = "regular: alpha = 0 in the computed basis";
    return r;
  }
  Rng rng(seed);
  const std::size_t n = g.dim();
  for (r.attempts = 1; r.attempts <= max_attempts; ++r.attempts) {
    const Matrix m = random_invertible(rng, n);
    const VergneBasis vb = vergne_basis(change_basis(g, m));
    if (!vb.regular_for_this_basis) continue;
    VergneBasis back;
    for (const auto& v : vb.vectors) back.vectors.push_back(left_multiply(v, m));
    back.alpha = 0;
    back.regular_for_this_basis = true;
    verify_vergne_relations(g, back);
    r.regular_basis_found = true;
    r.regular_basis = std::move(back);
    r.verdict = "regular: a basis with alpha = 0 was found after " + std::to_string(r.attempts) + " basis changes";
    return r;
  }
  r.attempts = max_attempts;
  r.verdict = "irregular relative to computed basis (alpha = " + to_string(r.computed.alpha) +
              "); no basis with alpha = 0 found in " + std::to_string(max_attempts) + " attempts (heuristic)";
  return r;
}

Matrix lc_rescaling_map(const std::vector<Scalar>& c) {
  const std::size_t n = c.size() + 2;
  Vector f(n);
  f[0] = 1;
  f[1] = 1;
  for (std::size_t i = 2; i < n; ++i) {
    if (sgn(c[i - 2]) == 0) throw InvalidArgument("lc_rescaling_map: zero coefficient");
    f[i] = c[i - 2] / f[i - 1];
  }
  return Matrix::diagonal(f);
}

Subspace image_of(const Matrix& map, const Subspace& w) {
  std::vector<Vector> vs;
  for (std::size_t r = 0; r < w.dim(); ++r) vs.push_back(map * w.basis_vector(r));
  return Subspace::span(map.rows(), vs);
}

Cd2f cd2f_construction(std::size_t n) {
  if (n < 3) throw InvalidArgument("cd2f_construction: need n >= 3");
  const LieAlgebra g = standard_filiform(n);
  std::vector<Vector> e(n, Vector::zero(n));
  e[0] = Vector::unit(n, 1);
  e[n - 1] = Vector::unit(n, n);
  for (std::size_t i = 2; i <= n - 1; ++i) {
    for (std::size_t j = 0; 2 * j <= n - 1 - i; ++j) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), n - 1 - i - j, j);
      e[i - 1][i + 2 * j - 1] = binom;
    }
  }
  const Metric m = Metric::orthonormal_basis(Matrix::from_rows(e, n));
  std::vector<Vector> y;
  for (std::size_t i = 2; i <= n; ++i) {
    if (i == n - 1) continue;
    y.push_back((n - i) % 2 == 0 ? e[i - 1] : e[i - 1] - e[n - 2]);
  }
  Vector z2 = Vector::zero(n);
  for (std::size_t j = 1; j <= n - 2; j += 2) z2 += e[n - j - 1];
  Cd2f c{g, e, m, y, Subalgebra(g, Subspace::span(n, y)), e[0], z2};
  const MetricLieAlgebra mg(g, m);
  if (c.h.dim() != n - 2) throw InternalInvariantError("cd2f: subalgebra does not have codimension two");
  if (!totally_geodesic_fast(mg, c.h.space())) throw InternalInvariantError("cd2f: subalgebra is not totally geodesic");
  if (orthogonal_complement(m, c.h.space()) != Subspace::span(n, {c.z1, c.z2}))
    throw InternalInvariantError("cd2f: complement is not span(Z_1, Z_2)");
  if (!cd2f_bracket_identity(c)) throw InternalInvariantError("cd2f: bracket identity fails");
  return c;
}

bool cd2f_bracket_identity(const Cd2f& c) {
  const std::size_t n = c.e.size();
  for (std::size_t i = 2; i <= n - 1; ++i) {
    Vector want = Vector::zero(n);
    for (std::size_t k = i + 1; k <= n; k += 2) want += c.e[k - 1];
    if (c.algebra.bracket(c.e[0], c.e[i - 1]) != want) return false;
  }
  return true;
}

Irreg6 irreg6_example() {
  LieAlgebra::Builder b(6, "irreg6");
  for (std::size_t i = 2; i <= 5; ++i) b.add(1, i, i + 1, 1);
  b.add(2, 5, 6, 1);
  b.add(3, 4, 6, -1);
  const LieAlgebra g = b.build();
  std::vector<Vector> e;
  for (std::size_t i = 1; i <= 6; ++i) e.push_back(Vector::unit(6, i));
  e[0] = Vector::unit(6, 1) - Vector::unit(6, 2);
  const Metric m = Metric::orthonormal_basis(Matrix::from_rows(e, 6));
  Irreg6 r{g, e, m, Subalgebra(g, Subspace::span(6, {e[1], e[4], e[5]}))};
  if (!totally_geodesic_fast(MetricLieAlgebra(g, m), r.h.space()))
    throw InternalInvariantError("irreg6: subalgebra is not totally geodesic");
  return r;
}

Scalar FourDimNormalForm::alpha_sq_normalized() const { return alpha * alpha * norms[2] / (norms[0] * norms[1]); }

Scalar FourDimNormalForm::gamma_sq_normalized() const { return gamma * gamma * norms[3] / (norms[0] * norms[2]); }

Scalar FourDimNormalForm::beta_sq_signed_normalized() const {
  const Scalar s = beta * beta * norms[3] / (norms[0] * norms[1]);
  return sgn(beta) < 0 ? Scalar(-s) : s;
}

MetricLieAlgebra FourDimNormalForm::in_basis(const LieAlgebra& g) const {
  const Matrix m = Matrix::from_rows({basis[0], basis[1], basis[2], basis[3]}, 4);
  return MetricLieAlgebra(change_basis(g, m), Metric(Matrix::diagonal(Vector{norms[0], norms[1], norms[2], norms[3]})));
}

FourDimNormalForm normalize_4d(const MetricLieAlgebra& mg) {
  const LieAlgebra& g = mg.algebra;
  if (g.dim() != 4) throw InvalidArgument("normalize_4d: need dimension 4");
  if (!is_nilpotent(g).nilpotent) throw InvalidArgument("normalize_4d: algebra is not nilpotent");
  const Subspace d = derived_algebra(g);
  if (d.dim() != 2) throw InvalidArgument("normalize_4d: derived algebra must be 2-dimensional");
  const Metric& m = mg.metric;
  const Subspace z = center(g);
  if (z.dim() != 1) throw InternalInvariantError("normalize_4d: centre is not 1-dimensional");
  Vector x4 = z.basis_vector(0);
  Vector x3 = d.intersect(orthogonal_complement(m, z)).basis_vector(0);
  const Subspace dp = orthogonal_complement(m, d);
  // v -> [v, X_3] on the 2-dim space dp, valued in span(X_4)
  const Vector p = dp.basis_vector(0), q = dp.basis_vector(1);
  const Vector bp = g.bracket(p, x3), bq = g.bracket(q, x3);
  const std::size_t k = x4.leading_index() - 1;
  Vector x2 = bp[k] * q - bq[k] * p;
  if (x2.is_zero()) throw InternalInvariantError("normalize_4d: X_3 is central");
  x2 *= 1 / Scalar(x2[x2.leading_index() - 1]);
  Vector x1 = orthogonal_complement(m, Subspace::span(4, {x2})).intersect(dp).basis_vector(0);
  auto coeff = [&](const Vector& br, const Vector& target) {
    // br is a multiple of target
    const std::size_t i = target.leading_index() - 1;
    return Scalar(br[i] / target[i]);
  };
  FourDimNormalForm nf;
  const Vector b13 = g.bracket(x1, x3);
  nf.gamma = coeff(b13, x4);
  // [X_1, X_2] = alpha X_3 + beta X_4, X_3 and X_4 orthogonal
  const Vector b12 = g.bracket(x1, x2);
  nf.alpha = m.inner(b12, x3) / m.norm_sq(x3);
  nf.beta = m.inner(b12, x4) / m.norm_sq(x4);
  if (sgn(nf.alpha) < 0) {
    x3 *= -1;
    nf.alpha = -nf.alpha;
    nf.gamma = -nf.gamma;
  }
  if (sgn(nf.gamma) < 0) {
    x4 *= -1;
    nf.gamma = -nf.gamma;
    nf.beta = -nf.beta;
  }
  nf.basis = {x1, x2, x3, x4};
  for (std::size_t i = 0; i < 4; ++i) nf.norms[i] = m.norm_sq(nf.basis[i]);
  // exact verification of the normal form
  const LieAlgebra h = change_basis(g, Matrix::from_rows({x1, x2, x3, x4}, 4));
  const Vector want12{0, 0, nf.alpha, nf.beta}, want13{0, 0, 0, nf.gamma};
  bool ok = sgn(nf.alpha) > 0 && sgn(nf.gamma) > 0 && h.basis_bracket(1, 2) == want12 && h.basis_bracket(1, 3) == want13;
  for (auto [i, j] : {std::pair{1, 4}, {2, 3}, {2, 4}, {3, 4}}) ok = ok && h.basis_bracket(i, j).is_zero();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) ok = ok && sgn(m.inner(nf.basis[i], nf.basis[j])) == 0;
  if (!ok) throw InternalInvariantError("normalize_4d: normal form relations fail");
  return nf;
}

bool geodesic_cone_4d(const FourDimNormalForm& nf, const Scalar& x, const Scalar& y, const Scalar& z) {
  return sgn(nf.alpha * nf.norms[2] * x * y + nf.beta * nf.norms[3] * x * z + nf.gamma * nf.norms[3] * y * z) == 0;
}

bool geodesic_4d(const FourDimNormalForm& nf, const Vector& a) {
  if (a.size() != 4) throw InvalidArgument("geodesic_4d: need 4 coordinates");
  if (sgn(a[0]) != 0) return sgn(a[2]) == 0 && sgn(a[3]) == 0;
  return geodesic_cone_4d(nf, a[1], a[2], a[3]);
}

std::vector<Subalgebra> tg_2d_subalgebras_4d(const LieAlgebra& g, const FourDimNormalForm& nf) {
  if (sgn(nf.beta) != 0) return {};
  const auto& b = nf.basis;
  Vector v = nf.gamma * nf.norms[3] * b[1];
  v.add_scaled(-nf.alpha * nf.norms[2], b[3]);
  return {Subalgebra(g, Subspace::span(4, {b[1], b[3]})), Subalgebra(g, Subspace::span(4, {v, b[2]}))};
}

bool is_standard_filiform(const LieAlgebra& g) {
  if (!is_filiform(g).filiform) throw InvalidArgument("is_standard_filiform: algebra is not filiform");
  const std::size_t n = g.dim();
  const Subspace d = derived_algebra(g);
  if (!is_abelian(g, d)) return false;
  std::vector<bool> pivot(n, false);
  for (auto p : d.pivots()) pivot[p] = true;
  std::vector<Vector> u;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) u.push_back(Vector::unit(n, c + 1));
  // columns: (a, b) -> ([a u_1 + b u_2, d_k])_k stacked
  Matrix sys(n * d.dim(), 2);
  for (std::size_t k = 0; k < d.dim(); ++k)
    for (std::size_t s = 0; s < 2; ++s) {
      const Vector br = g.bracket(u[s], d.basis_vector(k));
      for (std::size_t r = 0; r < n; ++r) sys(k * n + r, s) = br[r];
    }
  return rank(sys) < 2;
}

HeisConditionReport heis_condition_b(const LieAlgebra& g, std::uint64_t seed, std::size_t random_samples) {
  HeisConditionReport r;
  if (!is_nilpotent(g).nilpotent) throw InvalidArgument("heis_condition_b: algebra is not nilpotent");
  const std::size_t n = g.dim();
  const Subspace d = derived_algebra(g);
  r.two_step = !d.is_zero() && bracket_span(g, Subspace::whole(n), d).is_zero();
  if (!r.two_step) return r;
  const Subspace z = center(g);
  std::vector<Vector> samples;
  for (std::size_t i = 1; i <= n; ++i) samples.push_back(Vector::unit(n, i));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      samples.push_back(Vector::unit(n, i) + Vector::unit(n, j));
      samples.push_back(Vector::unit(n, i) - Vector::unit(n, j));
    }
  Rng rng(seed);
  for (std::size_t s = 0; s < random_samples; ++s) samples.push_back(random_int_vector(rng, n, 5));
  r.holds = true;
  for (const auto& x : samples) {
    if (z.contains(x)) continue;
    ++r.samples_checked;
    if (rank(g.ad(x)) != d.dim()) {
      r.holds = false;
      r.counterexample = x;
      break;
    }
  }
  return r;
}

}  // namespace liegeo
