#include "liegeo/metric.hpp"

#include "liegeo/errors.hpp"

namespace liegeo {

namespace {

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) throw InvalidArgument(std::string(what) + ": dimension mismatch");
}

// W G W^T for the canonical basis rows of W.
Matrix gram_on(const Metric& m, const Matrix& rows) {
  const std::size_t d = rows.rows();
  std::vector<Vector> lowered;
  lowered.reserve(d);
  for (std::size_t r = 0; r < d; ++r) lowered.push_back(m.lower(rows.row(r)));
  Matrix out(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      out(a, b) = dot(rows.row(a), lowered[b]);
      out(b, a) = out(a, b);
    }
  return out;
}

// ad(y)^T G y: the covector k -> <[y, X_k], y>.
Vector ad_transpose_lowered(const MetricLieAlgebra& mg, const Vector& y, const Vector& w) {
  const Vector gw = mg.metric.lower(w);
  const Matrix a = mg.algebra.ad(y);
  return left_multiply(gw, a);
}

}  // namespace

Metric::Metric(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square()) throw InvalidArgument("metric: Gram matrix is not square");
  for (std::size_t r = 0; r < gram_.rows(); ++r)
    for (std::size_t c = 0; c < gram_.cols(); ++c) gram_(r, c).canonicalize();
  if (!gram_.is_symmetric()) throw InvalidArgument("metric: Gram matrix is not symmetric");
  for (const auto& minor : leading_principal_minors(gram_))
    if (sgn(minor) <= 0) throw InvalidArgument("metric: Gram matrix is not positive definite");
  inverse_ = *inverse(gram_);
}

Metric Metric::standard(std::size_t n) { return Metric(Matrix::identity(n)); }

Metric Metric::orthonormal_basis(const Matrix& basis) {
  auto inv = inverse(basis);
  if (!inv) throw InvalidArgument("metric: basis is singular");
  return Metric(*inv * inv->transpose());
}

bool Metric::is_standard() const { return gram_ == Matrix::identity(dim()); }

Scalar Metric::inner(const Vector& x, const Vector& y) const {
  require_dim(x.size(), dim(), "inner");
  require_dim(y.size(), dim(), "inner");
  Scalar s = 0;
  const std::size_t n = dim();
  for (std::size_t r = 0; r < n; ++r) {
    if (sgn(x[r]) == 0) continue;
    Scalar row = 0;
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(y[c]) != 0 && sgn(gram_(r, c)) != 0) row += gram_(r, c) * y[c];
    s += x[r] * row;
  }
  return s;
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra g, Metric m) : algebra(std::move(g)), metric(std::move(m)) {
  require_dim(metric.dim(), algebra.dim(), "metric Lie algebra");
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra g) : algebra(g), metric(Metric::standard(g.dim())) {}

Scalar inner(const Metric& m, const Vector& x, const Vector& y) { return m.inner(x, y); }

Subspace orthogonal_complement(const Metric& m, const Subspace& w) {
  require_dim(w.ambient_dim(), m.dim(), "orthogonal_complement");
  if (w.is_zero()) return Subspace::whole(m.dim());
  return Subspace::row_space(kernel(w.basis() * m.gram()));
}

Vector projection_coordinates(const Metric& m, const Subspace& w, const Vector& x) {
  require_dim(w.ambient_dim(), m.dim(), "project");
  require_dim(x.size(), m.dim(), "project");
  if (w.is_zero()) return Vector();
  const Matrix& b = w.basis();
  const Vector rhs = b * m.lower(x);
  auto c = solve(gram_on(m, b), rhs);
  if (!c) throw InternalInvariantError("project: restricted Gram matrix is singular");
  return *c;
}

Vector project(const Metric& m, const Subspace& w, const Vector& x) {
  if (w.is_zero()) return Vector::zero(m.dim());
  return left_multiply(projection_coordinates(m, w, x), w.basis());
}

Matrix restricted_gram(const Metric& m, const Subspace& w) {
  require_dim(w.ambient_dim(), m.dim(), "restricted_gram");
  return gram_on(m, w.basis());
}

Vector levi_civita(const MetricLieAlgebra& mg, const Vector& x, const Vector& y) {
  require_dim(x.size(), mg.dim(), "levi_civita");
  require_dim(y.size(), mg.dim(), "levi_civita");
  // 2 G nabla = G[x,y] - ad(x)^T G y - ad(y)^T G x
  Vector rhs = mg.metric.lower(mg.algebra.bracket(x, y));
  rhs -= ad_transpose_lowered(mg, x, y);
  rhs -= ad_transpose_lowered(mg, y, x);
  Vector out = mg.metric.raise(rhs);
  out *= Scalar(1, 2);
  return out;
}

Vector geodesic_defect(const MetricLieAlgebra& mg, const Vector& y) {
  require_dim(y.size(), mg.dim(), "geodesic_defect");
  // alpha_k = <[X_k, y], y> = -<[y, X_k], y>
  Vector alpha = ad_transpose_lowered(mg, y, y);
  alpha *= -1;
  return mg.metric.raise(alpha);
}

GeodesicReport is_geodesic(const MetricLieAlgebra& mg, const Vector& y) {
  require_dim(y.size(), mg.dim(), "is_geodesic");
  if (y.is_zero()) throw InvalidArgument("is_geodesic: zero vector");
  GeodesicReport r;
  r.defect = geodesic_defect(mg, y);
  const Vector nabla = levi_civita(mg, y, y);
  if (nabla != r.defect) throw InternalInvariantError("is_geodesic: nabla_y y differs from the defect vector");
  r.geodesic = r.defect.is_zero();
  r.residual_norm_sq = mg.metric.norm_sq(r.defect);
  return r;
}

namespace {

struct TGFrame {
  Matrix h;     // canonical rows of h
  Matrix perp;  // canonical rows of h-perp
};

TGFrame frame(const MetricLieAlgebra& mg, const Subspace& h) {
  require_dim(h.ambient_dim(), mg.dim(), "totally geodesic check");
  return {h.basis(), orthogonal_complement(mg.metric, h).basis()};
}

// S(b, c) = <[X, H_c], H_b>
Matrix tg_form(const MetricLieAlgebra& mg, const Matrix& h, const Vector& x) {
  const std::size_t d = h.rows();
  std::vector<Vector> lowered, images;
  lowered.reserve(d);
  images.reserve(d);
  for (std::size_t r = 0; r < d; ++r) {
    const Vector v = h.row(r);
    lowered.push_back(mg.metric.lower(v));
    images.push_back(mg.algebra.bracket(x, v));
  }
  Matrix s(d, d);
  for (std::size_t b = 0; b < d; ++b)
    for (std::size_t c = 0; c < d; ++c) s(b, c) = dot(lowered[b], images[c]);
  return s;
}

bool invariant(const MetricLieAlgebra& mg, const TGFrame& f) {
  std::vector<Vector> lowered;
  for (std::size_t r = 0; r < f.h.rows(); ++r) lowered.push_back(mg.metric.lower(f.h.row(r)));
  for (std::size_t a = 0; a < f.perp.rows(); ++a) {
    const Vector x = f.perp.row(a);
    for (std::size_t b = 0; b < f.h.rows(); ++b) {
      const Vector br = mg.algebra.bracket(x, f.h.row(b));
      for (const auto& l : lowered)
        if (sgn(dot(l, br)) != 0) return false;
    }
  }
  return true;
}

}  // namespace

TGReport is_totally_geodesic(const MetricLieAlgebra& mg, const Subalgebra& h) {
  const TGFrame f = frame(mg, h.space());
  TGReport r;
  r.totally_geodesic = true;
  for (std::size_t a = 0; a < f.perp.rows() && r.totally_geodesic; ++a) {
    const Vector x = f.perp.row(a);
    const Matrix s = tg_form(mg, f.h, x);
    for (std::size_t b = 0; b < s.rows() && r.totally_geodesic; ++b)
      for (std::size_t c = b; c < s.rows(); ++c) {
        Scalar v = s(b, c) + s(c, b);
        if (sgn(v) == 0) continue;
        r.totally_geodesic = false;
        r.witness = TGWitness{x, f.h.row(b), f.h.row(c), {a + 1, b + 1, c + 1}, std::move(v)};
        break;
      }
  }
  r.complement_invariant = invariant(mg, f);
  if (r.complement_invariant && !r.totally_geodesic)
    throw InternalInvariantError("invariant complement but not totally geodesic");
  return r;
}

TGReport is_totally_geodesic(const MetricLieAlgebra& mg, const Subspace& h) {
  return is_totally_geodesic(mg, Subalgebra(mg.algebra, h));
}

bool totally_geodesic_fast(const MetricLieAlgebra& mg, const Subspace& h) {
  const TGFrame f = frame(mg, h);
  for (std::size_t a = 0; a < f.perp.rows(); ++a) {
    const Matrix s = tg_form(mg, f.h, f.perp.row(a));
    for (std::size_t b = 0; b < s.rows(); ++b)
      for (std::size_t c = b; c < s.rows(); ++c)
        if (sgn(s(b, c) + s(c, b)) != 0) return false;
  }
  return true;
}

bool is_invariant_complement(const MetricLieAlgebra& mg, const Subalgebra& h) {
  const TGFrame f = frame(mg, h.space());
  const bool inv = invariant(mg, f);
  if (inv && !totally_geodesic_fast(mg, h.space()))
    throw InternalInvariantError("invariant complement but not totally geodesic");
  return inv;
}

Matrix phi_map(const MetricLieAlgebra& mg, const Subalgebra& h, const Vector& x) {
  const Subspace perp = orthogonal_complement(mg.metric, h.space());
  if (!perp.contains(x)) throw InvalidArgument("phi_map: vector is not in the orthogonal complement");
  const std::size_t d = h.dim();
  Matrix out(d, d);
  for (std::size_t c = 0; c < d; ++c)
    out.set_col(c, projection_coordinates(mg.metric, h.space(), mg.algebra.bracket(x, h.space().basis_vector(c))));
  return out;
}

Matrix psi_map(const MetricLieAlgebra& mg, const Subalgebra& h, const Vector& y) {
  if (!h.space().contains(y)) throw InvalidArgument("psi_map: vector is not in the subalgebra");
  const Subspace perp = orthogonal_complement(mg.metric, h.space());
  const std::size_t m = perp.dim();
  Matrix out(m, m);
  for (std::size_t c = 0; c < m; ++c)
    out.set_col(c, projection_coordinates(mg.metric, perp, mg.algebra.bracket(y, perp.basis_vector(c))));
  return out;
}

Metric construct_geodesic_metric(const LieAlgebra& g, const Vector& y) {
  require_dim(y.size(), g.dim(), "construct_geodesic_metric");
  if (y.is_zero()) throw InvalidArgument("construct_geodesic_metric: zero vector");
  const std::size_t n = g.dim();
  const Matrix a = g.ad(y);
  const Subspace image = Subspace::row_space(a.transpose());
  if (image.contains(y)) {
    // [X, y] = -ad(y) X = y
    auto x = particular_solution(a, -y);
    if (!x || g.bracket(*x, y) != y) throw InternalInvariantError("construct_geodesic_metric: witness lost");
    throw NoGeodesicMetric("no inner product makes this vector a geodesic: [X, y] = y for X = " + to_string(*x), *x);
  }
  std::vector<Vector> basis = image.basis_vectors();
  basis.push_back(y);
  Subspace spanned = Subspace::span(n, basis);
  for (std::size_t i = 1; i <= n && basis.size() < n; ++i) {
    const Vector e = Vector::unit(n, i);
    if (spanned.contains(e)) continue;
    basis.push_back(e);
    spanned = Subspace::span(n, basis);
  }
  Metric m = Metric::orthonormal_basis(Matrix::from_rows(basis, n));
  if (!is_geodesic(MetricLieAlgebra(g, m), y).geodesic)
    throw InternalInvariantError("construct_geodesic_metric: constructed metric fails");
  return m;
}

bool is_bi_invariant(const MetricLieAlgebra& mg) {
  const std::size_t n = mg.dim();
  const Matrix& gm = mg.metric.gram();
  for (std::size_t i = 1; i <= n; ++i) {
    const Matrix a = mg.algebra.ad(Vector::unit(n, i));
    const Matrix ga = gm * a;
    if (!(ga + ga.transpose()).is_zero()) return false;
  }
  return true;
}

Matrix killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 1; i <= n; ++i) ads.push_back(g.ad(Vector::unit(n, i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar tr = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) tr += ads[i](r, c) * ads[j](c, r);
      k(i, j) = tr;
      k(j, i) = tr;
    }
  return k;
}

Metric killing_metric(const LieAlgebra& g) {
  Matrix k = killing_form(g);
  k *= -1;
  try {
    return Metric(std::move(k));
  } catch (const InvalidArgument&) {
    throw InvalidArgument("killing_metric: Killing form is not negative definite");
  }
}

std::vector<Vector> gram_schmidt_adapted(const Metric& m, const std::vector<Vector>& basis) {
  const std::size_t n = m.dim();
  if (basis.size() != n) throw InvalidArgument("gram_schmidt_adapted: wrong number of vectors");
  for (const auto& b : basis) require_dim(b.size(), n, "gram_schmidt_adapted");
  if (rank(Matrix::from_rows(basis, n)) != n) throw InvalidArgument("gram_schmidt_adapted: not a basis");
  std::vector<Vector> e(n);
  std::vector<Vector> lowered(n);
  std::vector<Scalar> norms(n);
  for (std::size_t i = n; i-- > 0;) {
    Vector v = basis[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Scalar c = dot(basis[i], lowered[j]) / norms[j];
      if (sgn(c) != 0) v.add_scaled(-c, e[j]);
    }
    lowered[i] = m.lower(v);
    norms[i] = dot(v, lowered[i]);
    e[i] = std::move(v);
  }
  return e;
}

}  // namespace liegeo
