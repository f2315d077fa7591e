#include "liegeo/lie_algebra.hpp"

#include "liegeo/errors.hpp"

namespace liegeo {

namespace {

std::size_t packed_index(std::size_t n, std::size_t i0, std::size_t j0) {
  // rows i0 = 0..n-2 hold (n-1-i0) entries each
  return i0 * (2 * n - i0 - 1) / 2 + (j0 - i0 - 1);
}

}  // namespace

LieAlgebra::Builder::Builder(std::size_t dim, std::string name)
    : n_(dim), name_(std::move(name)), c_(dim * (dim ? dim - 1 : 0) / 2, Vector(dim)) {
  if (dim == 0) throw InvalidArgument("Lie algebra dimension must be positive");
}

LieAlgebra::Builder& LieAlgebra::Builder::set(std::size_t i, std::size_t j, const Vector& value) {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw InvalidArgument("bracket index out of range");
  if (i == j) throw InvalidArgument("[X_i, X_i] is zero by antisymmetry");
  if (value.size() != n_) throw InvalidArgument("bracket value has wrong dimension");
  Vector v = i < j ? value : -value;
  for (auto& x : v) x.canonicalize();
  c_[packed_index(n_, std::min(i, j) - 1, std::max(i, j) - 1)] = std::move(v);
  return *this;
}

LieAlgebra::Builder& LieAlgebra::Builder::add(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (i < 1 || j < 1 || k < 1 || i > n_ || j > n_ || k > n_) throw InvalidArgument("bracket index out of range");
  if (i == j) throw InvalidArgument("[X_i, X_i] is zero by antisymmetry");
  if (i < j)
    c_[packed_index(n_, i - 1, j - 1)][k - 1] += c;
  else
    c_[packed_index(n_, j - 1, i - 1)][k - 1] -= c;
  return *this;
}

LieAlgebra::Builder& LieAlgebra::Builder::name(std::string name) {
  name_ = std::move(name);
  return *this;
}

LieAlgebra LieAlgebra::Builder::build(JacobiCheck check) const {
  auto d = std::make_shared<Data>();
  d->n = n_;
  d->name = name_;
  d->c = c_;
  for (std::size_t i = 0; i + 1 < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Vector& v = c_[packed_index(n_, i, j)];
      Pair p{i, j, {}};
      for (std::size_t k = 0; k < n_; ++k)
        if (sgn(v[k]) != 0) p.terms.push_back({k, v[k]});
      if (!p.terms.empty()) d->nonzero.push_back(std::move(p));
    }
  LieAlgebra g(std::move(d));
  if (check == JacobiCheck::verify) {
    const auto v = verify_jacobi(g);
    if (!v.holds) {
      const auto& t = *v.triple;
      throw InvalidArgument("Jacobi identity fails on basis triple (" + std::to_string(t[0]) + "," +
                            std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
    }
  }
  return g;
}

LieAlgebra LieAlgebra::abelian(std::size_t n, std::string name) {
  return Builder(n, std::move(name)).build(JacobiCheck::skip);
}

std::size_t LieAlgebra::dim() const noexcept { return d_->n; }
const std::string& LieAlgebra::name() const noexcept { return d_->name; }

LieAlgebra LieAlgebra::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*d_);
  d->name = std::move(name);
  return LieAlgebra(std::move(d));
}

std::size_t LieAlgebra::packed(std::size_t i0, std::size_t j0) const noexcept {
  return packed_index(d_->n, i0, j0);
}

Vector LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
  const std::size_t n = d_->n;
  if (i < 1 || j < 1 || i > n || j > n) throw InvalidArgument("bracket index out of range");
  if (i == j) return Vector(n);
  if (i < j) return d_->c[packed(i - 1, j - 1)];
  return -d_->c[packed(j - 1, i - 1)];
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = d_->n;
  if (x.size() != n || y.size() != n) throw InvalidArgument("bracket: dimension mismatch");
  Vector out(n);
  Scalar coef;
  for (const auto& p : d_->nonzero) {
    const bool a = sgn(x[p.i]) != 0 && sgn(y[p.j]) != 0;
    const bool b = sgn(x[p.j]) != 0 && sgn(y[p.i]) != 0;
    if (!a && !b) continue;
    if (a && b)
      coef = x[p.i] * y[p.j] - x[p.j] * y[p.i];
    else if (a)
      coef = x[p.i] * y[p.j];
    else
      coef = -(x[p.j] * y[p.i]);
    if (sgn(coef) == 0) continue;
    for (const auto& t : p.terms) out[t.k] += coef * t.c;
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  const std::size_t n = d_->n;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) m.set_col(k - 1, bracket(x, Vector::unit(n, k)));
  return m;
}

bool LieAlgebra::is_abelian() const noexcept { return d_->nonzero.empty(); }

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
  return a.d_->n == b.d_->n && a.d_->c == b.d_->c;
}

JacobiVerdict verify_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k) {
        const Vector xi = Vector::unit(n, i), xj = Vector::unit(n, j), xk = Vector::unit(n, k);
        Vector r = g.bracket(g.basis_bracket(i, j), xk);
        r += g.bracket(g.basis_bracket(j, k), xi);
        r += g.bracket(g.basis_bracket(k, i), xj);
        if (!r.is_zero()) return {false, std::array<std::size_t, 3>{i, j, k}, r};
      }
  return {true, std::nullopt, Vector(n)};
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& w) {
  std::vector<Vector> vs;
  const auto ub = u.basis_vectors();
  const auto wb = w.basis_vectors();
  for (const auto& a : ub)
    for (const auto& b : wb) {
      Vector v = g.bracket(a, b);
      if (!v.is_zero()) vs.push_back(std::move(v));
    }
  return Subspace::span(g.dim(), vs);
}

Subspace derived_algebra(const LieAlgebra& g) {
  const auto whole = Subspace::whole(g.dim());
  return bracket_span(g, whole, whole);
}

Subspace centralizer(const LieAlgebra& g, const Subspace& w) {
  const std::size_t n = g.dim();
  // stack ad(w_r) for every basis vector w_r: x commutes with w_r iff ad(w_r) x = 0
  const auto wb = w.basis_vectors();
  Matrix stacked(n * wb.size(), n);
  for (std::size_t r = 0; r < wb.size(); ++r) {
    const Matrix a = g.ad(wb[r]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < n; ++c) stacked(r * n + i, c) = a(i, c);
  }
  return Subspace::row_space(kernel(stacked));
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::whole(g.dim())); }

std::vector<Subspace> lower_central_series(const LieAlgebra& g) {
  const auto whole = Subspace::whole(g.dim());
  std::vector<Subspace> series{whole};
  while (true) {
    Subspace next = bracket_span(g, whole, series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
    if (series.back().is_zero()) break;
  }
  return series;
}

NilpotencyVerdict is_nilpotent(const LieAlgebra& g) {
  const auto series = lower_central_series(g);
  if (!series.back().is_zero()) return {false, 0};
  return {true, series.size() - 1};
}

bool is_abelian(const LieAlgebra& g, const Subspace& w) {
  const auto wb = w.basis_vectors();
  for (std::size_t a = 0; a < wb.size(); ++a)
    for (std::size_t b = a + 1; b < wb.size(); ++b)
      if (!g.bracket(wb[a], wb[b]).is_zero()) return false;
  return true;
}

bool is_ideal(const LieAlgebra& g, const Subspace& w) {
  const std::size_t n = g.dim();
  for (const auto& v : w.basis_vectors())
    for (std::size_t i = 1; i <= n; ++i)
      if (!w.contains(g.bracket(Vector::unit(n, i), v))) return false;
  return true;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& w) {
  if (w.ambient_dim() != g.dim()) throw InvalidArgument("subspace ambient dimension mismatch");
  const auto wb = w.basis_vectors();
  for (std::size_t a = 0; a < wb.size(); ++a)
    for (std::size_t b = a + 1; b < wb.size(); ++b)
      if (!w.contains(g.bracket(wb[a], wb[b]))) return false;
  return true;
}

Subalgebra::Subalgebra(LieAlgebra g, Subspace space) : g_(std::move(g)), space_(std::move(space)) {
  if (!is_subalgebra(g_, space_)) throw InvalidArgument("subspace is not closed under the bracket");
}

Subspace Subalgebra::own_center() const { return centralizer(g_, space_).intersect(space_); }

std::optional<Subspace> generated_subalgebra_capped(const LieAlgebra& g, const std::vector<Vector>& gens,
                                                     std::size_t max_dim) {
  Subspace cur = Subspace::span(g.dim(), gens);
  if (cur.dim() > max_dim) return std::nullopt;
  while (true) {
    const auto b = cur.basis_vectors();
    std::vector<Vector> extra;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        Vector v = g.bracket(b[i], b[j]);
        if (!cur.contains(v)) extra.push_back(std::move(v));
      }
    if (extra.empty()) return cur;
    for (auto& v : b) extra.push_back(v);
    cur = Subspace::span(g.dim(), extra);
    if (cur.dim() > max_dim) return std::nullopt;
  }
}

Subalgebra generated_subalgebra(const LieAlgebra& g, const std::vector<Vector>& gens) {
  auto s = generated_subalgebra_capped(g, gens, g.dim());
  return Subalgebra(g, std::move(*s));
}

Quotient quotient(const LieAlgebra& g, const Subspace& ideal) {
  if (!is_ideal(g, ideal)) throw InvalidArgument("quotient: subspace is not an ideal");
  const std::size_t n = g.dim();
  std::vector<bool> pivot(n, false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!pivot[c]) free_cols.push_back(c);
  const std::size_t q = free_cols.size();
  if (q == 0) throw InvalidArgument("quotient by the whole algebra");

  auto reduce = [&](Vector v) {
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      const Scalar c = v[ideal.pivots()[r]];
      if (sgn(c) != 0) v.add_scaled(-c, ideal.basis_vector(r));
    }
    Vector out(q);
    for (std::size_t a = 0; a < q; ++a) out[a] = v[free_cols[a]];
    return out;
  };

  Matrix proj(q, n);
  for (std::size_t k = 1; k <= n; ++k) proj.set_col(k - 1, reduce(Vector::unit(n, k)));
  std::vector<Vector> lifts;
  for (auto c : free_cols) lifts.push_back(Vector::unit(n, c + 1));

  LieAlgebra::Builder b(q, g.name().empty() ? std::string{} : g.name() + "/I");
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t c = a + 1; c < q; ++c) b.set(a + 1, c + 1, reduce(g.bracket(lifts[a], lifts[c])));
  return {b.build(JacobiCheck::skip), std::move(proj), std::move(lifts)};
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& m) {
  const std::size_t n = g.dim();
  if (m.rows() != n || m.cols() != n) throw InvalidArgument("change_basis: matrix shape mismatch");
  const auto inv_t = inverse(m.transpose());
  if (!inv_t) throw InvalidArgument("change_basis: matrix is singular");
  const auto rows = m.row_vectors();
  LieAlgebra::Builder b(n, g.name());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector w = g.bracket(rows[i], rows[j]);
      if (!w.is_zero()) b.set(i + 1, j + 1, *inv_t * w);
    }
  return b.build(JacobiCheck::skip);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  std::string name = a.name().empty() || b.name().empty() ? std::string{} : a.name() + "+" + b.name();
  LieAlgebra::Builder out(n, std::move(name));
  for (std::size_t i = 1; i <= na; ++i)
    for (std::size_t j = i + 1; j <= na; ++j) {
      const Vector v = a.basis_bracket(i, j);
      for (std::size_t k = 0; k < na; ++k)
        if (sgn(v[k]) != 0) out.add(i, j, k + 1, v[k]);
    }
  for (std::size_t i = 1; i <= nb; ++i)
    for (std::size_t j = i + 1; j <= nb; ++j) {
      const Vector v = b.basis_bracket(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        if (sgn(v[k]) != 0) out.add(na + i, na + j, na + k + 1, v[k]);
    }
  return out.build(JacobiCheck::skip);
}

AbelianizationVerdict abelianization_surjectivity_check(const LieAlgebra& g, const Subalgebra& a) {
  if (!is_nilpotent(g).nilpotent) throw InvalidArgument("abelianization check requires a nilpotent algebra");
  AbelianizationVerdict v;
  v.surjective = (a.space() + derived_algebra(g)).is_whole();
  v.is_whole = a.space().is_whole();
  if (v.surjective && !v.is_whole)
    throw InternalInvariantError("proper subalgebra surjects onto g/[g,g] in a nilpotent algebra");
  return v;
}

}  // namespace liegeo
