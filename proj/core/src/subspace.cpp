#include "liegeo/subspace.hpp"

#include "liegeo/errors.hpp"

namespace liegeo {

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  for (const auto& v : vectors)
    if (v.size() != ambient) throw InvalidArgument("span: vector dimension mismatch");
  return row_space(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::row_space(const Matrix& m) {
  Subspace s(m.cols());
  s.basis_ = m;
  s.pivots_ = rref_in_place(s.basis_);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) { return row_space(Matrix::identity(ambient)); }

Subspace Subspace::tail(std::size_t ambient, std::size_t first) {
  std::vector<std::size_t> idx;
  for (std::size_t i = first; i <= ambient; ++i) idx.push_back(i);
  return coordinate(ambient, idx);
}

Subspace Subspace::coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
  std::vector<Vector> vs;
  for (auto i : indices) vs.push_back(Vector::unit(ambient, i));
  return span(ambient, vs);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != n_) throw InvalidArgument("contains: dimension mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (sgn(c) != 0) r.add_scaled(-c, basis_.row(i));
  }
  return r.is_zero();
}

bool Subspace::contains(const Subspace& w) const {
  if (w.n_ != n_) throw InvalidArgument("contains: ambient mismatch");
  for (std::size_t r = 0; r < w.dim(); ++r)
    if (!contains(w.basis_.row(r))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw InvalidArgument("coordinates: vector not in subspace");
  Vector c(dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (o.n_ != n_) throw InvalidArgument("subspace sum: ambient mismatch");
  auto vs = basis_vectors();
  for (auto& v : o.basis_vectors()) vs.push_back(std::move(v));
  return span(n_, vs);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.n_ != n_) throw InvalidArgument("intersection: ambient mismatch");
  if (is_zero() || o.is_zero()) return Subspace(n_);
  // a * A = b * B  <=>  (a, -b) in kernel of [A; -B]^T
  const std::size_t da = dim(), db = o.dim();
  Matrix stacked(n_, da + db);
  for (std::size_t c = 0; c < n_; ++c) {
    for (std::size_t r = 0; r < da; ++r) stacked(c, r) = basis_(r, c);
    for (std::size_t r = 0; r < db; ++r) stacked(c, da + r) = -o.basis_(r, c);
  }
  const Matrix ker = kernel(stacked);
  std::vector<Vector> vs;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vector v(n_);
    for (std::size_t r = 0; r < da; ++r)
      if (sgn(ker(k, r)) != 0) v.add_scaled(ker(k, r), basis_.row(r));
    vs.push_back(std::move(v));
  }
  return span(n_, vs);
}

}  // namespace liegeo
