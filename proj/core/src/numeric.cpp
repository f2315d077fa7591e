#include <Eigen/Dense>
#include <cmath>

#include "liegeo/errors.hpp"
#include "liegeo/random.hpp"
#include "liegeo/search.hpp"

namespace liegeo {

namespace {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

Mat to_eigen(const Matrix& m) {
  Mat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
  return out;
}

// |f(Y)|^2 on the unit sphere in u = L^T Y coordinates, G = L L^T.
class DefectObjective {
 public:
  explicit DefectObjective(const MetricLieAlgebra& mg) : n_(mg.dim()) {
    const Mat g = to_eigen(mg.metric.gram());
    Eigen::LLT<Mat> llt(g);
    const Mat l = llt.matrixL();
    linv_ = l.triangularView<Eigen::Lower>().solve(Mat::Identity(n_, n_));
    ginv_ = linv_.transpose() * linv_;
    for (std::size_t k = 1; k <= n_; ++k) {
      const Mat c = to_eigen(mg.algebra.ad(Vector::unit(n_, k)));
      const Mat s = 0.5 * (c.transpose() * g + g * c);
      t_.push_back(linv_ * s * linv_.transpose());
    }
  }

  std::size_t dim() const { return n_; }

  Vec alpha(const Vec& u) const {
    Vec a(n_);
    for (std::size_t k = 0; k < n_; ++k) a(k) = u.dot(t_[k] * u);
    return a;
  }
  double value(const Vec& u) const {
    const Vec a = alpha(u);
    return a.dot(ginv_ * a);
  }
  // dF/du = 4 sum_k f_k T_k u with f = G^{-1} alpha
  Vec gradient(const Vec& u) const {
    const Vec f = ginv_ * alpha(u);
    Vec g = Vec::Zero(n_);
    for (std::size_t k = 0; k < n_; ++k) g += 4.0 * f(k) * (t_[k] * u);
    return g;
  }
  // residual vector r = L^{-1} alpha with |r|^2 = F, and its Jacobian
  Vec residual(const Vec& u) const { return linv_ * alpha(u); }
  Mat jacobian(const Vec& u) const {
    Mat ja(n_, n_);
    for (std::size_t k = 0; k < n_; ++k) ja.row(k) = 2.0 * (t_[k] * u).transpose();
    return linv_ * ja;
  }
  Vec to_y(const Vec& u) const { return linv_.transpose() * u; }
  // <f(Y), Y> = alpha . Y
  double orthogonality(const Vec& u) const { return alpha(u).dot(to_y(u)); }
  Vec from_y(const Vec& y) const {
    // u = L^T y
    Vec u = linv_.transpose().triangularView<Eigen::Upper>().solve(y);
    return u / u.norm();
  }

 private:
  std::size_t n_;
  Mat linv_, ginv_;
  std::vector<Mat> t_;
};

double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

constexpr unsigned kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

struct Solve {
  Vec u;
  double f;
  double max_orth;
};

Solve descend(const DefectObjective& obj, Vec u, const SearchBudget& budget) {
  const double target = budget.tolerance * budget.tolerance * 1e-4;
  double f = obj.value(u);
  double max_orth = std::abs(obj.orthogonality(u));
  double step = 1.0;
  const std::size_t pg_iters = budget.max_iterations;
  for (std::size_t it = 0; it < pg_iters && f > 1e-8; ++it) {
    Vec g = obj.gradient(u);
    g -= u.dot(g) * u;
    const double gg = g.squaredNorm();
    if (gg < 1e-30) break;
    step *= 2.0;
    bool accepted = false;
    for (int h = 0; h < 60; ++h) {
      Vec trial = u - step * g;
      trial /= trial.norm();
      const double ft = obj.value(trial);
      if (ft <= f - 1e-4 * step * gg) {
        u = trial;
        f = ft;
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    max_orth = std::max(max_orth, std::abs(obj.orthogonality(u)));
  }
  // Levenberg-Marquardt on the tangent space
  double lambda = 1e-3;
  const std::size_t n = obj.dim();
  for (std::size_t it = 0; it < 100 && f > target; ++it) {
    const Mat p = Mat::Identity(n, n) - u * u.transpose();
    const Mat j = obj.jacobian(u) * p;
    const Vec r = obj.residual(u);
    const Mat jtj = j.transpose() * j;
    const Vec rhs = -(j.transpose() * r);
    bool improved = false;
    for (int tries = 0; tries < 12; ++tries) {
      Vec delta = (jtj + lambda * Mat::Identity(n, n)).ldlt().solve(rhs);
      delta = p * delta;
      Vec trial = u + delta;
      trial /= trial.norm();
      const double ft = obj.value(trial);
      if (std::isfinite(ft) && ft < f) {
        u = trial;
        f = ft;
        lambda = std::max(lambda * 0.1, 1e-15);
        improved = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!improved) break;
    max_orth = std::max(max_orth, std::abs(obj.orthogonality(u)));
  }
  return {u, f, max_orth};
}

long double_to_long(double v) { return static_cast<long>(std::llround(v)); }

}  // namespace

std::optional<Vector> rational_reconstruction(const std::vector<double>& x, long max_den, double tol) {
  double scale = 0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  if (scale == 0 || !std::isfinite(scale)) return std::nullopt;
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = x[i] / scale;
    // continued fraction convergents h/k
    long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double r = v;
    bool done = false;
    for (int it = 0; it < 64; ++it) {
      const double fl = std::floor(r);
      const long a = double_to_long(fl);
      const long h2 = a * h1 + h0, k2 = a * k1 + k0;
      if (k2 > max_den) break;
      h0 = h1;
      h1 = h2;
      k0 = k1;
      k1 = k2;
      if (std::abs(v - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) {
        done = true;
        break;
      }
      const double frac = r - fl;
      if (frac < 1e-15) break;
      r = 1.0 / frac;
    }
    if (!done) return std::nullopt;
    out[i] = Scalar(h1, k1);
    out[i].canonicalize();
  }
  return out;
}

NumericGeodesic find_geodesic_numeric(const MetricLieAlgebra& mg, const SearchBudget& budget) {
  const std::size_t n = mg.dim();
  if (n == 0) throw InvalidArgument("find_geodesic_numeric: zero-dimensional algebra");
  const DefectObjective obj(mg);
  const std::size_t starts = std::max<std::size_t>(1, 8 * (n - 1));
  Rng rng(budget.seed);
  std::vector<double> shift(2 * ((n + 1) / 2));
  for (auto& s : shift) s = rng.uniform01();

  NumericGeodesic best;
  best.residual = INFINITY;
  Vec best_u;
  for (std::size_t s = 0; s < starts; ++s) {
    Vec y(n);
    if (s < n) {
      y.setZero();
      y(s) = 1.0;
    } else {
      const std::uint64_t idx = s - n + 1;
      for (std::size_t d = 0; d < n; d += 2) {
        double a = radical_inverse(idx, kPrimes[d % 16]) + shift[d];
        double b = radical_inverse(idx, kPrimes[(d + 1) % 16]) + shift[d + 1];
        a -= std::floor(a);
        b -= std::floor(b);
        a = std::max(a, 1e-12);
        const double rad = std::sqrt(-2.0 * std::log(a));
        y(d) = rad * std::cos(2.0 * M_PI * b);
        if (d + 1 < n) y(d + 1) = rad * std::sin(2.0 * M_PI * b);
      }
      if (y.norm() == 0) y(0) = 1.0;
    }
    const Solve sol = descend(obj, obj.from_y(y), budget);
    best.max_orthogonality_defect = std::max(best.max_orthogonality_defect, sol.max_orth);
    best.starts_used = s + 1;
    const double res = std::sqrt(std::max(sol.f, 0.0));
    if (res < best.residual) {
      best.residual = res;
      best_u = sol.u;
    }
    if (best.residual <= budget.tolerance) break;
  }
  best.converged = best.residual <= budget.tolerance;
  const Vec y = obj.to_y(best_u);
  best.unit_vector.assign(y.data(), y.data() + n);
  best.rational = rational_reconstruction(best.unit_vector);
  if (best.rational && !best.rational->is_zero()) best.exact_confirmed = geodesic_defect(mg, *best.rational).is_zero();
  return best;
}

}  // namespace liegeo
