#include "liegeo/random.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "liegeo/errors.hpp"

namespace liegeo {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidArgument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do v = next();
  while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

double Rng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  double u1 = uniform01();
  while (u1 <= 0.0) u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

Scalar Rng::rational(std::int64_t max_num, std::int64_t max_den) {
  const long p = static_cast<long>(uniform_int(-max_num, max_num));
  const long q = static_cast<long>(uniform_int(1, max_den));
  Scalar s(p, q);
  s.canonicalize();
  return s;
}

Vector random_int_vector(Rng& rng, std::size_t n, std::int64_t range) {
  Vector v(n);
  for (auto& x : v) x = static_cast<long>(rng.uniform_int(-range, range));
  return v;
}

Vector random_rational_vector(Rng& rng, std::size_t n, std::int64_t max_num, std::int64_t max_den) {
  for (;;) {
    Vector v(n);
    for (auto& x : v) x = rng.rational(max_num, max_den);
    if (!v.is_zero()) return v;
  }
}

Matrix random_spd_gram(Rng& rng, std::size_t n) {
  Matrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = rng.rational(2, 2);
  Matrix g = a * a.transpose();
  for (std::size_t i = 0; i < n; ++i) {
    const Scalar d = rng.rational(3, 2);
    g(i, i) += d * d + Scalar(1, 2);
  }
  return g;
}

Matrix random_invertible(Rng& rng, std::size_t n) {
  Matrix l = Matrix::identity(n), u = Matrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < r; ++c) {
      l(r, c) = static_cast<long>(rng.uniform_int(-2, 2));
      u(c, r) = static_cast<long>(rng.uniform_int(-2, 2));
    }
  Matrix m = l * u;
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1));
    m.swap_rows(i - 1, j);
  }
  return m;
}

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv("LIEGEO_SEED");
  if (!env || !*env) return fallback;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used, 10);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  return fallback;
}

}  // namespace liegeo
