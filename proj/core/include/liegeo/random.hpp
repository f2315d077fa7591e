#pragma once

#include <cstdint>
#include <random>

#include "liegeo/matrix.hpp"

namespace liegeo {

/// Seeded generator for reproducible sampling. Bounded integers are drawn by
/// rejection from mt19937_64 so that streams agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [0, 1).
  double uniform01();
  /// Standard normal via Box-Muller.
  double normal();
  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Scalar rational(std::int64_t max_num, std::int64_t max_den);
  /// Independent stream derived from this one.
  Rng split() { return Rng(next() ^ 0x9e3779b97f4a7c15ULL); }

 private:
  std::mt19937_64 engine_;
};

/// Integer entries in [-range, range].
Vector random_int_vector(Rng& rng, std::size_t n, std::int64_t range);
/// Nonzero vector with rational entries.
Vector random_rational_vector(Rng& rng, std::size_t n, std::int64_t max_num, std::int64_t max_den);
/// A A^T + D with small rational A and positive diagonal D.
Matrix random_spd_gram(Rng& rng, std::size_t n);
/// Product of unit triangular factors with small integer entries and a row
/// permutation; always invertible.
Matrix random_invertible(Rng& rng, std::size_t n);

/// Seed from LIEGEO_SEED when set and parseable, otherwise `fallback`.
std::uint64_t default_seed(std::uint64_t fallback = 20240607);

}  // namespace liegeo
