#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace liegeo {

/// Exact rational scalar, always in canonical form.
using Scalar = mpq_class;

/// Coordinates of an element of the ambient space R^n.
///
/// Storage is 0-based (`v[0]` is the X_1 coordinate); every public index
/// argument elsewhere in the library is 1-based.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : c_(n) {}
  Vector(std::initializer_list<Scalar> coords) : c_(coords) {}
  explicit Vector(std::vector<Scalar> coords) : c_(std::move(coords)) {}

  static Vector zero(std::size_t n) { return Vector(n); }
  /// Basis vector X_i of R^n, i 1-based.
  static Vector unit(std::size_t n, std::size_t i);
  static Vector from_ints(std::initializer_list<long> coords);

  std::size_t size() const noexcept { return c_.size(); }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  auto begin() noexcept { return c_.begin(); }
  auto end() noexcept { return c_.end(); }
  auto begin() const noexcept { return c_.begin(); }
  auto end() const noexcept { return c_.end(); }
  const std::vector<Scalar>& coords() const noexcept { return c_; }

  bool is_zero() const;
  /// 1-based index of the first nonzero coordinate, 0 for the zero vector.
  std::size_t leading_index() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  /// this += s * o
  Vector& add_scaled(const Scalar& s, const Vector& o);

  friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }

 private:
  std::vector<Scalar> c_;
};

Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator-(Vector a);
Vector operator*(const Scalar& s, Vector v);

/// Euclidean coordinate dot product (not a metric inner product).
Scalar dot(const Vector& a, const Vector& b);

/// Parses `-?\d+(/\d+)?` into a canonical Scalar. Throws InvalidArgument.
Scalar parse_scalar(std::string_view text);
/// Comma separated list of rational strings, e.g. "0,1,-1/2".
Vector parse_vector(std::string_view text);

/// Canonical "p" or "p/q".
std::string to_string(const Scalar& s);
/// "(a, b, c)"
std::string to_string(const Vector& v);
std::vector<std::string> to_strings(const Vector& v);

/// Double approximations, for the numeric layer only.
std::vector<double> to_double(const Vector& v);

/// Positive least common multiple of all denominators.
mpz_class common_denominator(const Vector& v);

}  // namespace liegeo
