#include "liegeo/scalar.hpp"

#include <regex>
#include <sstream>

#include "liegeo/errors.hpp"

namespace liegeo {

Vector Vector::unit(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw InvalidArgument("basis index out of range");
  Vector v(n);
  v[i - 1] = 1;
  return v;
}

Vector Vector::from_ints(std::initializer_list<long> coords) {
  Vector v(coords.size());
  std::size_t i = 0;
  for (long c : coords) v[i++] = c;
  return v;
}

bool Vector::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

std::size_t Vector::leading_index() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return i + 1;
  return 0;
}

Vector& Vector::operator+=(const Vector& o) {
  if (o.size() != size()) throw InvalidArgument("vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  if (o.size() != size()) throw InvalidArgument("vector dimension mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Vector& Vector::add_scaled(const Scalar& s, const Vector& o) {
  if (o.size() != size()) throw InvalidArgument("vector dimension mismatch");
  if (sgn(s) == 0) return *this;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(o.c_[i]) != 0) c_[i] += s * o.c_[i];
  return *this;
}

Vector operator+(Vector a, const Vector& b) { return a += b; }
Vector operator-(Vector a, const Vector& b) { return a -= b; }
Vector operator-(Vector a) {
  for (auto& x : a) x = -x;
  return a;
}
Vector operator*(const Scalar& s, Vector v) { return v *= s; }

Scalar dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidArgument("vector dimension mismatch");
  Scalar acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) acc += a[i] * b[i];
  return acc;
}

Scalar parse_scalar(std::string_view text) {
  static const std::regex pattern(R"(-?\d+(/\d+)?)");
  std::string s(text);
  if (!std::regex_match(s, pattern))
    throw InvalidArgument("malformed rational '" + s + "'");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw InvalidArgument("zero denominator in '" + s + "'");
  }
  Scalar q(s);
  q.canonicalize();
  return q;
}

Vector parse_vector(std::string_view text) {
  std::vector<Scalar> out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidArgument("empty vector entry in '" + std::string(text) + "'");
    out.push_back(parse_scalar(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw InvalidArgument("empty vector");
  return Vector(std::move(out));
}

std::string to_string(const Scalar& s) { return s.get_str(); }

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

std::vector<std::string> to_strings(const Vector& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

std::vector<double> to_double(const Vector& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

mpz_class common_denominator(const Vector& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

}  // namespace liegeo
