#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "gft/errors.hpp"

namespace gft {

/// Dense point/vector in R^d, d >= 1.  Plain value type; all library
/// operations treat instances as immutable.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t dim) : x_(dim, 0.0) {}
  Vec(std::initializer_list<double> xs) : x_(xs) {}
  explicit Vec(std::vector<double> xs) : x_(std::move(xs)) {}

  static Vec axis(std::size_t dim, std::size_t j, double sign) {
    Vec e(dim);
    e.x_[j] = sign;
    return e;
  }

  std::size_t dim() const { return x_.size(); }
  double operator[](std::size_t i) const { return x_[i]; }
  double& operator[](std::size_t i) { return x_[i]; }
  const std::vector<double>& coords() const { return x_; }

  bool finite() const {
    for (double v : x_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  Vec& operator+=(const Vec& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < x_.size(); ++i) x_[i] += o.x_[i];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    require_same_dim(o);
    for (std::size_t i = 0; i < x_.size(); ++i) x_[i] -= o.x_[i];
    return *this;
  }
  Vec& operator*=(double s) {
    for (double& v : x_) v *= s;
    return *this;
  }
  Vec& operator/=(double s) {
    for (double& v : x_) v /= s;
    return *this;
  }

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, double s) { return a *= s; }
  friend Vec operator*(double s, Vec a) { return a *= s; }
  friend Vec operator/(Vec a, double s) { return a /= s; }
  friend Vec operator-(Vec a) { return a *= -1.0; }

  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  void require_same_dim(const Vec& o) const {
    if (x_.size() != o.x_.size())
      throw DimensionMismatchError("vector dimensions differ");
  }

  std::vector<double> x_;
};

inline double dot(const Vec& a, const Vec& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatchError("vector dimensions differ");
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double norm1(const Vec& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::abs(a[i]);
  return s;
}

inline double norm_inf(const Vec& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

inline double distance(const Vec& a, const Vec& b) { return norm(a - b); }

inline Vec normalized(const Vec& a) { return a / norm(a); }

/// Strict lexicographic order on coordinates; used for deterministic
/// tie-breaking throughout the library.
inline bool lex_less(const Vec& a, const Vec& b) {
  return a.coords() < b.coords();
}

}  // namespace gft
