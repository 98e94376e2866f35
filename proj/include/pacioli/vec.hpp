#ifndef PACIOLI_VEC_HPP
#define PACIOLI_VEC_HPP

#include <array>

#include "pacioli/q5.hpp"
#include "pacioli/real.hpp"

namespace pacioli {

// Exact point/vector over Q(sqrt 5). Lexicographic order is the canonical
// vertex order used throughout the catalog.
struct Vec3Q {
  Q5 x, y, z;

  friend Vec3Q operator+(const Vec3Q& u, const Vec3Q& v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
  friend Vec3Q operator-(const Vec3Q& u, const Vec3Q& v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
  friend Vec3Q operator*(const Q5& s, const Vec3Q& v) { return {s * v.x, s * v.y, s * v.z}; }
  friend bool operator==(const Vec3Q& u, const Vec3Q& v) { return u.x == v.x && u.y == v.y && u.z == v.z; }
  friend bool operator!=(const Vec3Q& u, const Vec3Q& v) { return !(u == v); }

  Q5 dot(const Vec3Q& v) const { return x * v.x + y * v.y + z * v.z; }
  Vec3Q cross(const Vec3Q& v) const {
    return {y * v.z - z * v.y, z * v.x - x * v.z, x * v.y - y * v.x};
  }
  Q5 norm2() const { return dot(*this); }
  bool is_zero() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

  static int lex_cmp(const Vec3Q& u, const Vec3Q& v) {
    if (u.x != v.x) return u.x < v.x ? -1 : 1;
    if (u.y != v.y) return u.y < v.y ? -1 : 1;
    if (u.z != v.z) return u.z < v.z ? -1 : 1;
    return 0;
  }
  friend bool operator<(const Vec3Q& u, const Vec3Q& v) { return lex_cmp(u, v) < 0; }
};

// Point/vector of certified reals.
struct Vec3R {
  Real x, y, z;

  Vec3R() = default;
  Vec3R(Real x_, Real y_, Real z_) : x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}
  explicit Vec3R(const Vec3Q& v) : x(v.x), y(v.y), z(v.z) {}

  friend Vec3R operator+(const Vec3R& u, const Vec3R& v) { return {u.x + v.x, u.y + v.y, u.z + v.z}; }
  friend Vec3R operator-(const Vec3R& u, const Vec3R& v) { return {u.x - v.x, u.y - v.y, u.z - v.z}; }
  friend Vec3R operator*(const Real& s, const Vec3R& v) { return {s * v.x, s * v.y, s * v.z}; }

  Real dot(const Vec3R& v) const { return x * v.x + y * v.y + z * v.z; }
  Vec3R cross(const Vec3R& v) const {
    return {y * v.z - z * v.y, z * v.x - x * v.z, x * v.y - y * v.x};
  }
  Real norm2() const { return dot(*this); }

  // Exact coordinates when all three components collapsed into the field.
  std::optional<Vec3Q> exact() const {
    if (x.exact() && y.exact() && z.exact()) return Vec3Q{*x.exact(), *y.exact(), *z.exact()};
    return std::nullopt;
  }
};

}  // namespace pacioli

#endif
