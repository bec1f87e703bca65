#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace polarikit {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

struct CVec3 {
  std::complex<double> x{}, y{}, z{};
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(Vec3 v) {
  const double n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

inline CVec3 operator*(std::complex<double> s, const CVec3& v) {
  return {s * v.x, s * v.y, s * v.z};
}

inline CVec3 operator+(const CVec3& a, const CVec3& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

inline CVec3 to_complex(Vec3 v) {
  return {{v.x, 0.0}, {v.y, 0.0}, {v.z, 0.0}};
}

// Hermitian inner product conj(a) . b.
inline std::complex<double> hdot(const CVec3& a, const CVec3& b) {
  return std::conj(a.x) * b.x + std::conj(a.y) * b.y + std::conj(a.z) * b.z;
}

// conj(a) . v for a real vector v.
inline std::complex<double> hdot(const CVec3& a, Vec3 v) {
  return std::conj(a.x) * v.x + std::conj(a.y) * v.y + std::conj(a.z) * v.z;
}

// v . b with a real first factor.
inline std::complex<double> dot(Vec3 v, const CVec3& b) {
  return v.x * b.x + v.y * b.y + v.z * b.z;
}

inline double norm(const CVec3& v) { return std::sqrt(hdot(v, v).real()); }

using Mat3c = std::array<std::array<std::complex<double>, 3>, 3>;

}  // namespace polarikit
