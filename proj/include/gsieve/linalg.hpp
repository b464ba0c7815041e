#pragma once

// Small fixed-size value types for 2x2 phase-space algebra.

#include <cmath>

namespace gsieve {

struct Vec2 {
  double x1 = 0.0;
  double x2 = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x1, s * a.x2}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

/// Row-major 2x2 real matrix.
struct Mat2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a21 = 0.0;
  double a22 = 0.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 diag(double d1, double d2) { return {d1, 0.0, 0.0, d2}; }
  static constexpr Mat2 symmetric(double s11, double s12, double s22) {
    return {s11, s12, s12, s22};
  }

  constexpr Mat2 transpose() const { return {a11, a21, a12, a22}; }
  constexpr double trace() const { return a11 + a22; }

  /// Determinant via fused products, accurate when the two products nearly cancel.
  double det() const {
    const double w = a12 * a21;
    const double err = std::fma(-a12, a21, w);
    return std::fma(a11, a22, -w) + err;
  }

  /// Closed-form inverse; caller guarantees det() != 0.
  Mat2 inverse() const {
    const double inv = 1.0 / det();
    return {a22 * inv, -a12 * inv, -a21 * inv, a11 * inv};
  }

  /// (M + M^T) / 2
  constexpr Mat2 symmetrized() const {
    const double off = 0.5 * (a12 + a21);
    return {a11, off, off, a22};
  }

  double frobenius() const { return std::sqrt(a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22); }

  friend constexpr Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
  }
  friend constexpr Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
  }
  friend constexpr Mat2 operator*(double s, const Mat2& a) {
    return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
  }
  friend constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
  }
  friend constexpr Vec2 operator*(const Mat2& a, Vec2 v) {
    return {a.a11 * v.x1 + a.a12 * v.x2, a.a21 * v.x1 + a.a22 * v.x2};
  }
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

/// Eigenvalues of a symmetric matrix, largest first.
struct SymEigen {
  double largest;
  double smallest;
};

inline SymEigen sym_eigenvalues(const Mat2& m) {
  const double mean = 0.5 * (m.a11 + m.a22);
  const double radius = std::hypot(0.5 * (m.a11 - m.a22), m.a12);
  const double largest = mean + radius;
  // The product form keeps relative accuracy of the small eigenvalue.
  const double smallest = (largest != 0.0 && mean > 0.0) ? m.det() / largest : mean - radius;
  return {largest, smallest};
}

inline double relative_frobenius(const Mat2& got, const Mat2& want) {
  const double scale = want.frobenius();
  const double diff = (got - want).frobenius();
  return scale > 0.0 ? diff / scale : diff;
}

}  // namespace gsieve
