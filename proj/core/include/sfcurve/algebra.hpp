#pragma once

#include <array>
#include <cmath>
#include <iosfwd>

#include "sfcurve/types.hpp"

namespace sfc {

/// 2x2 complex matrix, row-major entries (a b / c d).
///
/// The quaternions sit inside C^{2x2} as the real span of
/// {1, i, j, k} and the split-quaternions as the real span of
/// {1, s1, s2, k}, with the Pauli-matrix realization
///   i = -i*sigma1, j = -i*sigma2, k = -i*sigma3.
/// The bilinear form mat_inner(F,G) = tr(F G*)/2 polarizes det and is
/// positive definite on quaternions, signature (2,2) on split-quaternions.
struct Mat2C {
  Complex a{}, b{}, c{}, d{};

  constexpr Mat2C() = default;
  constexpr Mat2C(Complex a_, Complex b_, Complex c_, Complex d_) : a(a_), b(b_), c(c_), d(d_) {}

  Complex trace() const { return a + d; }
  Complex det() const { return a * d - b * c; }

  /// Adjugate, F F* = det(F) 1.
  Mat2C adjugate() const { return {d, -b, -c, a}; }

  Mat2C inverse() const;

  /// Frobenius norm.
  double norm() const {
    return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
  }

  Mat2C& operator+=(const Mat2C& o) { a += o.a; b += o.b; c += o.c; d += o.d; return *this; }
  Mat2C& operator-=(const Mat2C& o) { a -= o.a; b -= o.b; c -= o.c; d -= o.d; return *this; }
  Mat2C& operator*=(Complex s) { a *= s; b *= s; c *= s; d *= s; return *this; }
  Mat2C& operator/=(Complex s) { a /= s; b /= s; c /= s; d /= s; return *this; }
};

inline Mat2C operator+(Mat2C l, const Mat2C& r) { return l += r; }
inline Mat2C operator-(Mat2C l, const Mat2C& r) { return l -= r; }
inline Mat2C operator-(const Mat2C& m) { return {-m.a, -m.b, -m.c, -m.d}; }
inline Mat2C operator*(Mat2C m, Complex s) { return m *= s; }
inline Mat2C operator*(Complex s, Mat2C m) { return m *= s; }
inline Mat2C operator*(Mat2C m, double s) { return m *= Complex(s); }
inline Mat2C operator*(double s, Mat2C m) { return m *= Complex(s); }
inline Mat2C operator/(Mat2C m, Complex s) { return m /= s; }
inline Mat2C operator/(Mat2C m, double s) { return m /= Complex(s); }

inline Mat2C operator*(const Mat2C& l, const Mat2C& r) {
  return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
          l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

std::ostream& operator<<(std::ostream& os, const Mat2C& m);

// Basis matrices.
Mat2C mat_one();
Mat2C mat_i();       // -i sigma1
Mat2C mat_j();       // -i sigma2
Mat2C mat_k();       // -i sigma3
Mat2C mat_sigma1();
Mat2C mat_sigma2();
Mat2C mat_sigma3();

/// Complex symmetric bilinear form tr(F G*)/2; the polarization of det.
Complex mat_inner(const Mat2C& f, const Mat2C& g);

/// Trace-free component M - tr(M)/2 * 1.
Mat2C trace_free(const Mat2C& m);

bool approx_equal(const Mat2C& f, const Mat2C& g, double tol = kTol);
bool approx_zero(const Mat2C& m, double tol = kTol);

/// Membership in the real span of {1, i, j, k}.
bool is_quaternion(const Mat2C& m, double tol = kTol);
/// Membership in the real span of {1, sigma1, sigma2, k}.
bool is_split_quaternion(const Mat2C& m, double tol = kTol);

/// Real coordinates w.r.t. {1, i, j, k}; throws if not a quaternion.
std::array<double, 4> quaternion_coords(const Mat2C& m, double tol = kTol);
Mat2C quaternion_from_coords(double w, double x, double y, double z);

/// Real coordinates w.r.t. {1, sigma1, sigma2, k}; throws if not split.
std::array<double, 4> split_coords(const Mat2C& m, double tol = kTol);
Mat2C split_from_coords(double w, double x, double y, double z);

/// Quaternions of the form x i + y j (Euclidean plane vectors).
bool in_span_ij(const Mat2C& m, double tol = kTol);
/// Quaternions of the form w 1 + z k.
bool in_span_1k(const Mat2C& m, double tol = kTol);

/// Plane vector constructors and accessors for span{i,j}.
Mat2C plane_point(double x, double y);
std::array<double, 2> plane_coords(const Mat2C& m, double tol = kTol);

}  // namespace sfc
