#pragma once

#include <array>
#include <iosfwd>

#include "sfcurve/algebra.hpp"

namespace sfc {

enum class SpaceForm { Euclidean, Spherical, Hyperbolic };

/// Sectional curvature sign: 0, +1, -1.
double space_form_eps(SpaceForm form);
const char* space_form_name(SpaceForm form);

/// Vector in R^{3,2} with inner product of signature (+,+,+,-,-).
/// Light-like vectors represent points, oriented circles and oriented
/// lines of the plane; non-light-like vectors represent linear circle
/// complexes.
struct LCVector {
  std::array<double, 5> v{};

  LCVector() = default;
  LCVector(double x1, double x2, double x3, double x4, double x5) : v{x1, x2, x3, x4, x5} {}

  double& operator[](int i) { return v[i]; }
  double operator[](int i) const { return v[i]; }

  double norm() const;  // Euclidean norm of the coordinates

  LCVector& operator+=(const LCVector& o);
  LCVector& operator-=(const LCVector& o);
  LCVector& operator*=(double s);
};

LCVector operator+(LCVector l, const LCVector& r);
LCVector operator-(LCVector l, const LCVector& r);
LCVector operator*(double s, LCVector m);
LCVector operator*(LCVector m, double s);
LCVector operator-(const LCVector& m);
std::ostream& operator<<(std::ostream& os, const LCVector& m);

/// Signature (3,2) inner product.
double lc_inner(const LCVector& u, const LCVector& w);

/// Point-sphere complex p = (0,0,0,0,1).
LCVector lc_p();
/// Vector representing infinity, q0 = (0,0,1,-1,0).
LCVector lc_q0();
/// Space form vector q with curvature -<q,q>.
LCVector lc_q(SpaceForm form);

// Lifts of planar objects; points and circles come out with the Euclidean
// normalization <f, q_E> = -1, lines with fifth component 1.
LCVector lift_point(double x, double y);
LCVector lift_circle(double x, double y, double r);
LCVector lift_line(double nx, double ny, double d);

/// Classification of a light-like vector.
struct IdentifyResult {
  enum class Kind { Point, Circle, Line, Infinity } kind;
  double x = 0.0, y = 0.0;   // point/circle center, line unit normal
  double r = 0.0;            // circle radius
  double d = 0.0;            // line normal distance
};
IdentifyResult identify(const LCVector& v, double tol = kTol);

/// Reflection in the linear circle complex a, an involution preserving
/// the inner product. Throws IsotropicMirror for light-like a.
LCVector reflect(const LCVector& a, const LCVector& r);

/// Geodesic curvature <s,q>/<s,p> of a circle with respect to the space
/// form vector q. Throws PointNotCircle when <s,p> vanishes.
double geodesic_curvature(const LCVector& s, const LCVector& q);

/// Unoriented intersection angle of two circles,
/// cos(phi) = 1 + <u,w>/(<u,p><w,p>). When |cos| > 1 the angle is not
/// real and the cosine value is reported instead.
struct IntersectionAngle {
  bool real = true;
  double angle = 0.0;    // valid when real
  double cosine = 1.0;   // always valid
};
IntersectionAngle intersection_angle(const LCVector& u, const LCVector& w);

/// Directrix a* = a + lambda p of the linear circle complex a. When the
/// radicand is negative, lambda is complex and the imaginary part (a
/// multiple of p) is reported separately.
struct DirectrixVector {
  LCVector astar;        // real part a + Re(lambda) p
  double lambda_re = 0.0;
  double lambda_im = 0.0;  // a* = astar + i lambda_im p
  bool imaginary = false;
};
DirectrixVector directrix(const LCVector& a);

// Conversions between the matrix model and the light cone. Points use the
// space form lift normalization <f,q> = -1, geodesics the tangent lift
// normalization <t,p> = -1.
LCVector point_to_lightcone(SpaceForm form, const Mat2C& f, double tol = kTol);
Mat2C point_from_lightcone(SpaceForm form, const LCVector& f, double tol = kTol);

/// Geodesic given by the normalized matrix n (and the normal distance d in
/// the Euclidean case, where the geodesic is <N,F> = d).
LCVector geodesic_to_lightcone(SpaceForm form, const Mat2C& n, double d = 0.0,
                               double tol = kTol);
struct ModelGeodesic {
  Mat2C n;
  double d = 0.0;  // Euclidean only
};
ModelGeodesic geodesic_from_lightcone(SpaceForm form, const LCVector& t, double tol = kTol);

}  // namespace sfc
