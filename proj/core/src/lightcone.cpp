#include "sfcurve/lightcone.hpp"

#include <cmath>
#include <ostream>

namespace sfc {

double space_form_eps(SpaceForm form) {
  switch (form) {
    case SpaceForm::Euclidean: return 0.0;
    case SpaceForm::Spherical: return 1.0;
    case SpaceForm::Hyperbolic: return -1.0;
  }
  return 0.0;
}

const char* space_form_name(SpaceForm form) {
  switch (form) {
    case SpaceForm::Euclidean: return "E2";
    case SpaceForm::Spherical: return "S2";
    case SpaceForm::Hyperbolic: return "H2";
  }
  return "?";
}

double LCVector::norm() const {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3] + v[4] * v[4]);
}

LCVector& LCVector::operator+=(const LCVector& o) {
  for (int i = 0; i < 5; ++i) v[i] += o.v[i];
  return *this;
}
LCVector& LCVector::operator-=(const LCVector& o) {
  for (int i = 0; i < 5; ++i) v[i] -= o.v[i];
  return *this;
}
LCVector& LCVector::operator*=(double s) {
  for (int i = 0; i < 5; ++i) v[i] *= s;
  return *this;
}

LCVector operator+(LCVector l, const LCVector& r) { return l += r; }
LCVector operator-(LCVector l, const LCVector& r) { return l -= r; }
LCVector operator*(double s, LCVector m) { return m *= s; }
LCVector operator*(LCVector m, double s) { return m *= s; }
LCVector operator-(const LCVector& m) { return -1.0 * m; }

std::ostream& operator<<(std::ostream& os, const LCVector& m) {
  os << "(" << m[0];
  for (int i = 1; i < 5; ++i) os << ", " << m[i];
  return os << ")";
}

double lc_inner(const LCVector& u, const LCVector& w) {
  return u[0] * w[0] + u[1] * w[1] + u[2] * w[2] - u[3] * w[3] - u[4] * w[4];
}

LCVector lc_p() { return {0.0, 0.0, 0.0, 0.0, 1.0}; }
LCVector lc_q0() { return {0.0, 0.0, 1.0, -1.0, 0.0}; }

LCVector lc_q(SpaceForm form) {
  switch (form) {
    case SpaceForm::Euclidean: return {0.0, 0.0, -1.0, 1.0, 0.0};
    case SpaceForm::Spherical: return {0.0, 0.0, 0.0, 1.0, 0.0};
    case SpaceForm::Hyperbolic: return {0.0, 0.0, -1.0, 0.0, 0.0};
  }
  return {};
}

LCVector lift_point(double x, double y) {
  const double s = x * x + y * y;
  return {x, y, 0.5 * (1.0 - s), 0.5 * (1.0 + s), 0.0};
}

LCVector lift_circle(double x, double y, double r) {
  const double s = x * x + y * y;
  return {x, y, 0.5 * (1.0 - s + r * r), 0.5 * (1.0 + s - r * r), r};
}

LCVector lift_line(double nx, double ny, double d) { return {nx, ny, -d, d, 1.0}; }

IdentifyResult identify(const LCVector& vec, double tol) {
  const double scale = vec.norm();
  if (scale == 0.0 || std::abs(lc_inner(vec, vec)) > tol * scale * scale * 10.0 + tol) {
    throw Error(Errc::NotLightlike, "vector is not on the light cone");
  }
  IdentifyResult res{};
  const double w = vec[2] + vec[3];  // Euclidean normalizer -<v, q_E>
  if (std::abs(w) <= tol * scale) {
    // No finite center: a line, or infinity itself.
    const double nn = std::hypot(vec[0], vec[1]);
    if (nn <= tol * scale) {
      res.kind = IdentifyResult::Kind::Infinity;
      return res;
    }
    // light-likeness forces |v5| = |(nx,ny)|
    const double s = vec[4] > 0.0 ? 1.0 : -1.0;
    res.kind = IdentifyResult::Kind::Line;
    res.x = s * vec[0] / nn;
    res.y = s * vec[1] / nn;
    res.d = s * vec[3] / nn;
    return res;
  }
  const double x = vec[0] / w;
  const double y = vec[1] / w;
  const double r = vec[4] / w;
  if (std::abs(r) <= tol * (1.0 + std::abs(x) + std::abs(y))) {
    res.kind = IdentifyResult::Kind::Point;
    res.x = x;
    res.y = y;
    return res;
  }
  res.kind = IdentifyResult::Kind::Circle;
  res.x = x;
  res.y = y;
  res.r = r;
  return res;
}

LCVector reflect(const LCVector& a, const LCVector& r) {
  const double aa = lc_inner(a, a);
  if (std::abs(aa) <= kTol * a.norm() * a.norm()) {
    throw Error(Errc::IsotropicMirror, "reflection mirror is light-like");
  }
  return r - (2.0 * lc_inner(r, a) / aa) * a;
}

double geodesic_curvature(const LCVector& s, const LCVector& q) {
  const double sp = lc_inner(s, lc_p());
  if (std::abs(sp) <= kTol * s.norm()) {
    throw Error(Errc::PointNotCircle, "vector represents a point, not a circle");
  }
  return lc_inner(s, q) / sp;
}

IntersectionAngle intersection_angle(const LCVector& u, const LCVector& w) {
  const double up = lc_inner(u, lc_p());
  const double wp = lc_inner(w, lc_p());
  if (std::abs(up) <= kTol * u.norm() || std::abs(wp) <= kTol * w.norm()) {
    throw Error(Errc::PointNotCircle, "intersection angle needs two circles");
  }
  IntersectionAngle res;
  res.cosine = 1.0 + lc_inner(u, w) / (up * wp);
  if (std::abs(res.cosine) <= 1.0) {
    res.real = true;
    res.angle = std::acos(res.cosine);
  } else {
    res.real = false;
  }
  return res;
}

DirectrixVector directrix(const LCVector& a) {
  const double ap = lc_inner(a, lc_p());
  const double aa = lc_inner(a, a);
  const double radicand = ap * ap + aa;
  DirectrixVector res;
  if (radicand >= 0.0) {
    // Of the two light-like representatives a + lambda p choose the root
    // of smaller magnitude, so that light-like input stays fixed.
    const double root = std::sqrt(radicand);
    res.lambda_re = ap - (ap >= 0.0 ? root : -root);
    res.imaginary = false;
  } else {
    res.lambda_re = ap;
    res.lambda_im = std::sqrt(-radicand);
    res.imaginary = true;
  }
  res.astar = a + res.lambda_re * lc_p();
  return res;
}

LCVector point_to_lightcone(SpaceForm form, const Mat2C& f, double tol) {
  switch (form) {
    case SpaceForm::Euclidean: {
      const auto xy = plane_coords(f, tol);
      return lift_point(xy[0], xy[1]);
    }
    case SpaceForm::Spherical: {
      const auto q = quaternion_coords(f, tol);
      if (std::abs(q[0]) > tol * (1.0 + f.norm()) ||
          std::abs(f.det().real() - 1.0) > 100.0 * tol) {
        throw Error(Errc::NotOnModel, "matrix is not a unit imaginary quaternion");
      }
      return {q[1], q[2], q[3], 1.0, 0.0};
    }
    case SpaceForm::Hyperbolic: {
      const auto s = split_coords(f, tol);
      if (std::abs(s[0]) > tol * (1.0 + f.norm()) ||
          std::abs(f.det().real() - 1.0) > 100.0 * tol) {
        throw Error(Errc::NotOnModel, "matrix is not a unit imaginary split-quaternion");
      }
      return {s[1], s[2], 1.0, s[3], 0.0};
    }
  }
  return {};
}

Mat2C point_from_lightcone(SpaceForm form, const LCVector& f, double tol) {
  const double scale = f.norm();
  if (std::abs(lc_inner(f, f)) > 100.0 * tol * scale * scale) {
    throw Error(Errc::NotOnModel, "vector is not light-like");
  }
  const double fq = lc_inner(f, lc_q(form));
  if (std::abs(fq) <= tol * scale) {
    throw Error(Errc::NotOnModel, "vector cannot be normalized against the space form vector");
  }
  const LCVector n = (-1.0 / fq) * f;
  if (std::abs(lc_inner(n, lc_p())) > 100.0 * tol) {
    throw Error(Errc::NotOnModel, "vector does not represent a point");
  }
  switch (form) {
    case SpaceForm::Euclidean:
      return plane_point(n[0], n[1]);
    case SpaceForm::Spherical:
      return quaternion_from_coords(0.0, n[0], n[1], n[2]);
    case SpaceForm::Hyperbolic:
      if (std::abs(n[2] - 1.0) > 100.0 * tol) {
        throw Error(Errc::NotOnModel, "vector does not represent a hyperbolic point");
      }
      return split_from_coords(0.0, n[0], n[1], n[3]);
  }
  return {};
}

LCVector geodesic_to_lightcone(SpaceForm form, const Mat2C& n, double d, double tol) {
  switch (form) {
    case SpaceForm::Euclidean: {
      const auto xy = plane_coords(n, tol);
      return lift_line(xy[0], xy[1], d);
    }
    case SpaceForm::Spherical: {
      const auto q = quaternion_coords(n, tol);
      return {q[1], q[2], q[3], 0.0, 1.0};
    }
    case SpaceForm::Hyperbolic: {
      const auto s = split_coords(n, tol);
      return {s[1], s[2], 0.0, s[3], 1.0};
    }
  }
  return {};
}

ModelGeodesic geodesic_from_lightcone(SpaceForm form, const LCVector& t, double tol) {
  const double scale = t.norm();
  if (std::abs(lc_inner(t, t)) > 100.0 * tol * scale * scale) {
    throw Error(Errc::NotOnModel, "vector is not light-like");
  }
  if (std::abs(t[4]) <= tol * scale) {
    throw Error(Errc::NotOnModel, "vector does not represent a geodesic");
  }
  const LCVector n = (1.0 / t[4]) * t;
  ModelGeodesic res;
  switch (form) {
    case SpaceForm::Euclidean:
      res.n = plane_point(n[0], n[1]);
      res.d = n[3];
      break;
    case SpaceForm::Spherical:
      res.n = quaternion_from_coords(0.0, n[0], n[1], n[2]);
      break;
    case SpaceForm::Hyperbolic:
      res.n = split_from_coords(0.0, n[0], n[1], n[3]);
      break;
  }
  return res;
}

}  // namespace sfc
