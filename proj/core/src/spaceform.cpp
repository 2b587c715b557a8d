#include "sfcurve/spaceform.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "sfcurve/numeric.hpp"

namespace sfc {

bool on_model(SpaceForm form, const Mat2C& f, double tol) {
  switch (form) {
    case SpaceForm::Euclidean:
      return in_span_ij(f, tol);
    case SpaceForm::Spherical: {
      if (!is_quaternion(f, tol)) return false;
      const auto q = quaternion_coords(f, tol);
      // rounding floor scales with the squared norm of the entries
      const double det_tol = 10.0 * tol + 1e-13 * f.norm() * f.norm();
      return std::abs(q[0]) <= tol * (1.0 + f.norm()) &&
             std::abs(f.det().real() - 1.0) <= det_tol;
    }
    case SpaceForm::Hyperbolic: {
      if (!is_split_quaternion(f, tol)) return false;
      const auto s = split_coords(f, tol);
      const double det_tol = 10.0 * tol + 1e-13 * f.norm() * f.norm();
      return std::abs(s[0]) <= tol * (1.0 + f.norm()) &&
             std::abs(f.det().real() - 1.0) <= det_tol;
    }
  }
  return false;
}

double model_distance(SpaceForm form, const Mat2C& f, const Mat2C& g) {
  switch (form) {
    case SpaceForm::Euclidean:
      return std::sqrt(std::max(0.0, (g - f).det().real()));
    case SpaceForm::Spherical: {
      const double c = std::clamp(mat_inner(f, g).real(), -1.0, 1.0);
      return std::acos(c);
    }
    case SpaceForm::Hyperbolic: {
      const double c = std::max(1.0, mat_inner(f, g).real());
      return std::acosh(c);
    }
  }
  return 0.0;
}

int hyperbolic_sheet(const Mat2C& f) {
  return split_coords(f, 1.0)[3] >= 0.0 ? 1 : -1;
}

double renormalize_model_point(SpaceForm form, Mat2C& f) {
  if (form == SpaceForm::Euclidean) return 0.0;
  const Mat2C before = f;
  const double scale2 = f.norm() * f.norm();
  // far from the base point the determinant is pure cancellation and the
  // projection cannot improve the point
  if (scale2 > 1e10) return 0.0;
  Mat2C imag = trace_free(f);
  const double dt = imag.det().real();
  if (dt <= 0.0) {
    throw Error(Errc::NotOnModel, "point drifted off the model");
  }
  f = imag / std::sqrt(dt);
  return (f - before).norm();
}

Mat2C Isometry::apply(const Mat2C& f) const {
  const Mat2C conj = e * f * e.inverse();
  switch (form) {
    case SpaceForm::Euclidean:
      return conj + t;
    case SpaceForm::Spherical:
    case SpaceForm::Hyperbolic:
      return orientation_preserving ? conj : -conj;
  }
  return conj;
}

Isometry Isometry::inverse() const {
  Isometry inv = *this;
  inv.e = e.inverse();
  if (form == SpaceForm::Euclidean) {
    inv.t = -(inv.e * t * inv.e.inverse());
  }
  return inv;
}

namespace {

IsometryFit fit_euclidean(const std::vector<Mat2C>& src, const std::vector<Mat2C>& dst) {
  const size_t n = src.size();
  // complex identification z = x + i y
  std::vector<Complex> zs(n), zd(n);
  for (size_t i = 0; i < n; ++i) {
    const auto s = plane_coords(src[i], 1.0);
    const auto d = plane_coords(dst[i], 1.0);
    zs[i] = {s[0], s[1]};
    zd[i] = {d[0], d[1]};
  }
  Complex ms{}, md{};
  for (size_t i = 0; i < n; ++i) {
    ms += zs[i];
    md += zd[i];
  }
  ms /= static_cast<double>(n);
  md /= static_cast<double>(n);

  IsometryFit best;
  best.residual = std::numeric_limits<double>::infinity();
  for (const bool preserve : {true, false}) {
    Complex num{};
    for (size_t i = 0; i < n; ++i) {
      const Complex s = preserve ? (zs[i] - ms) : std::conj(zs[i] - ms);
      num += (zd[i] - md) * std::conj(s);
    }
    if (std::abs(num) == 0.0) num = 1.0;  // pure translation
    const Complex rot = num / std::abs(num);
    const double phi = std::arg(rot);
    Isometry iso;
    iso.form = SpaceForm::Euclidean;
    iso.orientation_preserving = preserve;
    if (preserve) {
      iso.e = quaternion_from_coords(std::cos(phi / 2.0), 0.0, 0.0, std::sin(phi / 2.0));
    } else {
      // reflection across direction exp(i phi / 2)
      iso.e = quaternion_from_coords(0.0, std::cos(phi / 2.0), std::sin(phi / 2.0), 0.0);
    }
    // translation from centroids
    Mat2C mean_src = plane_point(ms.real(), ms.imag());
    Mat2C mean_dst = plane_point(md.real(), md.imag());
    iso.t = mean_dst - iso.e * mean_src * iso.e.inverse();
    double residual = 0.0;
    for (size_t i = 0; i < n; ++i) {
      residual = std::max(residual, (iso.apply(src[i]) - dst[i]).norm());
    }
    if (residual < best.residual) {
      best.isometry = iso;
      best.residual = residual;
    }
  }
  return best;
}

IsometryFit fit_non_euclidean(SpaceForm form, const std::vector<Mat2C>& src,
                              const std::vector<Mat2C>& dst) {
  const bool split = form == SpaceForm::Hyperbolic;
  const std::array<Mat2C, 4> basis = split
      ? std::array<Mat2C, 4>{mat_one(), mat_sigma1(), mat_sigma2(), mat_k()}
      : std::array<Mat2C, 4>{mat_one(), mat_i(), mat_j(), mat_k()};

  IsometryFit best;
  best.residual = std::numeric_limits<double>::infinity();
  for (const bool preserve : {true, false}) {
    // rows of |G E -+ E F| = 0, linear in the 4 real coordinates of E
    std::vector<double> rows;
    rows.reserve(src.size() * 8 * 4);
    const double sign = preserve ? 1.0 : -1.0;
    for (size_t i = 0; i < src.size(); ++i) {
      std::array<Mat2C, 4> cols;
      for (int k = 0; k < 4; ++k) cols[k] = dst[i] * basis[k] - sign * basis[k] * src[i];
      // 8 real rows per correspondence: real and imaginary part of each entry
      for (int part = 0; part < 8; ++part) {
        for (int k = 0; k < 4; ++k) {
          const Complex entries[4] = {cols[k].a, cols[k].b, cols[k].c, cols[k].d};
          const Complex z = entries[part / 2];
          rows.push_back(part % 2 == 0 ? z.real() : z.imag());
        }
      }
    }
    const auto x = least_squares_null_vector(rows, static_cast<int>(src.size()) * 8, 4);
    Mat2C e{};
    for (int k = 0; k < 4; ++k) e += x[k] * basis[k];
    const double dt = std::abs(e.det());
    if (dt < 1e-12) continue;
    e /= std::sqrt(dt);
    Isometry iso;
    iso.form = form;
    iso.orientation_preserving = preserve;
    iso.e = e;
    double residual = 0.0;
    for (size_t i = 0; i < src.size(); ++i) {
      residual = std::max(residual, (iso.apply(src[i]) - dst[i]).norm());
    }
    if (residual < best.residual) {
      best.isometry = iso;
      best.residual = residual;
    }
  }
  return best;
}

}  // namespace

IsometryFit fit_isometry(SpaceForm form, const std::vector<Mat2C>& src,
                         const std::vector<Mat2C>& dst) {
  if (src.size() != dst.size() || src.size() < 2) {
    throw Error(Errc::TooShort, "isometry fit needs at least two correspondences");
  }
  return form == SpaceForm::Euclidean ? fit_euclidean(src, dst)
                                      : fit_non_euclidean(form, src, dst);
}

Isometry isometry_to_canonical(SpaceForm form, const Mat2C& f) {
  Isometry iso;
  iso.form = form;
  iso.orientation_preserving = true;
  if (form == SpaceForm::Euclidean) {
    iso.t = -f;
    return iso;
  }
  // Rotation/boost sending f to k: 1 - k f, with a fallback when f = -k.
  Mat2C e = mat_one() - mat_k() * f;
  if (std::abs(e.det()) < 1e-8) {
    e = form == SpaceForm::Spherical ? mat_i() : mat_sigma1();
  }
  iso.e = e / std::sqrt(Complex(e.det()));
  return iso;
}

}  // namespace sfc
