#pragma once

#include <random>
#include <vector>

#include "sfcurve/curve.hpp"
#include "sfcurve/integrate.hpp"

namespace sfc::testing {

inline std::mt19937& global_rng() {
  static std::mt19937 rng(0xC0FFEEu);
  return rng;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(global_rng());
}

inline int uniform_int(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(global_rng());
}

/// Random admissible arc-length parameter. Hyperbolic curves of total
/// length L reach coordinates of size cosh(L), so the length is capped
/// to keep 1e-9 scale checks meaningful in double precision.
inline double random_eta(SpaceForm form, int n_vertices = 30) {
  if (form == SpaceForm::Hyperbolic) {
    // measured quantities degrade like cosh(L)^4; keep L = n eta small
    const double cap = 3.5 / n_vertices;
    return uniform(0.6 * cap, cap);
  }
  return uniform(0.2, 1.2);
}

/// Random regular curve generated from a bounded random curvature
/// function through the fundamental-theorem integrator. Hyperbolic
/// curves are resampled when they wander too far from the base point,
/// where coordinates grow like cosh of the distance and absolute
/// precision degrades.
inline DiscreteCurve random_curve(SpaceForm form, int n_vertices, double kappa_bound = 1.0) {
  const double eta = random_eta(form, n_vertices);
  std::vector<double> kappa(n_vertices - 2);
  const double bound = std::min(kappa_bound, 1.5 / eta);
  for (auto& k : kappa) k = uniform(-bound, bound);
  return integrate_curvature(form, eta, kappa);
}

/// Random curve satisfying the curvature equation with the given delta.
inline DiscreteCurve random_constrained_elastic(SpaceForm form, int n_vertices, double delta,
                                                double* eta_out = nullptr) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    const double eta = form == SpaceForm::Hyperbolic
                           ? std::min(uniform(0.25, 0.7), 3.5 / n_vertices)
                           : uniform(0.25, 0.7);
    ElasticParams params = ElasticParams::make(form, uniform(1.6, 2.3), delta, eta);
    const double k0 = uniform(0.2, 0.8);
    const double km1 = k0 + uniform(-0.2, 0.2);
    const auto kappa = kappa_recursion(params, km1, k0, n_vertices - 2);
    double peak = 0.0;
    for (const double k : kappa) peak = std::max(peak, std::abs(k));
    if (peak * eta > 1.9) continue;  // keep stencils regular
    DiscreteCurve c = integrate_curvature(form, eta, kappa);
    double extent = 0.0;
    for (const auto& f : c.vertices) extent = std::max(extent, f.norm());
    if (extent < 80.0) {
      if (eta_out) *eta_out = eta;
      return c;
    }
  }
  throw Error(Errc::IrregularCurve, "could not sample a bounded elastic curve");
}

inline Mat2C random_model_point(SpaceForm form, double radius = 1.0) {
  switch (form) {
    case SpaceForm::Euclidean:
      return plane_point(uniform(-radius, radius), uniform(-radius, radius));
    case SpaceForm::Spherical: {
      double x = uniform(-1.0, 1.0), y = uniform(-1.0, 1.0), z = uniform(-1.0, 1.0);
      const double n = std::sqrt(x * x + y * y + z * z);
      return quaternion_from_coords(0.0, x / n, y / n, z / n);
    }
    case SpaceForm::Hyperbolic: {
      const double x = uniform(-radius, radius), y = uniform(-radius, radius);
      return split_from_coords(0.0, x, y, std::sqrt(1.0 + x * x + y * y));
    }
  }
  return {};
}

inline Isometry random_isometry(SpaceForm form) {
  Isometry iso;
  iso.form = form;
  iso.orientation_preserving = true;
  if (form == SpaceForm::Euclidean) {
    const double phi = uniform(0.0, 6.28);
    iso.e = quaternion_from_coords(std::cos(phi / 2.0), 0.0, 0.0, std::sin(phi / 2.0));
    iso.t = plane_point(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
    return iso;
  }
  Mat2C e;
  if (form == SpaceForm::Spherical) {
    e = quaternion_from_coords(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
  } else {
    e = split_from_coords(uniform(1.5, 2.0), uniform(-0.5, 0.5), uniform(-0.5, 0.5),
                          uniform(-0.5, 0.5));
  }
  iso.e = e / std::sqrt(Complex(e.det()));
  return iso;
}

inline double curve_extent(const DiscreteCurve& c) {
  double extent = 0.0;
  for (const auto& f : c.vertices) extent = std::max(extent, f.norm());
  return extent;
}

inline const std::vector<SpaceForm>& all_forms() {
  static const std::vector<SpaceForm> forms{SpaceForm::Euclidean, SpaceForm::Spherical,
                                            SpaceForm::Hyperbolic};
  return forms;
}

}  // namespace sfc::testing
