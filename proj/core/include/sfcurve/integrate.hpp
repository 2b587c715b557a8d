#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sfcurve/curve.hpp"

namespace sfc {

/// Parameters of the curvature equation
///   kappa(-1) + kappa(1) = (xi kappa0 + delta) / (1 + zeta^2 kappa0^2 / 4);
/// delta = 0 is the elastic case.
struct ElasticParams {
  double xi = 0.0;
  double delta = 0.0;
  double eta = 0.0;
  double zeta = 0.0;

  static ElasticParams make(SpaceForm form, double xi, double delta, double eta);
};

/// Curvature-to-curve integration: prescribes kappa at the interior
/// vertices and produces a curve with kappa.size() + 2 vertices and
/// constant arc-length eta. Default seeds start at the origin (E2) or at
/// k (S2/H2) with the first edge in the i-direction.
DiscreteCurve integrate_curvature(SpaceForm form, double eta, const std::vector<double>& kappa,
                                  std::optional<std::pair<Mat2C, Mat2C>> seeds = std::nullopt);

/// Runs the curvature recursion from two initial values; returns count
/// values beginning with kappa_m1, kappa_0.
std::vector<double> kappa_recursion(const ElasticParams& params, double kappa_m1, double kappa_0,
                                    int count);

/// Least-squares fit of (xi, delta) against the curvature equation.
struct CurvatureFit {
  double xi = 0.0;
  double delta = 0.0;
  double max_residual = 0.0;
  bool non_unique = false;  // constant curvature: (xi, delta) not unique
};
CurvatureFit curvature_equation_fit(const DiscreteCurve& curve, double tol = kTol);

}  // namespace sfc
