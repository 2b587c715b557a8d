#pragma once

#include <vector>

#include "sfcurve/lightcone.hpp"

namespace sfc {

/// True if f lies on the model of the given space form:
/// span{i,j} for E2, unit imaginary quaternions for S2, unit imaginary
/// split-quaternions (either sheet) for H2.
bool on_model(SpaceForm form, const Mat2C& f, double tol = kTol);

/// Metric distance of two model points. For H2 both points must lie on
/// the same sheet.
double model_distance(SpaceForm form, const Mat2C& f, const Mat2C& g);

/// Sign of the k-component, distinguishing the two hyperboloid sheets.
int hyperbolic_sheet(const Mat2C& f);

/// Rescales a nearly-on-model point back onto the model (unit
/// determinant); returns the applied correction magnitude.
double renormalize_model_point(SpaceForm form, Mat2C& f);

/// Space form motion. Euclidean: F -> E F E^{-1} + T with E in span{1,k}
/// (orientation preserving) or span{i,j} (reversing). Non-Euclidean:
/// F -> E F E^{-1} (preserving) or F -> -E F E^{-1} (reversing).
struct Isometry {
  SpaceForm form = SpaceForm::Euclidean;
  Mat2C e = mat_one();
  Mat2C t{};  // Euclidean translation part
  bool orientation_preserving = true;

  Mat2C apply(const Mat2C& f) const;
  Isometry inverse() const;
};

/// Least-squares isometry between two corresponding point lists; both
/// orientation classes are tried.
struct IsometryFit {
  Isometry isometry;
  double residual = 0.0;  // max pointwise deviation
};
IsometryFit fit_isometry(SpaceForm form, const std::vector<Mat2C>& src,
                         const std::vector<Mat2C>& dst);

/// Orientation-preserving isometry that moves f to the canonical initial
/// point (origin for E2, k for S2/H2).
Isometry isometry_to_canonical(SpaceForm form, const Mat2C& f);

}  // namespace sfc
