#pragma once

#include "sfcurve/curve.hpp"

namespace sfc {

/// Transform T^lambda between space forms, built from the frame
/// Phi(t0) = 1, Phi(k+1) = (1 + lambda u) Phi(k). Euclidean curves map to
/// S2 for real lambda != 0 and to H2 for imaginary lambda with
/// |lambda| in (0, 1/eta); non-Euclidean curves map to E2 with lambda = 1.
struct FamilyResult {
  DiscreteCurve curve;             // the transformed curve
  std::vector<Mat2C> frames;       // unit-determinant frames per vertex
  Complex lambda{};
  Isometry canonical_move;         // isometry that moved the source into
                                   // canonical initial position
};

FamilyResult associated_transform_full(const DiscreteCurve& curve, Complex lambda,
                                       double tol = kTol);

DiscreteCurve associated_transform(const DiscreteCurve& curve, Complex lambda,
                                   double tol = kTol);

/// Target space form and the lambda needed to come back.
SpaceForm family_target(SpaceForm source, Complex lambda, double eta);
Complex family_return_lambda(SpaceForm source);

/// Arc-length of the transformed curve in closed form:
/// 2 |lambda| eta / (1 + lambda^2 eta^2) from E2, eta^2/(2 zeta) to E2.
double family_zeta(SpaceForm source, Complex lambda, double eta);

/// Constant curvature scale of T^lambda, c = zeta / T^lambda zeta.
double family_curvature_scale(SpaceForm source, Complex lambda, double eta);

/// Applies the family twice (with the reversing lambda) and reports the
/// maximum vertex deviation from the canonicalized input. For Euclidean
/// input the composition is checked to be a constant scaling instead.
double family_roundtrip_check(const DiscreteCurve& curve, Complex lambda = Complex(1.0),
                              double tol = kTol);

}  // namespace sfc
