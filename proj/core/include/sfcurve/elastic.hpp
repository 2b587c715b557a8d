#pragma once

#include "sfcurve/backlund.hpp"
#include "sfcurve/integrate.hpp"

namespace sfc {

/// The conserved vector of the proportionality characterization,
/// kappa_0 = omega <f_0, a> at every vertex.
struct Proportionality {
  LCVector a;        // mean of the per-vertex construction
  double omega = 1.0;
  double max_drift = 0.0;      // vertexwise deviation of a from its mean
  double max_residual = 0.0;   // |kappa - omega <f,a>|
};

/// Constructs the vector from a constrained elastic curve; throws
/// NotElastic when the construction drifts along the curve.
Proportionality proportionality_vector(const DiscreteCurve& curve, double tol = kTol);

/// Linear-complex membership of the double-curvature circles:
/// max |<c_0, a>| over the interior vertices.
double complex_membership_check(const DiscreteCurve& curve, const LCVector& a);

/// Shifts a by a multiple of the point-sphere complex so the
/// double-curvature circles lie in the complex.
LCVector membership_complex(const DiscreteCurve& curve, const Proportionality& prop);

/// Directrix of a Euclidean constrained elastic curve: a line for
/// elastic curves (delta = 0) and a circle otherwise; the circle radius
/// square may be negative.
struct Directrix {
  enum class Kind { Line, Circle, ImaginaryCircle } kind = Kind::Line;
  // line: unit normal and offset, <N, F> = dist
  double nx = 0.0, ny = 0.0, dist = 0.0;
  // circle: center and squared radius
  double cx = 0.0, cy = 0.0, rho = 0.0;
  LCVector a;                       // the membership complex
  DirectrixVector astar;            // light-like representative of a
  double omega = 1.0;
  double c = 0.0;                   // distance law d = c kappa (line) or d^2 = c kappa
  double law_residual = 0.0;        // worst deviation from the distance law
  std::vector<double> distances;    // signed d (line) or d^2 (circle) per vertex

  double beta(double eta) const { return 4.0 * c / eta; }
};

Directrix euclidean_directrix(const DiscreteCurve& curve, double tol = kTol);

/// Vertex polynomials of degree 2 certifying 2-invariance of an elastic
/// curve: C0 = E, C1 = r1 - beta H~, C2 = beta T + eta^2 E.
std::vector<QuatPoly> elastic_polynomial(const DiscreteCurve& curve, const Mat2C& e, double beta,
                                         double r1);

/// Vertex polynomials of degree 3 certifying 3-invariance of a
/// constrained elastic curve: C0 = r0 + k, C1 = 2 (F - X) k,
/// C2 = r2 - beta H~ + eta^2 k, C3 = beta T + eta^2 C1.
std::vector<QuatPoly> constrained_elastic_polynomial(const DiscreteCurve& curve, const Mat2C& x,
                                                     double beta, double r0, double r2);

/// Scalar search making the determinant roots imaginary and distinct
/// from i/eta. Sweeps a geometric grid of the free constants; throws
/// SearchFailed with the scanned range.
struct ElasticCertification {
  BacklundSequence sequence;
  InvarianceCertificate certificate;
  Directrix directrix;           // Euclidean data (of the Euclidean stage)
  double searched_scalar0 = 0.0; // r1 for n=2, r0 for n=3
  double searched_scalar1 = 0.0; // r2 for n=3
  // the synthesized sequence in the plane; equal to `sequence` for
  // Euclidean input and the pre-transport stage otherwise
  BacklundSequence euclidean_stage;
};

/// Certifies a Euclidean constrained elastic curve as 2-invariant
/// (delta = 0) or 3-invariant. Constant-curvature curves go through the
/// circle polynomial.
ElasticCertification certify_euclidean(const DiscreteCurve& curve, double tol = kTol);

/// Any space form: non-Euclidean curves are taken to the plane with the
/// associated family, certified there, and the sequence is carried back.
ElasticCertification certify_invariance(const DiscreteCurve& curve, double tol = kTol);

/// Decomposition of the rotation flow C^1 of a 3-invariant curve into
/// the semi-discrete mKdV flow and the tangent flow.
struct MkdvDecomposition {
  double mkdv_coefficient = 0.0;     // -beta / (2 eta^2)
  double tangent_coefficient = 0.0;  // a0 / (2 beta eta^4)
  double a0 = 0.0;                   // theta6 - eta^4 theta2 + 2 eta^6 theta0
  double max_residual = 0.0;         // worst vertex residual of the identity
  double a0_drift = 0.0;             // constancy of a0 across vertices
};
MkdvDecomposition mkdv_decompose(const DiscreteCurve& curve, const InvarianceCertificate& cert,
                                 double tol = kTol);

}  // namespace sfc
