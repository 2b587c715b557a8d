#pragma once

#include <array>
#include <string>
#include <vector>

#include "sfcurve/curve.hpp"
#include "sfcurve/quatpoly.hpp"

namespace sfc {

/// Sequence of curves f^(0), ..., f^(n) on shared combinatorics in which
/// consecutive curves are meant to be related by Backlund transformations.
struct BacklundSequence {
  SpaceForm form = SpaceForm::Euclidean;
  std::vector<DiscreteCurve> curves;

  int steps() const { return static_cast<int>(curves.size()) - 1; }
  int length() const { return curves.empty() ? 0 : curves.front().size(); }
  const DiscreteCurve& first() const { return curves.front(); }
  const DiscreteCurve& last() const { return curves.back(); }
};

/// Transport in transformation direction at vertex k between level i and
/// i+1: difference in E2, quotient in S2/H2.
Mat2C sequence_v(const BacklundSequence& seq, int level, int k);

/// Residual of the defining butterfly equation of a quad (a, b, c, d):
/// (C-B)(B-A) = (C-D)(D-A) in E2 and CB + BA = CD + DA otherwise. Quads
/// with both diagonals collapsed (identity transformation) pass by
/// convention.
struct ButterflyCheck {
  bool butterfly = false;
  double residual = 0.0;
};
ButterflyCheck butterfly_check(const std::array<Mat2C, 4>& quad, SpaceForm form,
                               double tol = kTol);

/// The fourth point of the butterfly through a, b, d. Throws CoincidentBD.
Mat2C butterfly_complete(const Mat2C& a, const Mat2C& b, const Mat2C& d, SpaceForm form);

/// Trace and determinant of the quad cross-ratio matrix
/// (A-B)(B-C)^{-1}(C-D)(D-A)^{-1}; both are constant over the quads of a
/// Backlund transformation.
std::array<Complex, 2> quad_cross_ratio(const std::array<Mat2C, 4>& quad);

/// Backlund transformation of a curve determined by one initial point.
/// The initial point must not be at arc-length distance from f(t0) and,
/// on S2/H2, not antipodal to it. initial = f(t0) reproduces the curve
/// (identity transformation).
DiscreteCurve backlund_transform(const DiscreteCurve& curve, const Mat2C& initial);

/// Maximum residual of the additive and multiplicative skew
/// parallelogram equations over all quads, plus the factorized
/// compatibility condition sampled at a fixed lambda.
double skew_net_check(const BacklundSequence& seq);

/// Vertex polynomials P = E (1 + lambda v^(n-1)) ... (1 + lambda v^(0)).
std::vector<QuatPoly> build_polynomial(const BacklundSequence& seq, const Mat2C& e);

/// Least-squares isometry datum E with u~ E = E u over all edges of the
/// first and last curve.
Mat2C recover_isometry(const BacklundSequence& seq);

/// Residual of the polynomial evolution P1 (1+lambda u) = (1+lambda u) P0
/// over one edge, maximized over coefficients.
double polynomial_evolution_residual(const QuatPoly& p0, const QuatPoly& p1, const Mat2C& u01);

/// Invariants theta_j of det of the trace-free polynomial part,
/// theta_j = sum_k <C~^k, C~^{j-k}>.
std::vector<double> theta_invariants(const QuatPoly& p);

/// The quantities of Lemma-type fixed point relations: per-vertex
/// A = C^n - eta^2 C^{n-2} + ..., B = C^{n-1} - eta^2 C^{n-3} + ...,
/// and the scalar beta with A = beta T. When the trace-free polynomial is
/// divisible by (1 + lambda^2 eta^2) the reduced polynomial is used and
/// the reduction depth reported.
struct ABBetaResult {
  std::vector<Mat2C> a;
  std::vector<Mat2C> b;
  double beta = 0.0;
  int reduction_depth = 0;
  std::vector<QuatPoly> reduced;  // trace-free reduced polynomials (depth > 0)
};
ABBetaResult extract_ab_beta(const std::vector<QuatPoly>& p, double eta, double tol = kTol);

/// Verified invariance data of a curve.
struct InvarianceCertificate {
  int n = 0;
  Mat2C e;
  std::vector<QuatPoly> p;     // per vertex
  double beta = 0.0;           // Euclidean curves only
  std::vector<double> theta;   // invariant table (Euclidean)
  std::vector<double> r;       // half-trace coefficients of P
  std::vector<Mat2C> a;        // per vertex (Euclidean)
  std::vector<Mat2C> b;        // per vertex (Euclidean)
};

/// Certificate assembled from a sequence; E recovered when not supplied.
InvarianceCertificate certificate_from_sequence(const BacklundSequence& seq,
                                                const Mat2C* e_known = nullptr);

struct CertificateReport {
  bool valid = false;
  std::string failure;         // empty when valid
  int failed_vertex = -1;
  double parity_residual = 0.0;
  double evolution_residual = 0.0;
  bool roots_imaginary = false;
  double root_gap_to_eta = 0.0;   // min |root magnitude - 1/eta|
  double regularity_norm = 0.0;   // min |P~| along the curve
  double trace_drift = 0.0;
  double det_drift = 0.0;
  double theta_drift = 0.0;       // Euclidean
  double odd_theta = 0.0;         // Euclidean
  double beta_identity = 0.0;     // |beta^2 + (-eta^2)^(n-1) det P~(i/eta)|
};

/// Verification in the fixed order parity, evolution, determinant root
/// scan, regularity.
CertificateReport verify_certificate(const DiscreteCurve& curve,
                                     const InvarianceCertificate& cert, double tol = kTol);

/// Appending two identity transformations turns an n-certificate into an
/// (n+2)-certificate.
InvarianceCertificate promote_certificate(const InvarianceCertificate& cert, double eta);

/// Detects the degenerate 3-invariance data with a translation as
/// isometry (real E) and vanishing C^1: such curves are circles
/// (1-invariant). Thresholds tie to the global tolerance.
bool certificate_is_circle_case(const InvarianceCertificate& cert, double tol = kTol);

/// Reconstruction of the Backlund sequence from vertex polynomials
/// satisfying the invariance conditions: parity spans with C^0 != 0, the
/// evolution equation, and imaginary determinant roots away from i/eta.
/// Euclidean curves only. Throws ConditionViolated or
/// FactorizationFailed.
BacklundSequence synthesize_invariance(const DiscreteCurve& curve,
                                       const std::vector<QuatPoly>& p, double tol = kTol);

/// Associated family applied to a whole sequence, using the grid frames.
/// Preserves the Backlund property and n-invariance.
BacklundSequence family_on_sequence(const BacklundSequence& seq, Complex lambda,
                                    double tol = kTol);

/// One discrete flow step: the composition of one Backlund transformation
/// per seed point.
DiscreteCurve flow_step(const DiscreteCurve& curve, const std::vector<Mat2C>& seeds);

}  // namespace sfc
