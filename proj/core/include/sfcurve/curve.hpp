#pragma once

#include <vector>

#include "sfcurve/spaceform.hpp"

namespace sfc {

/// Discrete curve with constant arc-length in a space form, vertices in
/// the matrix model (span{i,j} points for E2, unit imaginary quaternions
/// for S2, unit imaginary split-quaternions for H2).
struct DiscreteCurve {
  SpaceForm form = SpaceForm::Euclidean;
  std::vector<Mat2C> vertices;
  bool periodic = false;

  int size() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return periodic ? size() : size() - 1; }

  /// Vertex index modulo the period for closed curves.
  int wrap(int i) const;
  const Mat2C& vertex(int i) const { return vertices[wrap(i)]; }

  bool is_interior(int i) const { return periodic || (i > 0 && i + 1 < size()); }
  std::vector<int> interior_indices() const;
};

/// Arc-length parameter eta from the first edge.
double curve_eta(const DiscreteCurve& curve);

/// zeta = eta sqrt(1 - eps eta^2 / 4), the second arc-length quantity.
double curve_zeta(const DiscreteCurve& curve);
double zeta_from_eta(SpaceForm form, double eta);

/// Validates regularity (three consecutive points pairwise distinct, no
/// antipodal neighbors on S2, single sheet on H2), model membership and
/// arc-length constancy. Throws IrregularCurve with the vertex index.
void validate_curve(const DiscreteCurve& curve, double tol = kTol);

/// Maximum deviation of the per-edge arc-length quantity from its mean.
double arclength_deviation(const DiscreteCurve& curve);

/// Edge transport matrices: u01 = F1 - F0 for E2, u01 = F1 F0^{-1} for
/// S2/H2. One entry per edge.
std::vector<Mat2C> transport(const DiscreteCurve& curve);

/// Harmonic mean tangent T0 = 2 (u(-10)^{-1} + u(01)^{-1})^{-1} on the
/// trace-free transports. Entries at boundary vertices of open curves are
/// zero. Throws CuspVertex when adjacent transports cancel.
std::vector<Mat2C> vertex_tangent(const DiscreteCurve& curve);

/// Vertex map H0 = u01^{-1} T0 encoding the curvature. Same conventions
/// as vertex_tangent.
std::vector<Mat2C> vertex_h(const DiscreteCurve& curve);

/// Geodesic curvature per vertex, extracted from H (1 + eta/2 kappa k in
/// E2, 1 + zeta/2 kappa F0 otherwise). Boundary entries are NaN.
std::vector<double> curvature(const DiscreteCurve& curve);

/// Space-form lift of a vertex, normalized <f,q> = -1.
LCVector vertex_lift(const DiscreteCurve& curve, int i);

/// Tangent line congruence lift of an edge, normalized <t,p> = -1, with
/// the orientation induced by the curve direction.
LCVector tangent_lift(const DiscreteCurve& curve, int edge);

/// The circle in oriented contact with both tangent geodesics at the
/// outer stencil points f(-1), f(1); half of the curve's curvature sits
/// on it. Throws BoundaryVertex at open-curve ends.
LCVector double_curvature_circle(const DiscreteCurve& curve, int i);

/// Edge normal n01 = (f0 - f1)/eta + p, the geodesic through the edge
/// midpoint orthogonal to the tangent.
LCVector edge_normal(const DiscreteCurve& curve, int edge);

/// Residual norms of the two Frenet-type difference equations in the
/// light cone and of their matrix-model counterparts, per interior
/// vertex.
struct FrenetResidual {
  double eq1 = 0.0;
  double eq2 = 0.0;
  double eq1_matrix = 0.0;
  double eq2_matrix = 0.0;
  double max() const;
};
std::vector<FrenetResidual> frenet_residuals(const DiscreteCurve& curve);

/// Applies a space form motion to every vertex.
DiscreteCurve apply_isometry(const DiscreteCurve& curve, const Isometry& iso);

/// Maximum vertexwise distance between two curves with equal combinatorics.
double curve_distance(const DiscreteCurve& a, const DiscreteCurve& b);

}  // namespace sfc
