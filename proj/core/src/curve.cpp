#include "sfcurve/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sfc {

namespace {

Mat2C edge_transport(SpaceForm form, const Mat2C& f0, const Mat2C& f1) {
  if (form == SpaceForm::Euclidean) return f1 - f0;
  // F^{-1} = -F for unit imaginary (split-)quaternions
  return -1.0 * (f1 * f0);
}

double edge_arclength_quantity(SpaceForm form, const Mat2C& f0, const Mat2C& f1) {
  // eta^2 in all space forms, derived from the conserved inner product.
  if (form == SpaceForm::Euclidean) return (f1 - f0).det().real();
  const double eps = space_form_eps(form);
  return 2.0 * (1.0 - mat_inner(f0, f1).real()) / eps;
}

}  // namespace

int DiscreteCurve::wrap(int i) const {
  const int n = size();
  if (periodic) {
    i %= n;
    if (i < 0) i += n;
    return i;
  }
  return i;
}

std::vector<int> DiscreteCurve::interior_indices() const {
  std::vector<int> idx;
  for (int i = 0; i < size(); ++i) {
    if (is_interior(i)) idx.push_back(i);
  }
  return idx;
}

double curve_eta(const DiscreteCurve& curve) {
  if (curve.size() < 2) throw Error(Errc::TooShort, "curve needs at least two vertices");
  const double sq = edge_arclength_quantity(curve.form, curve.vertices[0], curve.vertices[1]);
  if (sq <= 0.0) throw Error(Errc::IrregularCurve, "vanishing first edge");
  return std::sqrt(sq);
}

double zeta_from_eta(SpaceForm form, double eta) {
  const double eps = space_form_eps(form);
  const double val = eta * eta * (1.0 - eps * eta * eta / 4.0);
  if (val <= 0.0) throw Error(Errc::InadmissibleEta, "eta is not admissible for this space form");
  return std::sqrt(val);
}

double curve_zeta(const DiscreteCurve& curve) {
  return zeta_from_eta(curve.form, curve_eta(curve));
}

double arclength_deviation(const DiscreteCurve& curve) {
  const int m = curve.edge_count();
  if (m < 1) return 0.0;
  std::vector<double> vals(m);
  double mean = 0.0;
  for (int e = 0; e < m; ++e) {
    vals[e] = edge_arclength_quantity(curve.form, curve.vertex(e), curve.vertex(e + 1));
    mean += vals[e];
  }
  mean /= m;
  double dev = 0.0;
  for (const double v : vals) dev = std::max(dev, std::abs(v - mean));
  return dev;
}

void validate_curve(const DiscreteCurve& curve, double tol) {
  const int n = curve.size();
  if (n < 2) throw Error(Errc::TooShort, "curve needs at least two vertices");
  for (int i = 0; i < n; ++i) {
    if (!on_model(curve.form, curve.vertices[i], std::max(tol, 1e-7))) {
      throw Error(Errc::IrregularCurve, "vertex " + std::to_string(i) + " is not on the model");
    }
  }
  if (curve.form == SpaceForm::Hyperbolic) {
    const int sheet = hyperbolic_sheet(curve.vertices[0]);
    for (int i = 1; i < n; ++i) {
      if (hyperbolic_sheet(curve.vertices[i]) != sheet) {
        throw Error(Errc::IrregularCurve,
                    "vertex " + std::to_string(i) + " lies on the other sheet");
      }
    }
  }
  const double eta = curve_eta(curve);
  for (int e = 0; e < curve.edge_count(); ++e) {
    const double sq = edge_arclength_quantity(curve.form, curve.vertex(e), curve.vertex(e + 1));
    const double rounding = 1e-12 * curve.vertex(e).norm() * curve.vertex(e + 1).norm();
    if (std::abs(sq - eta * eta) > std::max(tol, 1e-8) * (1.0 + eta * eta) + rounding) {
      throw Error(Errc::IrregularCurve, "edge " + std::to_string(e) + " breaks constant arc-length");
    }
    if (curve.form == SpaceForm::Spherical) {
      // neighbors must not be antipodal
      if (mat_inner(curve.vertex(e), curve.vertex(e + 1)).real() < -1.0 + 1e-9) {
        throw Error(Errc::IrregularCurve, "edge " + std::to_string(e) + " joins antipodal points");
      }
    }
  }
  // three consecutive points pairwise distinct
  const int last = curve.periodic ? n : n - 2;
  for (int i = 0; i < last; ++i) {
    if (i + 2 >= n && !curve.periodic) break;
    const Mat2C& a = curve.vertex(i);
    const Mat2C& c = curve.vertex(i + 2);
    if ((c - a).norm() <= tol * (1.0 + a.norm())) {
      throw Error(Errc::IrregularCurve,
                  "vertices " + std::to_string(i) + " and " + std::to_string(i + 2) + " coincide");
    }
  }
}

std::vector<Mat2C> transport(const DiscreteCurve& curve) {
  std::vector<Mat2C> u(curve.edge_count());
  for (int e = 0; e < curve.edge_count(); ++e) {
    u[e] = edge_transport(curve.form, curve.vertex(e), curve.vertex(e + 1));
  }
  return u;
}

namespace {

// Trace-free transports around vertex i; false at open-curve boundaries.
bool stencil_transports(const DiscreteCurve& curve, const std::vector<Mat2C>& u, int i,
                        Mat2C& um, Mat2C& up) {
  if (!curve.is_interior(i)) return false;
  const int n = curve.size();
  const int em = curve.periodic ? (i - 1 + n) % n : i - 1;
  const int ep = curve.periodic ? i % n : i;
  um = trace_free(u[em]);
  up = trace_free(u[ep]);
  return true;
}

}  // namespace

std::vector<Mat2C> vertex_tangent(const DiscreteCurve& curve) {
  const auto u = transport(curve);
  std::vector<Mat2C> t(curve.size());
  for (int i = 0; i < curve.size(); ++i) {
    Mat2C um, up;
    if (!stencil_transports(curve, u, i, um, up)) continue;
    const Mat2C sum = um.inverse() + up.inverse();
    if (std::abs(sum.det()) <= kTol * (1.0 + sum.norm() * sum.norm())) {
      throw Error(Errc::CuspVertex, "cusp at vertex " + std::to_string(i));
    }
    t[i] = 2.0 * sum.inverse();
  }
  return t;
}

std::vector<Mat2C> vertex_h(const DiscreteCurve& curve) {
  const auto u = transport(curve);
  std::vector<Mat2C> h(curve.size());
  for (int i = 0; i < curve.size(); ++i) {
    Mat2C um, up;
    if (!stencil_transports(curve, u, i, um, up)) continue;
    const Mat2C sum = um + up;
    if (std::abs(sum.det()) <= kTol * (1.0 + sum.norm() * sum.norm())) {
      throw Error(Errc::CuspVertex, "cusp at vertex " + std::to_string(i));
    }
    h[i] = 2.0 * up * sum.inverse();
  }
  return h;
}

std::vector<double> curvature(const DiscreteCurve& curve) {
  const auto h = vertex_h(curve);
  const double scale = curve.form == SpaceForm::Euclidean ? curve_eta(curve) : curve_zeta(curve);
  std::vector<double> kappa(curve.size(), std::numeric_limits<double>::quiet_NaN());
  for (int i = 0; i < curve.size(); ++i) {
    if (!curve.is_interior(i)) continue;
    const Mat2C dir = curve.form == SpaceForm::Euclidean ? mat_k() : curve.vertices[i];
    // H = 1 + (scale/2) kappa dir with <dir,dir> = 1
    kappa[i] = 2.0 * mat_inner(trace_free(h[i]), dir).real() / scale;
  }
  return kappa;
}

LCVector vertex_lift(const DiscreteCurve& curve, int i) {
  return point_to_lightcone(curve.form, curve.vertex(i), 1e-6);
}

LCVector tangent_lift(const DiscreteCurve& curve, int edge) {
  const auto u = transport(curve);
  const Mat2C& ue = u[curve.periodic ? curve.wrap(edge) : edge];
  if (curve.form == SpaceForm::Euclidean) {
    const double eta = curve_eta(curve);
    const Mat2C n = mat_k() * ue / eta;
    const double d = mat_inner(n, curve.vertex(edge)).real();
    return geodesic_to_lightcone(curve.form, n, d, 1e-6);
  }
  const double zeta = curve_zeta(curve);
  const Mat2C n = trace_free(ue) / zeta;
  return geodesic_to_lightcone(curve.form, n, 0.0, 1e-6);
}

LCVector double_curvature_circle(const DiscreteCurve& curve, int i) {
  if (!curve.is_interior(i)) {
    throw Error(Errc::BoundaryVertex, "vertex " + std::to_string(i) + " has no stencil");
  }
  const LCVector fm = vertex_lift(curve, i - 1);
  const LCVector fp = vertex_lift(curve, i + 1);
  const LCVector tm = tangent_lift(curve, i - 1);
  return tm - (lc_inner(tm, fp) / lc_inner(fm, fp)) * fm;
}

LCVector edge_normal(const DiscreteCurve& curve, int edge) {
  const double eta = curve_eta(curve);
  return (1.0 / eta) * (vertex_lift(curve, edge) - vertex_lift(curve, edge + 1)) + lc_p();
}

double FrenetResidual::max() const {
  return std::max(std::max(eq1, eq2), std::max(eq1_matrix, eq2_matrix));
}

std::vector<FrenetResidual> frenet_residuals(const DiscreteCurve& curve) {
  const double eta = curve_eta(curve);
  const double zeta = curve_zeta(curve);
  const double eps = space_form_eps(curve.form);
  const LCVector q = lc_q(curve.form);
  const double qq = lc_inner(q, q);
  const auto kappa = curvature(curve);
  const auto u = transport(curve);

  std::vector<FrenetResidual> out(curve.size());
  for (const int i : curve.interior_indices()) {
    const LCVector f0 = vertex_lift(curve, i);
    const LCVector tm = tangent_lift(curve, i - 1);
    const LCVector tp = tangent_lift(curve, i);
    const LCVector nm = edge_normal(curve, i - 1);
    const LCVector np = edge_normal(curve, i);
    const double k0 = kappa[i];

    const LCVector lhs1 = (1.0 / eta) * (tm - tp);
    const LCVector rhs1 = (-k0 / 2.0) * (nm + np - 2.0 * lc_p());
    out[i].eq1 = (lhs1 - rhs1).norm();

    const LCVector lhs2 = (1.0 / eta) * (nm - np - eta * (qq * f0 + q));
    const LCVector rhs2 = (k0 / 2.0) * (1.0 + qq * eta * eta / 4.0) * (tm + tp - 2.0 * lc_p());
    out[i].eq2 = (lhs2 - rhs2).norm();

    // matrix model forms
    const int n = curve.size();
    const Mat2C& um_full = u[curve.periodic ? (i - 1 + n) % n : i - 1];
    const Mat2C& up_full = u[curve.periodic ? i % n : i];
    const Mat2C um = trace_free(um_full);
    const Mat2C up = trace_free(up_full);
    Mat2C nhat_m, nhat_p;
    if (curve.form == SpaceForm::Euclidean) {
      nhat_m = mat_k() * um_full / eta;
      nhat_p = mat_k() * up_full / eta;
    } else {
      nhat_m = (curve.vertex(i - 1) - curve.vertex(i)) / eta;
      nhat_p = (curve.vertex(i) - curve.vertex(i + 1)) / eta;
    }
    const Mat2C lhs1m = (um - up) / (eta * zeta);
    const Mat2C rhs1m = (-k0 / 2.0) * (nhat_m + nhat_p);
    out[i].eq1_matrix = (lhs1m - rhs1m).norm();

    const Mat2C lhs2m = (eta / zeta) * (nhat_m - nhat_p + eps * eta * curve.vertex(i));
    const Mat2C rhs2m = (k0 / 2.0) * (um + up);
    out[i].eq2_matrix = (lhs2m - rhs2m).norm();
  }
  return out;
}

DiscreteCurve apply_isometry(const DiscreteCurve& curve, const Isometry& iso) {
  DiscreteCurve out = curve;
  for (auto& f : out.vertices) f = iso.apply(f);
  return out;
}

double curve_distance(const DiscreteCurve& a, const DiscreteCurve& b) {
  if (a.size() != b.size()) {
    throw Error(Errc::TooShort, "curves have different vertex counts");
  }
  double dev = 0.0;
  for (int i = 0; i < a.size(); ++i) {
    dev = std::max(dev, (a.vertices[i] - b.vertices[i]).norm());
  }
  return dev;
}

}  // namespace sfc
