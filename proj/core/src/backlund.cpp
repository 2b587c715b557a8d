#include "sfcurve/backlund.hpp"

#include <algorithm>
#include <cmath>

#include "sfcurve/family.hpp"
#include "sfcurve/numeric.hpp"

namespace sfc {

namespace {

Mat2C point_quotient(SpaceForm form, const Mat2C& base, const Mat2C& moved) {
  if (form == SpaceForm::Euclidean) return moved - base;
  return -1.0 * (moved * base);
}

double quad_scale(const std::array<Mat2C, 4>& quad) {
  double s = 1.0;
  for (const auto& m : quad) s = std::max(s, m.norm());
  return s;
}

}  // namespace

Mat2C sequence_v(const BacklundSequence& seq, int level, int k) {
  return point_quotient(seq.form, seq.curves[level].vertices[k],
                        seq.curves[level + 1].vertices[k]);
}

ButterflyCheck butterfly_check(const std::array<Mat2C, 4>& quad, SpaceForm form, double tol) {
  const auto& [a, b, c, d] = quad;
  const double scale = quad_scale(quad);
  // the identity transformation collapses both diagonals; valid by
  // convention
  if ((c - a).norm() <= tol * scale && (d - b).norm() <= tol * scale) {
    return {true, 0.0};
  }
  if ((c - a).norm() <= tol * scale || (d - b).norm() <= tol * scale) {
    throw Error(Errc::DegenerateQuad, "exactly one quad diagonal vanishes");
  }
  Mat2C res;
  if (form == SpaceForm::Euclidean) {
    res = (c - b) * (b - a) - (c - d) * (d - a);
  } else {
    res = c * b + b * a - c * d - d * a;
  }
  ButterflyCheck out;
  out.residual = res.norm() / (1.0 + scale * scale);
  out.butterfly = out.residual <= std::max(tol, 1e-10);
  return out;
}

Mat2C butterfly_complete(const Mat2C& a, const Mat2C& b, const Mat2C& d, SpaceForm form) {
  const Mat2C bd = b - d;
  const double scale = 1.0 + std::max(b.norm(), d.norm());
  if (std::abs(bd.det()) <= 1e-14 * scale * scale) {
    if (bd.norm() <= 1e-9 * scale) {
      throw Error(Errc::CoincidentBD, "butterfly needs b distinct from d");
    }
    throw Error(Errc::DegenerateQuad, "b - d is singular");
  }
  if (form == SpaceForm::Euclidean) {
    return (b * b - d * d - bd * a) * bd.inverse();
  }
  return -1.0 * (bd * a * bd.inverse());
}

std::array<Complex, 2> quad_cross_ratio(const std::array<Mat2C, 4>& quad) {
  const auto& [a, b, c, d] = quad;
  const Mat2C cr = (a - b) * (b - c).inverse() * (c - d) * (d - a).inverse();
  return {0.5 * cr.trace(), cr.det()};
}

DiscreteCurve backlund_transform(const DiscreteCurve& curve, const Mat2C& initial) {
  if (!on_model(curve.form, initial, 1e-6)) {
    throw Error(Errc::BadInitialPoint, "initial point is not on the model");
  }
  const double eta = curve_eta(curve);
  const bool identity = (initial - curve.vertices[0]).norm() <= 1e-13 * (1.0 + eta);
  if (!identity) {
    if (curve.form == SpaceForm::Spherical &&
        mat_inner(initial, curve.vertices[0]).real() < -1.0 + 1e-9) {
      throw Error(Errc::BadInitialPoint, "initial point is antipodal to f(t0)");
    }
    if (curve.form == SpaceForm::Hyperbolic &&
        hyperbolic_sheet(initial) != hyperbolic_sheet(curve.vertices[0])) {
      throw Error(Errc::BadInitialPoint, "initial point lies on the other sheet");
    }
    const double dist = model_distance(curve.form, curve.vertices[0], initial);
    const double arc = model_distance(curve.form, curve.vertices[0], curve.vertices[1]);
    if (std::abs(dist - arc) <= 1e-9 * (1.0 + arc)) {
      throw Error(Errc::BadInitialPoint,
                  "initial point at arc-length distance does not determine a transformation");
    }
  }

  DiscreteCurve out = curve;
  out.vertices.assign(curve.size(), Mat2C{});
  out.vertices[0] = initial;
  for (int k = 0; k + 1 < curve.size(); ++k) {
    out.vertices[k + 1] = identity
        ? curve.vertices[k + 1]
        : butterfly_complete(curve.vertices[k], curve.vertices[k + 1], out.vertices[k],
                             curve.form);
    if (curve.form != SpaceForm::Euclidean) {
      renormalize_model_point(curve.form, out.vertices[k + 1]);
    }
  }
  if (curve.periodic && !identity) {
    // keep the closed tag only if the transformation closes up
    const std::array<Mat2C, 4> wrap = {curve.vertices[curve.size() - 1], curve.vertices[0],
                                       out.vertices[0], out.vertices[curve.size() - 1]};
    out.periodic = butterfly_check(wrap, curve.form, 1e-8).butterfly;
  }
  return out;
}

double skew_net_check(const BacklundSequence& seq) {
  double worst = 0.0;
  const Complex probe(0.37);
  for (int i = 0; i < seq.steps(); ++i) {
    const auto u_lo = transport(seq.curves[i]);
    const auto u_hi = transport(seq.curves[i + 1]);
    for (int k = 0; k + 1 < seq.length(); ++k) {
      const Mat2C v0 = sequence_v(seq, i, k);
      const Mat2C v1 = sequence_v(seq, i, k + 1);
      const double scale = 1.0 + std::max(u_lo[k].norm(), v0.norm());
      const Mat2C additive = u_lo[k] + v1 - v0 - u_hi[k];
      const Mat2C multiplicative = v1 * u_lo[k] - u_hi[k] * v0;
      const Mat2C comp = (mat_one() + probe * v1) * (mat_one() + probe * u_lo[k]) -
                         (mat_one() + probe * u_hi[k]) * (mat_one() + probe * v0);
      worst = std::max(worst, additive.norm() / scale);
      worst = std::max(worst, multiplicative.norm() / (scale * scale));
      worst = std::max(worst, comp.norm() / (scale * scale));
    }
  }
  return worst;
}

std::vector<QuatPoly> build_polynomial(const BacklundSequence& seq, const Mat2C& e) {
  std::vector<QuatPoly> out(seq.length());
  for (int k = 0; k < seq.length(); ++k) {
    QuatPoly p({e});
    for (int i = seq.steps() - 1; i >= 0; --i) {
      p = poly_mul(p, linear_factor(sequence_v(seq, i, k)));
    }
    p.coeffs.resize(seq.steps() + 1);
    out[k] = std::move(p);
  }
  return out;
}

Mat2C recover_isometry(const BacklundSequence& seq) {
  const auto u = transport(seq.first());
  const auto ut = transport(seq.last());
  const bool split = seq.form == SpaceForm::Hyperbolic;
  const std::array<Mat2C, 4> basis = split
      ? std::array<Mat2C, 4>{mat_one(), mat_sigma1(), mat_sigma2(), mat_k()}
      : std::array<Mat2C, 4>{mat_one(), mat_i(), mat_j(), mat_k()};
  // u~ = E^{-1} u E reads u E - E u~ = 0, linear in E
  std::vector<double> rows;
  for (size_t e = 0; e < u.size(); ++e) {
    std::array<Mat2C, 4> cols;
    for (int k = 0; k < 4; ++k) cols[k] = u[e] * basis[k] - basis[k] * ut[e];
    for (int part = 0; part < 8; ++part) {
      for (int k = 0; k < 4; ++k) {
        const Complex entries[4] = {cols[k].a, cols[k].b, cols[k].c, cols[k].d};
        const Complex z = entries[part / 2];
        rows.push_back(part % 2 == 0 ? z.real() : z.imag());
      }
    }
  }
  const auto x = least_squares_null_vector(rows, static_cast<int>(u.size()) * 8, 4);
  Mat2C e{};
  for (int k = 0; k < 4; ++k) e += x[k] * basis[k];
  const double dt = std::abs(e.det());
  if (dt < 1e-12) {
    throw Error(Errc::ShapeNotPreserved, "no invertible isometry datum fits the transports");
  }
  return e / std::sqrt(dt);
}

double polynomial_evolution_residual(const QuatPoly& p0, const QuatPoly& p1, const Mat2C& u01) {
  const int n = std::max(p0.degree_bound(), p1.degree_bound());
  const double scale = 1.0 + std::max(p0.max_coeff_norm(), p1.max_coeff_norm()) *
                                 (1.0 + u01.norm());
  double worst = (p1.coeff(0) - p0.coeff(0)).norm();
  for (int i = 1; i <= n; ++i) {
    const Mat2C res = p1.coeff(i) + p1.coeff(i - 1) * u01 - p0.coeff(i) - u01 * p0.coeff(i - 1);
    worst = std::max(worst, res.norm());
  }
  worst = std::max(worst, (p1.coeff(n) * u01 - u01 * p0.coeff(n)).norm());
  return worst / scale;
}

std::vector<double> theta_invariants(const QuatPoly& p) {
  const auto det = poly_det(p.trace_free_part());
  std::vector<double> out(det.size());
  for (size_t j = 0; j < det.size(); ++j) out[j] = det[j].real();
  return out;
}

namespace {

// Evaluation of det of the trace-free part at lambda = i/eta.
double det_tf_at_i_over_eta(const QuatPoly& p, double eta) {
  const auto theta = theta_invariants(p);
  double val = 0.0;
  double power = 1.0;  // (i/eta)^j for even j: (-1)^(j/2) eta^-j
  for (size_t j = 0; j < theta.size(); j += 2) {
    val += theta[j] * power;
    power *= -1.0 / (eta * eta);
  }
  return val;
}

}  // namespace

ABBetaResult extract_ab_beta(const std::vector<QuatPoly>& p, double eta, double tol) {
  if (p.empty()) throw Error(Errc::TooShort, "no polynomials given");
  ABBetaResult res;

  // reduce while the trace-free part vanishes at i/eta
  std::vector<QuatPoly> tf(p.size());
  for (size_t k = 0; k < p.size(); ++k) tf[k] = p[k].trace_free_part();
  const std::vector<Complex> central = {Complex(1.0), Complex(0.0), Complex(eta * eta)};
  while (true) {
    double worst = 0.0;
    double scale = 0.0;
    for (const auto& q : tf) {
      worst = std::max(worst, poly_eval(q, Complex(0.0, 1.0 / eta)).norm());
      scale = std::max(scale, q.max_coeff_norm());
    }
    if (worst > std::sqrt(tol) * (1.0 + scale) || scale == 0.0) break;
    for (auto& q : tf) {
      auto div = poly_divide_scalar(q, central);
      if (div.remainder.max_coeff_norm() > std::sqrt(tol) * (1.0 + scale)) {
        throw Error(Errc::ReduciblePolynomial, "trace-free part vanishes at i/eta but is not "
                                               "divisible by 1 + lambda^2 eta^2");
      }
      q = std::move(div.quotient);
    }
    ++res.reduction_depth;
  }
  if (res.reduction_depth > 0) res.reduced = tf;

  const int n = static_cast<int>(tf[0].coeffs.size()) - 1;
  res.a.resize(p.size());
  res.b.resize(p.size());
  for (size_t k = 0; k < p.size(); ++k) {
    Mat2C a{}, b{};
    double power = 1.0;
    for (int j = n; j >= 0; j -= 2) {
      a += power * tf[k].coeff(j);
      if (j >= 1) b += power * tf[k].coeff(j - 1);
      power *= -eta * eta;
    }
    res.a[k] = a;
    res.b[k] = b;
  }

  // beta^2 from the invariant; the sign is fixed against A = beta T by the
  // caller through a curve, see certificate_from_sequence.
  const double beta_sq = -std::pow(-eta * eta, n - 1) * det_tf_at_i_over_eta(tf[0], eta);
  res.beta = beta_sq > 0.0 ? std::sqrt(beta_sq) : 0.0;
  return res;
}

InvarianceCertificate certificate_from_sequence(const BacklundSequence& seq,
                                                const Mat2C* e_known) {
  InvarianceCertificate cert;
  cert.n = seq.steps();
  cert.e = e_known ? *e_known : recover_isometry(seq);
  cert.p = build_polynomial(seq, cert.e);
  cert.r.assign(cert.n + 1, 0.0);
  {
    const auto tr = cert.p[0].half_trace();
    for (size_t j = 0; j < tr.size() && j < cert.r.size(); ++j) cert.r[j] = tr[j].real();
  }
  if (seq.form == SpaceForm::Euclidean) {
    cert.theta = theta_invariants(cert.p[0]);
    const double eta = curve_eta(seq.first());
    auto ab = extract_ab_beta(cert.p, eta);
    // fix the sign of beta by A = beta T at the first usable vertex
    const auto t = vertex_tangent(seq.first());
    for (const int i : seq.first().interior_indices()) {
      const double tt = mat_inner(t[i], t[i]).real();
      if (std::abs(tt) < 1e-12) continue;
      const double beta_signed = mat_inner(ab.a[i], t[i]).real() / tt;
      if (std::abs(beta_signed) > 1e-12) {
        if (beta_signed < 0.0) {
          ab.beta = -ab.beta;
        }
        break;
      }
    }
    cert.beta = ab.beta;
    cert.a = std::move(ab.a);
    cert.b = std::move(ab.b);
  }
  return cert;
}

CertificateReport verify_certificate(const DiscreteCurve& curve,
                                     const InvarianceCertificate& cert, double tol) {
  CertificateReport rep;
  const double eta = curve_eta(curve);
  const int n = cert.n;
  const double check_tol = std::sqrt(tol);

  // 1. parity of the coefficient spans (Euclidean hierarchy)
  if (curve.form == SpaceForm::Euclidean) {
    for (size_t k = 0; k < cert.p.size(); ++k) {
      const auto& poly = cert.p[k];
      const double scale = 1.0 + poly.max_coeff_norm();
      for (int j = 0; j <= poly.degree_bound(); ++j) {
        const Mat2C& c = poly.coeff(j);
        if (c.norm() <= tol * scale) continue;
        double defect;
        if (!is_quaternion(c, check_tol)) {
          defect = c.norm();
        } else {
          const auto q = quaternion_coords(c, 1.0);
          defect = (n - j) % 2 == 0 ? std::hypot(q[0], q[3]) : std::hypot(q[1], q[2]);
        }
        rep.parity_residual = std::max(rep.parity_residual, defect / scale);
        if (rep.parity_residual > check_tol) {
          rep.failure = "parity";
          rep.failed_vertex = static_cast<int>(k);
          return rep;
        }
      }
    }
    if (cert.p[0].coeff(0).norm() <= tol) {
      rep.failure = "parity";  // C^0 must not vanish
      rep.failed_vertex = 0;
      return rep;
    }
  }

  // 2. evolution equation along every edge
  {
    const auto u = transport(curve);
    for (int e = 0; e < curve.edge_count(); ++e) {
      const int k0 = e;
      const int k1 = curve.wrap(e + 1);
      rep.evolution_residual = std::max(
          rep.evolution_residual,
          polynomial_evolution_residual(cert.p[k0], cert.p[k1], u[e]));
      if (rep.evolution_residual > check_tol) {
        rep.failure = "evolution";
        rep.failed_vertex = e;
        return rep;
      }
    }
  }

  // 3. determinant root scan (Euclidean)
  if (curve.form == SpaceForm::Euclidean) {
    rep.roots_imaginary = poly_det_roots_imaginary(cert.p[0], tol);
    const auto det = poly_det(cert.p[0]);
    const auto roots = polynomial_roots(det);
    rep.root_gap_to_eta = std::numeric_limits<double>::infinity();
    for (const auto& root : roots) {
      rep.root_gap_to_eta = std::min(rep.root_gap_to_eta,
                                     std::abs(std::abs(root) - 1.0 / eta));
    }
    if (!rep.roots_imaginary || rep.root_gap_to_eta < check_tol) {
      rep.failure = "roots";
      return rep;
    }
  } else {
    rep.roots_imaginary = true;
    rep.root_gap_to_eta = std::numeric_limits<double>::infinity();
  }

  // 4. regularity of the trace-free part
  rep.regularity_norm = std::numeric_limits<double>::infinity();
  for (const auto& poly : cert.p) {
    rep.regularity_norm = std::min(rep.regularity_norm,
                                   poly.trace_free_part().max_coeff_norm());
  }
  if (rep.regularity_norm <= 10.0 * tol) {
    rep.failure = "regularity";
    return rep;
  }

  // invariant drifts, relative to the coefficient scale of the reference
  const auto det0 = poly_det(cert.p[0]);
  double trace_scale = 1.0, det_scale = 1.0, theta_scale = 1.0;
  for (const double rj : cert.r) trace_scale = std::max(trace_scale, std::abs(rj));
  for (const auto& dj : det0) det_scale = std::max(det_scale, std::abs(dj));
  for (const double tj : cert.theta) theta_scale = std::max(theta_scale, std::abs(tj));
  for (const auto& poly : cert.p) {
    const auto tr = poly.half_trace();
    for (size_t j = 0; j < tr.size(); ++j) {
      const double ref = j < cert.r.size() ? cert.r[j] : 0.0;
      rep.trace_drift = std::max(rep.trace_drift, std::abs(tr[j].real() - ref) / trace_scale);
    }
    const auto det = poly_det(poly);
    for (size_t j = 0; j < det.size(); ++j) {
      const Complex ref = j < det0.size() ? det0[j] : Complex{};
      rep.det_drift = std::max(rep.det_drift, std::abs(det[j] - ref) / det_scale);
    }
    if (curve.form == SpaceForm::Euclidean) {
      const auto theta = theta_invariants(poly);
      for (size_t j = 0; j < theta.size(); ++j) {
        const double ref = j < cert.theta.size() ? cert.theta[j] : 0.0;
        rep.theta_drift = std::max(rep.theta_drift, std::abs(theta[j] - ref) / theta_scale);
        if (j % 2 == 1) rep.odd_theta = std::max(rep.odd_theta, std::abs(theta[j]) / theta_scale);
      }
    }
  }
  if (curve.form == SpaceForm::Euclidean) {
    const double val = det_tf_at_i_over_eta(cert.p[0], eta);
    rep.beta_identity = std::abs(cert.beta * cert.beta + std::pow(-eta * eta, n - 1) * val);
  }

  rep.valid = true;
  return rep;
}

InvarianceCertificate promote_certificate(const InvarianceCertificate& cert, double eta) {
  InvarianceCertificate out = cert;
  out.n = cert.n + 2;
  for (auto& poly : out.p) {
    poly.coeffs.resize(out.n + 1);
  }
  out.r.resize(out.n + 1, 0.0);
  if (!cert.a.empty()) {
    for (size_t k = 0; k < out.a.size(); ++k) {
      out.a[k] = -eta * eta * cert.a[k];
      out.b[k] = -eta * eta * cert.b[k];
    }
    out.beta = -eta * eta * cert.beta;
  }
  return out;
}

bool certificate_is_circle_case(const InvarianceCertificate& cert, double tol) {
  if (cert.n != 3) return false;
  const double scale = 1.0 + cert.e.norm();
  if (trace_free(cert.e).norm() > std::sqrt(tol) * scale) return false;
  for (const auto& poly : cert.p) {
    const double cscale = 1.0 + poly.max_coeff_norm();
    if (poly.coeff(1).norm() > std::sqrt(tol) * cscale) return false;
  }
  return true;
}

BacklundSequence synthesize_invariance(const DiscreteCurve& curve,
                                       const std::vector<QuatPoly>& p, double tol) {
  if (curve.form != SpaceForm::Euclidean) {
    throw Error(Errc::ConditionViolated,
                "synthesis works on Euclidean curves; transfer other space forms through the "
                "associated family");
  }
  if (static_cast<int>(p.size()) != curve.size()) {
    throw Error(Errc::TooShort, "one polynomial per vertex required");
  }
  const int n = p[0].degree_bound();
  const double check_tol = std::sqrt(tol);

  // condition 1: parity spans and C^0 != 0
  for (size_t k = 0; k < p.size(); ++k) {
    const double scale = 1.0 + p[k].max_coeff_norm();
    for (int j = 0; j <= p[k].degree_bound(); ++j) {
      const Mat2C& c = p[k].coeff(j);
      if (c.norm() <= tol * scale) continue;
      const bool ok = (n - j) % 2 == 0 ? in_span_ij(c, check_tol) : in_span_1k(c, check_tol);
      if (!ok) {
        throw Error(Errc::ConditionViolated, "condition 1: coefficient parity violated");
      }
    }
  }
  if (p[0].coeff(0).norm() <= tol) {
    throw Error(Errc::ConditionViolated, "condition 1: C^0 vanishes");
  }

  // condition 2: evolution along the curve
  {
    const auto u = transport(curve);
    for (int e = 0; e < curve.edge_count(); ++e) {
      if (polynomial_evolution_residual(p[e], p[curve.wrap(e + 1)], u[e]) > check_tol) {
        throw Error(Errc::ConditionViolated, "condition 2: evolution equation fails");
      }
    }
  }

  // condition 3: imaginary determinant roots away from i/eta
  const double eta = curve_eta(curve);
  if (!poly_det_roots_imaginary(p[0], tol)) {
    throw Error(Errc::ConditionViolated, "condition 3: non-imaginary determinant root");
  }
  for (const auto& root : polynomial_roots(poly_det(p[0]))) {
    if (std::abs(std::abs(root) - 1.0 / eta) < 1e-6) {
      throw Error(Errc::ConditionViolated, "condition 3: determinant root at i/eta");
    }
  }

  // Factor the polynomial at every vertex. Propagating the transformed
  // points through butterfly completion instead would amplify rounding
  // exponentially along the curve; per-vertex factorization keeps each
  // vertex at machine precision. Continuity of the factor branches is
  // maintained by refining from the neighboring vertex.
  const Mat2C e = p[0].coeff(0);
  const Mat2C einv = e.inverse();
  auto normalized = [&](int k) {
    QuatPoly q;
    q.coeffs.reserve(p[k].coeffs.size());
    for (const auto& c : p[k].coeffs) q.coeffs.push_back(einv * c);
    return q;
  };

  std::vector<std::vector<Mat2C>> vs(curve.size());
  vs[0] = poly_factor_special(normalized(0), n, tol);
  // det v is invariant along the curve, so the extraction order of the
  // factor branches can be pinned by the root magnitudes of vertex 0
  std::vector<double> magnitudes(n, 0.0);
  for (int i = 0; i < n; ++i) {
    const double dv = vs[0][i].det().real();
    magnitudes[i] = dv > tol ? 1.0 / std::sqrt(dv) : 0.0;
  }
  for (int k = 1; k < curve.size(); ++k) {
    QuatPoly cur = normalized(k);
    vs[k].resize(n);
    for (int i = 0; i < n; ++i) {
      Mat2C v;
      if (magnitudes[i] > 0.0) {
        v = special_right_factor(cur, magnitudes[i], tol);
        if (approx_zero(v, tol)) {
          // degenerate central remainder: resolve the branch by
          // continuity from the neighboring vertex
          v = refine_special_factor(cur, vs[k - 1][i], tol);
        }
      }
      const double scale = 1.0 + cur.max_coeff_norm();
      if (poly_divide_right(cur, v).remainder.norm() > 1e-8 * scale) {
        throw Error(Errc::FactorizationFailed,
                    "factor branch lost at vertex " + std::to_string(k));
      }
      // project exactly onto span{i,j}
      const auto q = quaternion_coords(v, 1.0);
      v = quaternion_from_coords(0.0, q[1], q[2], 0.0);
      vs[k][i] = v;
      cur = poly_divide_right(cur, v).quotient;
    }
  }

  BacklundSequence seq;
  seq.form = curve.form;
  seq.curves.reserve(n + 1);
  seq.curves.push_back(curve);
  for (int i = 0; i < n; ++i) {
    DiscreteCurve level = curve;
    for (int k = 0; k < curve.size(); ++k) {
      level.vertices[k] = seq.curves.back().vertices[k] + vs[k][i];
    }
    seq.curves.push_back(std::move(level));
  }
  return seq;
}

BacklundSequence family_on_sequence(const BacklundSequence& seq, Complex lambda, double tol) {
  const double eta = curve_eta(seq.first());
  const SpaceForm target = family_target(seq.form, lambda, eta);

  // canonicalize the grid on the first vertex of the base curve
  const Isometry move = isometry_to_canonical(seq.form, seq.first().vertices[0]);
  std::vector<DiscreteCurve> grid;
  grid.reserve(seq.curves.size());
  for (const auto& c : seq.curves) grid.push_back(apply_isometry(c, move));

  const int levels = seq.steps() + 1;
  const int len = seq.length();

  // admissibility of lambda against every v transport; an identity
  // transformation (scalar v) is allowed to annihilate 1 - lambda v
  for (int i = 0; i + 1 < levels; ++i) {
    for (int k = 0; k < len; ++k) {
      const Mat2C v = point_quotient(seq.form, grid[i].vertices[k], grid[i + 1].vertices[k]);
      if (std::abs((mat_one() + lambda * v).det()) <= tol) {
        throw Error(Errc::InadmissibleLambda, "1 + lambda v is singular");
      }
      const bool identity_step = trace_free(v).norm() <= tol * (1.0 + v.norm());
      if (!identity_step && std::abs((mat_one() - lambda * v).det()) <= tol) {
        throw Error(Errc::InadmissibleLambda, "1 - lambda v is singular");
      }
    }
  }

  // grid frames with unit determinant, built along the base curve and up
  // in transformation direction; path independence is the skew
  // parallelogram property
  std::vector<std::vector<Mat2C>> frames(levels, std::vector<Mat2C>(len));
  {
    const auto u0 = transport(grid[0]);
    frames[0][0] = mat_one();
    for (int k = 0; k + 1 < len; ++k) {
      const Mat2C factor = mat_one() + lambda * u0[k];
      frames[0][k + 1] = (factor / std::sqrt(factor.det())) * frames[0][k];
    }
    for (int i = 0; i + 1 < levels; ++i) {
      for (int k = 0; k < len; ++k) {
        const Mat2C v = point_quotient(seq.form, grid[i].vertices[k], grid[i + 1].vertices[k]);
        const Mat2C factor = mat_one() + lambda * v;
        frames[i + 1][k] = (factor / std::sqrt(factor.det())) * frames[i][k];
      }
    }
  }

  BacklundSequence out;
  out.form = target;
  out.curves.assign(levels, DiscreteCurve{});

  if (seq.form == SpaceForm::Euclidean) {
    for (int i = 0; i < levels; ++i) {
      out.curves[i].form = target;
      out.curves[i].periodic = grid[i].periodic;
      out.curves[i].vertices.resize(len);
      for (int k = 0; k < len; ++k) {
        Mat2C p = frames[i][k].adjugate() * mat_k() * frames[i][k];
        renormalize_model_point(target, p);
        out.curves[i].vertices[k] = p;
      }
    }
  } else {
    const Complex scale = seq.form == SpaceForm::Hyperbolic ? Complex(0.0, 1.0) : Complex(1.0);
    auto central = [](const Mat2C& x) {
      return (mat_one() + x).inverse() * (mat_one() - x);
    };
    // base curve level 0
    std::vector<Mat2C> base(len);
    base[0] = Mat2C{};
    const auto u0 = transport(grid[0]);
    for (int k = 0; k + 1 < len; ++k) {
      const Mat2C unew = scale * (frames[0][k].adjugate() * central(u0[k]) * frames[0][k]);
      base[k + 1] = base[k] + unew;
    }
    std::vector<std::vector<Mat2C>> pts(levels, std::vector<Mat2C>(len));
    pts[0] = base;
    for (int i = 0; i + 1 < levels; ++i) {
      for (int k = 0; k < len; ++k) {
        const Mat2C v = point_quotient(seq.form, grid[i].vertices[k], grid[i + 1].vertices[k]);
        const Mat2C vnew = scale * (frames[i][k].adjugate() * central(v) * frames[i][k]);
        pts[i + 1][k] = pts[i][k] + vnew;
      }
    }
    for (int i = 0; i < levels; ++i) {
      out.curves[i].form = target;
      out.curves[i].periodic = grid[i].periodic;
      out.curves[i].vertices.resize(len);
      for (int k = 0; k < len; ++k) {
        const auto q = quaternion_coords(pts[i][k], 1.0);
        out.curves[i].vertices[k] = plane_point(q[1], q[2]);
      }
    }
  }
  return out;
}

DiscreteCurve flow_step(const DiscreteCurve& curve, const std::vector<Mat2C>& seeds) {
  DiscreteCurve current = curve;
  for (const auto& seed : seeds) {
    current = backlund_transform(current, seed);
  }
  return current;
}

}  // namespace sfc
