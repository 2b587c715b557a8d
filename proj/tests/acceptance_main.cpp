// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Tolerances are fixed here, not configurable.

#include <cstdio>
#include <vector>

#include "helpers.hpp"
#include "sfcurve/document.hpp"
#include "sfcurve/elastic.hpp"
#include "sfcurve/family.hpp"
#include "sfcurve/svg.hpp"

using namespace sfc;
using namespace sfc::testing;

namespace {

int g_failed = 0;

void report(int criterion, bool pass, const char* text, double metric) {
  std::printf("%s criterion %2d: %s (worst %.3e)\n", pass ? "PASS" : "FAIL", criterion, text,
              metric);
  if (!pass) ++g_failed;
}

std::vector<DiscreteCurve> corpus(int per_form, int min_vertices, int max_vertices) {
  std::vector<DiscreteCurve> out;
  for (const auto form : all_forms()) {
    // hyperbolic coordinates grow exponentially with curve length, which
    // caps the vertex count compatible with 1e-9 scale measurements
    const int top = form == SpaceForm::Hyperbolic ? std::min(max_vertices, 40) : max_vertices;
    for (int rep = 0; rep < per_form; ++rep) {
      out.push_back(random_curve(form, uniform_int(min_vertices, top)));
    }
  }
  return out;
}

// 1. matrix-model curvature vs twice the light-cone circle curvature
void criterion_1(const std::vector<DiscreteCurve>& curves) {
  double worst = 0.0;
  for (const auto& c : curves) {
    const auto kappa = curvature(c);
    const LCVector q = lc_q(c.form);
    for (const int i : c.interior_indices()) {
      const double oracle = 2.0 * geodesic_curvature(double_curvature_circle(c, i), q);
      worst = std::max(worst, std::abs(kappa[i] - oracle));
    }
  }
  report(1, worst < 1e-9, "curvature oracle agreement across the two models", worst);
}

// 2. Frenet-type equations, light cone and matrix model
void criterion_2(const std::vector<DiscreteCurve>& curves) {
  double worst = 0.0;
  for (const auto& c : curves) {
    for (const int i : c.interior_indices()) {
      worst = std::max(worst, frenet_residuals(c)[i].max());
    }
  }
  report(2, worst < 1e-9, "Frenet residuals vanish on the corpus", worst);
}

// 3. fundamental theorem: curvature round trip and seed independence
void criterion_3() {
  double worst_rt = 0.0;
  double worst_iso = 0.0;
  for (const auto form : all_forms()) {
    for (int rep = 0; rep < 12; ++rep) {
      const int n = form == SpaceForm::Hyperbolic ? uniform_int(20, 40)
                                                  : (rep == 0 ? 200 : uniform_int(20, 60));
      const double eta = random_eta(form, n);
      std::vector<double> kappa(n - 2);
      for (auto& k : kappa) k = uniform(-1.9 / eta, 1.9 / eta);
      const DiscreteCurve c = integrate_curvature(form, eta, kappa);
      const auto got = curvature(c);
      for (size_t i = 0; i < kappa.size(); ++i) {
        worst_rt = std::max(worst_rt, std::abs(got[i + 1] - kappa[i]));
      }
      const DiscreteCurve moved = apply_isometry(c, random_isometry(form));
      const DiscreteCurve second =
          integrate_curvature(form, eta, kappa, std::make_pair(moved.vertices[0],
                                                               moved.vertices[1]));
      worst_iso = std::max(worst_iso,
                           fit_isometry(form, c.vertices, second.vertices).residual);
    }
  }
  report(3, worst_rt < 1e-9 && worst_iso < 1e-8,
         "fundamental-theorem round trip and uniqueness up to motion",
         std::max(worst_rt, worst_iso));
}

// 4. associated family: arc-length closed forms, curvature scale,
//    reversibility, square polygon
void criterion_4() {
  double worst_len = 0.0, worst_scale = 0.0, worst_rev = 0.0, worst_square = 0.0;
  for (int rep = 0; rep < 18; ++rep) {
    const SpaceForm form = all_forms()[rep % 3];
    const int n = uniform_int(20, 40);
    const DiscreteCurve c = random_curve(form, n);
    const double eta = curve_eta(c);
    Complex lambda(1.0);
    if (form == SpaceForm::Euclidean) {
      lambda = rep % 2 == 0 ? Complex(uniform(0.3, 1.5))
                            : Complex(0.0, uniform(0.05, std::min(0.25, 2.5 / n)) / eta);
    }
    const DiscreteCurve t = associated_transform(c, lambda);
    worst_len = std::max(worst_len,
                         std::abs(curve_zeta(t) - family_zeta(form, lambda, eta)));
    if (form != SpaceForm::Euclidean) {
      const double zeta = curve_zeta(c);
      worst_len = std::max(worst_len, std::abs(curve_eta(t) - eta * eta / (2.0 * zeta)));
    }
    const double scale = family_curvature_scale(form, lambda, eta);
    const auto ks = curvature(c);
    const auto kt = curvature(t);
    for (const int i : c.interior_indices()) {
      worst_scale = std::max(worst_scale, std::abs(kt[i] - scale * ks[i]));
    }
    worst_rev = std::max(worst_rev, family_roundtrip_check(c, lambda));
  }
  // the eta = 2 square has curvature 1 by the turning angle relation
  const DiscreteCurve square = integrate_curvature(SpaceForm::Euclidean, 2.0, {1.0, 1.0, 1.0});
  for (const int i : square.interior_indices()) {
    worst_square = std::max(worst_square, std::abs(curvature(square)[i] - 1.0));
  }
  const bool pass = worst_len < 1e-10 && worst_scale < 1e-9 && worst_rev < 1e-9 &&
                    worst_square < 1e-12;
  report(4, pass, "associated family arc-length, scaling, reversibility, square",
         std::max(std::max(worst_len, worst_scale), std::max(worst_rev, worst_square)));
}

// 5. Backlund sequences: butterfly and skew-net validity; Euler loop and
//    rotated circle reproduced, rendered, certified
void criterion_5() {
  double worst_net = 0.0;
  for (const auto form : all_forms()) {
    for (int rep = 0; rep < 6; ++rep) {
      const DiscreteCurve base = random_curve(form, uniform_int(20, 40));
      BacklundSequence seq;
      seq.form = form;
      seq.curves.push_back(base);
      for (int step = 0; step < 2; ++step) {
        const Mat2C seed = form == SpaceForm::Euclidean
                               ? seq.curves.back().vertices[0] +
                                     plane_point(uniform(-0.4, 0.4), uniform(0.1, 0.5))
                               : random_model_point(form);
        seq.curves.push_back(backlund_transform(seq.curves.back(), seed));
      }
      worst_net = std::max(worst_net, skew_net_check(seq));
      for (int level = 0; level < seq.steps(); ++level) {
        for (int k = 0; k + 1 < seq.length(); ++k) {
          const auto check = butterfly_check(
              {seq.curves[level].vertices[k], seq.curves[level].vertices[k + 1],
               seq.curves[level + 1].vertices[k + 1], seq.curves[level + 1].vertices[k]},
              form, 1e-10);
          worst_net = std::max(worst_net, check.residual);
        }
      }
    }
  }

  bool qualitative = true;
  // Euler loop: transform of a sampled line, elastic and 2-invariant
  const DiscreteCurve line =
      integrate_curvature(SpaceForm::Euclidean, 0.5, std::vector<double>(38, 0.0));
  const DiscreteCurve loop = backlund_transform(line, plane_point(0.05, 0.35));
  try {
    const auto cert = certify_euclidean(loop);
    qualitative = qualitative && cert.certificate.n == 2 &&
                  verify_certificate(loop, cert.certificate).valid;
    save_svg({line, loop}, RenderOptions{}, "eulerloop.svg");
  } catch (const Error&) {
    qualitative = false;
  }
  // rotated circle: on-circle seed reproduces the circle up to rotation;
  // an arbitrary seed is 3-invariant
  const DiscreteCurve circle =
      integrate_curvature(SpaceForm::Euclidean, 0.5, std::vector<double>(26, 0.9));
  const DiscreteCurve rotated = backlund_transform(circle, circle.vertices[7]);
  qualitative = qualitative &&
                fit_isometry(SpaceForm::Euclidean, circle.vertices, rotated.vertices).residual <
                    1e-8;
  const DiscreteCurve hat = backlund_transform(circle, plane_point(0.3, 0.6));
  try {
    const auto cert = certify_euclidean(hat);
    qualitative = qualitative && cert.certificate.n == 3 &&
                  verify_certificate(hat, cert.certificate).valid;
    save_svg({circle, rotated, hat}, RenderOptions{}, "blcircle.svg");
  } catch (const Error&) {
    qualitative = false;
  }
  report(5, worst_net < 1e-10 && qualitative,
         "Backlund validity, Euler loop and circle reproductions", worst_net);
}

struct TheoremData {
  std::vector<ElasticCertification> two_inv;    // Euclidean stage certificates
  std::vector<ElasticCertification> three_inv;
  std::vector<DiscreteCurve> two_curves;
  std::vector<DiscreteCurve> three_curves;
};

// 6. the invariant-curve characterization, both directions, all forms
void criterion_6(TheoremData& data) {
  double worst_fit = 0.0;
  bool pass = true;
  for (int rep = 0; rep < 51; ++rep) {
    const SpaceForm form = all_forms()[rep % 3];
    const int n = form == SpaceForm::Hyperbolic ? uniform_int(22, 30) : uniform_int(22, 40);
    try {
      const DiscreteCurve c = random_constrained_elastic(form, n, 0.0);
      const auto cert = certify_invariance(c);
      pass = pass && cert.certificate.n == 2;
      pass = pass && verify_certificate(cert.sequence.first(), cert.certificate).valid;
      pass = pass && skew_net_check(cert.sequence) < 1e-7;
      // converse: the synthesized curves satisfy the curvature equation
      // with delta near zero; measured on the Euclidean stage, through
      // which the non-Euclidean cases route
      const auto fit = curvature_equation_fit(cert.euclidean_stage.curves[1]);
      worst_fit = std::max(worst_fit, fit.max_residual);
      worst_fit = std::max(worst_fit, std::abs(fit.delta));
      if (form == SpaceForm::Euclidean) {
        data.two_inv.push_back(cert);
        data.two_curves.push_back(c);
      }
    } catch (const Error&) {
      pass = false;
    }
  }
  for (int rep = 0; rep < 51; ++rep) {
    const SpaceForm form = all_forms()[rep % 3];
    const int n = form == SpaceForm::Hyperbolic ? uniform_int(22, 30) : uniform_int(22, 40);
    try {
      const DiscreteCurve c = random_constrained_elastic(form, n, uniform(0.15, 0.5));
      const auto cert = certify_invariance(c);
      pass = pass && cert.certificate.n == 3;
      pass = pass && verify_certificate(cert.sequence.first(), cert.certificate).valid;
      pass = pass && skew_net_check(cert.sequence) < 1e-7;
      for (int level = 1; level < cert.euclidean_stage.steps(); ++level) {
        const auto fit = curvature_equation_fit(cert.euclidean_stage.curves[level]);
        worst_fit = std::max(worst_fit, fit.max_residual);
      }
      if (form == SpaceForm::Euclidean) {
        data.three_inv.push_back(cert);
        data.three_curves.push_back(c);
      }
    } catch (const Error&) {
      pass = false;
    }
  }
  report(6, pass && worst_fit < 1e-8,
         "elastic <-> 2-invariant and constrained elastic <-> 3-invariant", worst_fit);
}

// 7. conservation of the certificate invariants
void criterion_7(const TheoremData& data) {
  double worst = 0.0;
  bool pass = true;
  auto scan = [&](const std::vector<ElasticCertification>& certs,
                  const std::vector<DiscreteCurve>& curves) {
    for (size_t i = 0; i < certs.size(); ++i) {
      const auto rep = verify_certificate(curves[i], certs[i].certificate);
      pass = pass && rep.valid;
      worst = std::max(worst, rep.theta_drift);
      worst = std::max(worst, rep.trace_drift);
      worst = std::max(worst, rep.det_drift);
      worst = std::max(worst, rep.odd_theta);
      worst = std::max(worst, rep.beta_identity);
      // beta is one constant along the whole curve: A = beta T per vertex
      const auto t = vertex_tangent(curves[i]);
      const double beta = certs[i].certificate.beta;
      for (const int k : curves[i].interior_indices()) {
        const double tt = mat_inner(t[k], t[k]).real();
        if (std::abs(tt) < 1e-12) continue;
        const double beta_k = mat_inner(certs[i].certificate.a[k], t[k]).real() / tt;
        worst = std::max(worst, std::abs(beta_k - beta) / (1.0 + std::abs(beta)));
      }
      // r_j vanishes for j = n, n-2, ...
      const auto& cert = certs[i].certificate;
      for (int j = cert.n; j >= 0; j -= 2) {
        worst = std::max(worst, std::abs(cert.r[j]));
      }
      // det P factorizes over the transformation determinants
      const auto det = poly_det(cert.p[0]);
      std::vector<Complex> expected = {cert.e.det()};
      for (int level = 0; level < certs[i].sequence.steps(); ++level) {
        const Mat2C v = sequence_v(certs[i].sequence, level, 0);
        const std::vector<Complex> factor = {Complex(1.0), Complex(0.0), v.det()};
        std::vector<Complex> next(expected.size() + 2, Complex{});
        for (size_t a = 0; a < expected.size(); ++a) {
          for (size_t b = 0; b < factor.size(); ++b) next[a + b] += expected[a] * factor[b];
        }
        expected = std::move(next);
      }
      for (size_t j = 0; j < expected.size(); ++j) {
        const Complex have = j < det.size() ? det[j] : Complex{};
        worst = std::max(worst, std::abs(have - expected[j]) / (1.0 + std::abs(expected[j])));
      }
    }
  };
  scan(data.two_inv, data.two_curves);
  scan(data.three_inv, data.three_curves);

  // certificate promotion: every n-invariant curve is (n+2)-invariant
  if (!data.two_inv.empty()) {
    const auto& cert = data.two_inv.front();
    const auto promoted = promote_certificate(cert.certificate, curve_eta(data.two_curves[0]));
    pass = pass && promoted.n == 4 && verify_certificate(data.two_curves[0], promoted).valid;
  }
  report(7, pass && worst < 1e-9, "theta, trace, determinant, beta invariants conserved", worst);
}

// 8. Euclidean distance laws for 2- and 3-invariant curves
void criterion_8(const TheoremData& data) {
  double worst_line = 0.0, worst_circle = 0.0, worst_center = 0.0;
  for (size_t idx = 0; idx < data.two_inv.size(); ++idx) {
    const auto& cert = data.two_inv[idx];
    const DiscreteCurve& c = data.two_curves[idx];
    const double eta = curve_eta(c);
    const double beta = cert.certificate.beta;
    const Mat2C ke = mat_k() * cert.certificate.e;
    const auto kappa = curvature(c);
    const DiscreteCurve& mirror = cert.sequence.last();
    for (const int i : c.interior_indices()) {
      const double d =
          mat_inner(ke, c.vertices[i] - 0.5 * (c.vertices[i] + mirror.vertices[i])).real();
      worst_line = std::max(worst_line, std::abs(d - beta * eta / 4.0 * kappa[i]));
    }
  }
  for (size_t idx = 0; idx < data.three_inv.size(); ++idx) {
    const auto& cert = data.three_inv[idx];
    const DiscreteCurve& c = data.three_curves[idx];
    const double eta = curve_eta(c);
    const double escale = 1.0 / quaternion_coords(cert.certificate.e)[3];
    const double beta = cert.certificate.beta * escale;
    const auto kappa = curvature(c);
    std::vector<Mat2C> centers(c.size());
    for (int k = 0; k < c.size(); ++k) {
      centers[k] = c.vertices[k] - 0.5 * escale * (mat_k() * cert.certificate.p[k].coeff(1));
      if (k > 0) worst_center = std::max(worst_center, (centers[k] - centers[0]).norm());
    }
    const auto theta = theta_invariants(cert.certificate.p[0]);
    const double r2 = 0.25 * (theta[2] * escale * escale - 2.0 * eta * eta);
    for (const int i : c.interior_indices()) {
      const double x2 = (c.vertices[i] - centers[0]).det().real() - r2;
      worst_circle = std::max(worst_circle, std::abs(x2 - beta * eta / 4.0 * kappa[i]));
    }
  }
  const bool pass = worst_line < 1e-8 && worst_circle < 1e-8 && worst_center < 1e-10;
  report(8, pass, "distance laws d = (beta eta/4) kappa and x^2 = (beta eta/4) kappa",
         std::max(std::max(worst_line, worst_circle), worst_center));
}

// 9. mKdV decomposition of the rotation flow coefficient
void criterion_9() {
  double worst_res = 0.0, worst_a0 = 0.0;
  bool pass = true;
  for (int rep = 0; rep < 20; ++rep) {
    try {
      const DiscreteCurve c =
          random_constrained_elastic(SpaceForm::Euclidean, uniform_int(22, 40),
                                     uniform(0.15, 0.5));
      const auto cert = certify_euclidean(c);
      const auto dec = mkdv_decompose(c, cert.certificate);
      worst_res = std::max(worst_res, dec.max_residual);
      worst_a0 = std::max(worst_a0, dec.a0_drift / (1.0 + std::abs(dec.a0)));
    } catch (const Error&) {
      pass = false;
    }
  }
  report(9, pass && worst_res < 1e-8 && worst_a0 < 1e-9,
         "mKdV + tangent flow decomposition of C^1", std::max(worst_res, worst_a0));
}

// 10. special quaternionic polynomial factorization at scale
void criterion_10() {
  double worst_fact = 0.0, worst_det = 0.0;
  bool pass = true;
  std::mt19937& rng = global_rng();
  std::normal_distribution<double> g(0.0, 1.0);
  auto random_ij = [&] { return quaternion_from_coords(0.0, g(rng), g(rng), 0.0); };
  for (int rep = 0; rep < 500; ++rep) {
    const int n = uniform_int(1, 4);
    Mat2C c0;
    do {
      c0 = quaternion_from_coords(g(rng), g(rng), g(rng), g(rng));
    } while (std::abs(c0.det()) < 0.1);
    QuatPoly p({c0});
    std::vector<Mat2C> vs(n);
    for (auto& v : vs) v = random_ij();
    for (auto it = vs.rbegin(); it != vs.rend(); ++it) p = poly_mul(p, linear_factor(*it));
    try {
      const auto factors = poly_factor_special(p, n);
      QuatPoly back({p.coeff(0)});
      for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        back = poly_mul(back, linear_factor(*it));
      }
      const double scale = 1.0 + p.max_coeff_norm();
      for (int j = 0; j <= p.degree_bound(); ++j) {
        worst_fact = std::max(worst_fact, (back.coeff(j) - p.coeff(j)).norm() / scale);
      }
    } catch (const Error&) {
      pass = false;
    }
    // determinant multiplicativity on a random product
    const QuatPoly q = poly_mul(linear_factor(random_ij()), linear_factor(random_ij()));
    const auto dp = poly_det(p);
    const auto dq = poly_det(q);
    const auto dpq = poly_det(poly_mul(p, q));
    std::vector<Complex> conv(dp.size() + dq.size() - 1, Complex{});
    double det_scale = 1.0;
    for (size_t a = 0; a < dp.size(); ++a) {
      for (size_t b = 0; b < dq.size(); ++b) conv[a + b] += dp[a] * dq[b];
    }
    for (const auto& z : conv) det_scale = std::max(det_scale, std::abs(z));
    for (size_t j = 0; j < conv.size(); ++j) {
      const Complex have = j < dpq.size() ? dpq[j] : Complex{};
      worst_det = std::max(worst_det, std::abs(have - conv[j]) / det_scale);
    }
  }
  report(10, pass && worst_fact < 1e-9 && worst_det < 1e-9,
         "factorization re-multiplication and determinant multiplicativity",
         std::max(worst_fact, worst_det));
}

}  // namespace

int main() {
  const auto curves = corpus(100, 20, 60);
  criterion_1(curves);
  criterion_2(curves);
  criterion_3();
  criterion_4();
  criterion_5();
  TheoremData data;
  criterion_6(data);
  criterion_7(data);
  criterion_8(data);
  criterion_9();
  criterion_10();
  std::printf("%d criterion failure(s)\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
