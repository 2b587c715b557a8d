#include "sfcurve/integrate.hpp"

#include <cmath>

#include "sfcurve/numeric.hpp"

namespace sfc {

ElasticParams ElasticParams::make(SpaceForm form, double xi, double delta, double eta) {
  ElasticParams p;
  p.xi = xi;
  p.delta = delta;
  p.eta = eta;
  p.zeta = zeta_from_eta(form, eta);
  return p;
}

namespace {

void check_eta(SpaceForm form, double eta) {
  if (!(eta > 0.0)) throw Error(Errc::InadmissibleEta, "eta must be positive");
  if (form == SpaceForm::Spherical && eta * eta >= 4.0) {
    throw Error(Errc::InadmissibleEta, "spherical arc-length requires eta^2 < 4");
  }
}

std::pair<Mat2C, Mat2C> default_seeds(SpaceForm form, double eta) {
  switch (form) {
    case SpaceForm::Euclidean:
      return {Mat2C{}, eta * mat_i()};
    case SpaceForm::Spherical: {
      const double d = std::acos(1.0 - eta * eta / 2.0);
      return {mat_k(), std::cos(d) * mat_k() + std::sin(d) * mat_i()};
    }
    case SpaceForm::Hyperbolic: {
      const double d = std::acosh(1.0 + eta * eta / 2.0);
      return {mat_k(), std::cosh(d) * mat_k() + std::sinh(d) * mat_sigma1()};
    }
  }
  return {};
}

}  // namespace

DiscreteCurve integrate_curvature(SpaceForm form, double eta, const std::vector<double>& kappa,
                                  std::optional<std::pair<Mat2C, Mat2C>> seeds) {
  check_eta(form, eta);
  const auto [f0, f1] = seeds.value_or(default_seeds(form, eta));
  if (!on_model(form, f0, 1e-7) || !on_model(form, f1, 1e-7)) {
    throw Error(Errc::BadSeedDistance, "seed points are not on the model");
  }
  {
    DiscreteCurve probe;
    probe.form = form;
    probe.vertices = {f0, f1};
    const double seed_eta = curve_eta(probe);
    if (std::abs(seed_eta - eta) > 1e-8 * (1.0 + eta)) {
      throw Error(Errc::BadSeedDistance, "seed points do not realize the requested arc-length");
    }
  }

  const double zeta = zeta_from_eta(form, eta);
  DiscreteCurve curve;
  curve.form = form;
  curve.vertices = {f0, f1};
  curve.vertices.reserve(kappa.size() + 2);

  // The transport is propagated on its own; feeding renormalized points
  // back into u amplifies rounding error exponentially in the hyperbolic
  // case, so the projection below only touches the point.
  Mat2C u = form == SpaceForm::Euclidean ? f1 - f0 : -1.0 * (f1 * f0);
  Mat2C f = f1;
  for (const double k : kappa) {
    Mat2C h;
    if (form == SpaceForm::Euclidean) {
      h = mat_one() + (eta / 2.0) * k * mat_k();
    } else {
      h = mat_one() + (zeta / 2.0) * k * f;
    }
    u = h * u * h.inverse();
    f = form == SpaceForm::Euclidean ? f + u : u * f;
    if (form != SpaceForm::Euclidean) {
      renormalize_model_point(form, f);
    }
    curve.vertices.push_back(f);
  }
  return curve;
}

std::vector<double> kappa_recursion(const ElasticParams& params, double kappa_m1, double kappa_0,
                                    int count) {
  std::vector<double> out;
  out.reserve(std::max(count, 0));
  if (count <= 0) return out;
  out.push_back(kappa_m1);
  if (count == 1) return out;
  out.push_back(kappa_0);
  const double z4 = params.zeta * params.zeta / 4.0;
  while (static_cast<int>(out.size()) < count) {
    const double km1 = out[out.size() - 2];
    const double k0 = out[out.size() - 1];
    out.push_back((params.xi * k0 + params.delta) / (1.0 + z4 * k0 * k0) - km1);
  }
  return out;
}

CurvatureFit curvature_equation_fit(const DiscreteCurve& curve, double tol) {
  const auto idx = curve.interior_indices();
  if (static_cast<int>(idx.size()) < 4) {
    throw Error(Errc::TooShort, "fit needs at least four interior vertices");
  }
  const auto kappa = curvature(curve);
  const double z4 = curve_zeta(curve) * curve_zeta(curve) / 4.0;

  // rows (kappa(-1)+kappa(1)) (1 + zeta^2 kappa0^2/4) = xi kappa0 + delta
  std::vector<double> col_x, col_1, rhs;
  for (const int i : idx) {
    if (!curve.is_interior(i - 1) || !curve.is_interior(i + 1)) continue;
    const double km1 = kappa[curve.wrap(i - 1)];
    const double k0 = kappa[curve.wrap(i)];
    const double kp1 = kappa[curve.wrap(i + 1)];
    col_x.push_back(k0);
    col_1.push_back(1.0);
    rhs.push_back((km1 + kp1) * (1.0 + z4 * k0 * k0));
  }
  if (rhs.size() < 2) throw Error(Errc::TooShort, "fit needs at least two stencils");

  const auto fit = linear_fit2(col_x, col_1, rhs);
  CurvatureFit out;
  out.xi = fit.p0;
  out.delta = fit.p1;
  out.non_unique = fit.rank_deficient;
  for (size_t r = 0; r < rhs.size(); ++r) {
    out.max_residual = std::max(out.max_residual,
                                std::abs(rhs[r] - out.xi * col_x[r] - out.delta * col_1[r]));
  }
  (void)tol;
  return out;
}

}  // namespace sfc
