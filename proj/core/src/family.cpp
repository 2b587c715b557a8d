#include "sfcurve/family.hpp"

#include <cmath>

namespace sfc {

namespace {

bool is_real(Complex z) { return std::abs(z.imag()) <= 1e-12 * (1.0 + std::abs(z)); }
bool is_imaginary(Complex z) { return std::abs(z.real()) <= 1e-12 * (1.0 + std::abs(z)); }

Mat2C normalized_sqrt_det(const Mat2C& m) {
  const Complex dt = m.det();
  if (std::abs(dt) == 0.0) {
    throw Error(Errc::InadmissibleLambda, "frame factor is singular");
  }
  return m / std::sqrt(dt);
}

}  // namespace

SpaceForm family_target(SpaceForm source, Complex lambda, double eta) {
  if (source == SpaceForm::Euclidean) {
    if (is_real(lambda) && std::abs(lambda.real()) > 1e-12) return SpaceForm::Spherical;
    if (is_imaginary(lambda)) {
      const double mu = std::abs(lambda.imag());
      if (mu > 0.0 && mu < 1.0 / eta) return SpaceForm::Hyperbolic;
    }
    throw Error(Errc::InadmissibleLambda,
                "Euclidean curves need real lambda or imaginary lambda in (0, 1/eta)");
  }
  if (std::abs(lambda - Complex(1.0)) > 1e-12) {
    throw Error(Errc::InadmissibleLambda, "non-Euclidean curves transform with lambda = 1");
  }
  return SpaceForm::Euclidean;
}

Complex family_return_lambda(SpaceForm source) {
  switch (source) {
    case SpaceForm::Spherical: return Complex(1.0);
    case SpaceForm::Hyperbolic: return Complex(0.0, -1.0);
    case SpaceForm::Euclidean: return Complex(1.0);
  }
  return Complex(1.0);
}

double family_zeta(SpaceForm source, Complex lambda, double eta) {
  if (source == SpaceForm::Euclidean) {
    const double lam2 = (lambda * lambda).real();
    return 2.0 * std::abs(lambda) * eta / (1.0 + lam2 * eta * eta);
  }
  // to Euclidean space: the new eta (= new zeta)
  const double zeta = zeta_from_eta(source, eta);
  return eta * eta / (2.0 * zeta);
}

double family_curvature_scale(SpaceForm source, Complex lambda, double eta) {
  const double zeta = zeta_from_eta(source, eta);
  return zeta / family_zeta(source, lambda, eta);
}

FamilyResult associated_transform_full(const DiscreteCurve& curve, Complex lambda, double tol) {
  const double eta = curve_eta(curve);
  const SpaceForm target = family_target(curve.form, lambda, eta);

  FamilyResult res;
  res.lambda = lambda;

  // move the initial point into canonical position
  res.canonical_move = isometry_to_canonical(curve.form, curve.vertices[0]);
  const DiscreteCurve src = apply_isometry(curve, res.canonical_move);

  const auto u = transport(src);
  const int n = src.size();

  // frames with unit determinant; conjugation by them is what we use, so
  // the normalization drops out of every formula below
  res.frames.resize(n);
  res.frames[0] = mat_one();
  for (int k = 0; k + 1 < n; ++k) {
    const Mat2C factor = mat_one() + lambda * u[k];
    if (std::abs(factor.det()) <= tol) {
      throw Error(Errc::InadmissibleLambda, "1 + lambda u is singular along the curve");
    }
    res.frames[k + 1] = normalized_sqrt_det(factor) * res.frames[k];
  }

  DiscreteCurve out;
  out.form = target;
  out.periodic = curve.periodic;
  out.vertices.resize(n);

  if (curve.form == SpaceForm::Euclidean) {
    // points are Phi^{-1} k Phi
    for (int k = 0; k < n; ++k) {
      const Mat2C& phi = res.frames[k];
      Mat2C p = phi.adjugate() * mat_k() * phi;
      renormalize_model_point(target, p);
      out.vertices[k] = p;
    }
  } else {
    // transport of the Euclidean image; scaled by i for hyperbolic input
    const Complex scale = curve.form == SpaceForm::Hyperbolic ? Complex(0.0, 1.0) : Complex(1.0);
    Mat2C point{};
    out.vertices[0] = point;
    for (int k = 0; k + 1 < n; ++k) {
      const Mat2C central = (mat_one() + u[k]).inverse() * (mat_one() - u[k]);
      const Mat2C unew = scale * (res.frames[k].adjugate() * central * res.frames[k]);
      point += unew;
      out.vertices[k + 1] = point;
    }
    // project onto span{i,j}; accuracy is limited by how far the source
    // wandered and is checked by the callers at their own scale
    for (auto& f : out.vertices) {
      const auto q = quaternion_coords(f, 1.0);
      f = plane_point(q[1], q[2]);
    }
  }
  res.curve = std::move(out);
  return res;
}

DiscreteCurve associated_transform(const DiscreteCurve& curve, Complex lambda, double tol) {
  return associated_transform_full(curve, lambda, tol).curve;
}

double family_roundtrip_check(const DiscreteCurve& curve, Complex lambda, double tol) {
  if (curve.form == SpaceForm::Euclidean) {
    // T^1 of T^lambda is a constant real scaling of the input
    const DiscreteCurve canonical =
        apply_isometry(curve, isometry_to_canonical(curve.form, curve.vertices[0]));
    const DiscreteCurve once = associated_transform(canonical, lambda, tol);
    const DiscreteCurve back = associated_transform(once, Complex(1.0), tol);
    // measure the scale on the longest vertex
    double c = 0.0, best = 0.0;
    for (int i = 0; i < canonical.size(); ++i) {
      const double len2 = mat_inner(canonical.vertices[i], canonical.vertices[i]).real();
      if (len2 > best) {
        best = len2;
        c = mat_inner(back.vertices[i], canonical.vertices[i]).real() / len2;
      }
    }
    double dev = 0.0;
    for (int i = 0; i < canonical.size(); ++i) {
      dev = std::max(dev, (back.vertices[i] - c * canonical.vertices[i]).norm());
    }
    return dev;
  }
  const DiscreteCurve canonical =
      apply_isometry(curve, isometry_to_canonical(curve.form, curve.vertices[0]));
  const DiscreteCurve flat = associated_transform(canonical, Complex(1.0), tol);
  const DiscreteCurve back =
      associated_transform(flat, family_return_lambda(curve.form), tol);
  return curve_distance(back, canonical);
}

}  // namespace sfc
