#include "sfcurve/quatpoly.hpp"

#include <algorithm>
#include <cmath>

#include "sfcurve/numeric.hpp"

namespace sfc {

int QuatPoly::degree(double tol) const {
  const double scale = max_coeff_norm();
  if (scale == 0.0) return -1;
  for (int j = degree_bound(); j >= 0; --j) {
    if (coeffs[j].norm() > tol * scale) return j;
  }
  return -1;
}

double QuatPoly::max_coeff_norm() const {
  double m = 0.0;
  for (const auto& c : coeffs) m = std::max(m, c.norm());
  return m;
}

const Mat2C& QuatPoly::coeff(int j) const {
  static const Mat2C zero{};
  if (j < 0 || j >= static_cast<int>(coeffs.size())) return zero;
  return coeffs[j];
}

QuatPoly QuatPoly::trace_free_part() const {
  QuatPoly out;
  out.coeffs.reserve(coeffs.size());
  for (const auto& c : coeffs) out.coeffs.push_back(trace_free(c));
  return out;
}

std::vector<Complex> QuatPoly::half_trace() const {
  std::vector<Complex> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(0.5 * c.trace());
  return out;
}

QuatPoly operator+(const QuatPoly& p, const QuatPoly& q) {
  QuatPoly out;
  out.coeffs.resize(std::max(p.coeffs.size(), q.coeffs.size()));
  for (size_t j = 0; j < out.coeffs.size(); ++j) {
    out.coeffs[j] = p.coeff(static_cast<int>(j)) + q.coeff(static_cast<int>(j));
  }
  return out;
}

QuatPoly operator-(const QuatPoly& p, const QuatPoly& q) {
  QuatPoly out;
  out.coeffs.resize(std::max(p.coeffs.size(), q.coeffs.size()));
  for (size_t j = 0; j < out.coeffs.size(); ++j) {
    out.coeffs[j] = p.coeff(static_cast<int>(j)) - q.coeff(static_cast<int>(j));
  }
  return out;
}

QuatPoly operator*(const QuatPoly& p, Complex s) {
  QuatPoly out = p;
  for (auto& c : out.coeffs) c *= s;
  return out;
}

QuatPoly poly_mul(const QuatPoly& p, const QuatPoly& q) {
  if (p.coeffs.empty() || q.coeffs.empty()) return QuatPoly{};
  QuatPoly out;
  out.coeffs.resize(p.coeffs.size() + q.coeffs.size() - 1);
  for (size_t i = 0; i < p.coeffs.size(); ++i) {
    for (size_t j = 0; j < q.coeffs.size(); ++j) {
      out.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
    }
  }
  return out;
}

Mat2C poly_eval(const QuatPoly& p, Complex lambda) {
  Mat2C acc{};
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc = acc * lambda + *it;
  }
  return acc;
}

std::vector<Complex> poly_det(const QuatPoly& p) {
  // det(sum lambda^k C^k) expands through the polarization
  // <F,G> = tr(F G*)/2 of det.
  const int n = p.degree_bound();
  if (n < 0) return {};
  std::vector<Complex> out(2 * n + 1, Complex{});
  for (int k = 0; k <= n; ++k) {
    for (int l = 0; l <= n; ++l) {
      out[k + l] += mat_inner(p.coeffs[k], p.coeffs[l]);
    }
  }
  return out;
}

QuatPoly linear_factor(const Mat2C& v) { return QuatPoly({mat_one(), v}); }

DivisionResult poly_divide_right(const QuatPoly& p, const Mat2C& q) {
  DivisionResult res;
  const int n = p.degree_bound();
  if (n <= 0) {
    res.remainder = p.coeff(0);
    return res;
  }
  if (approx_zero(q, 0.0)) {
    res.quotient = p;
    return res;
  }
  const Mat2C qinv = q.inverse();
  std::vector<Mat2C> d(n);
  d[n - 1] = p.coeffs[n] * qinv;
  for (int j = n - 1; j >= 1; --j) {
    d[j - 1] = (p.coeffs[j] - d[j]) * qinv;
  }
  res.remainder = p.coeffs[0] - d[0];
  res.quotient = QuatPoly(std::move(d));
  return res;
}

ScalarDivisionResult poly_divide_scalar(const QuatPoly& p, const std::vector<Complex>& s) {
  const int ns = static_cast<int>(s.size()) - 1;
  const int np = p.degree_bound();
  ScalarDivisionResult res;
  if (ns < 0 || std::abs(s[ns]) == 0.0) {
    throw Error(Errc::SingularLeading, "scalar divisor has zero leading coefficient");
  }
  if (np < ns) {
    res.remainder = p;
    return res;
  }
  std::vector<Mat2C> rem = p.coeffs;
  std::vector<Mat2C> quot(np - ns + 1);
  for (int j = np - ns; j >= 0; --j) {
    const Mat2C factor = rem[j + ns] / s[ns];
    quot[j] = factor;
    for (int k = 0; k <= ns; ++k) {
      rem[j + k] -= factor * s[k];
    }
  }
  rem.resize(std::max(ns, 1));
  res.quotient = QuatPoly(std::move(quot));
  res.remainder = QuatPoly(std::move(rem));
  return res;
}

bool poly_is_special(const QuatPoly& p, double tol) {
  const double scale = 1.0 + p.max_coeff_norm();
  for (int j = 0; j <= p.degree_bound(); ++j) {
    const Mat2C& c = p.coeffs[j];
    if (c.norm() <= tol * scale) continue;
    if (j % 2 == 1) {
      if (!in_span_ij(c, tol)) return false;
    } else {
      if (!in_span_1k(c, tol)) return false;
    }
  }
  return true;
}

namespace {

std::vector<Complex> real_part_checked(const std::vector<Complex>& c, double tol) {
  double scale = 0.0;
  for (const auto& z : c) scale = std::max(scale, std::abs(z));
  for (const auto& z : c) {
    if (std::abs(z.imag()) > tol * (1.0 + scale)) {
      throw Error(Errc::FactorizationFailed, "determinant polynomial is not real");
    }
  }
  return c;
}

// Replaces each root by the centroid of its cluster and reports the
// cluster radius. Simultaneous-iteration roots of a multiple zero scatter
// symmetrically around it, so the centroid recovers most of the lost
// accuracy; the radius tells how much scatter a classification has to
// absorb.
struct ClusteredRoot {
  Complex centroid;
  double spread;
};

// Clusters roots within a fixed relative radius and reports centroid and
// scatter. The radius is large enough to collect the scatter of roots of
// multiplicity up to four; two genuinely distinct roots that fall into
// one cluster are handled downstream, where factor candidates are
// refined against the division remainder anyway.
std::vector<ClusteredRoot> cluster_centroids(const std::vector<Complex>& roots, double radius) {
  std::vector<ClusteredRoot> out(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) {
    Complex sum{};
    int count = 0;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (std::abs(roots[j] - roots[i]) <= radius * (1.0 + std::abs(roots[i]))) {
        sum += roots[j];
        ++count;
      }
    }
    out[i].centroid = sum / static_cast<double>(count);
    double spread = 0.0;
    for (size_t j = 0; j < roots.size(); ++j) {
      if (std::abs(roots[j] - roots[i]) <= radius * (1.0 + std::abs(roots[i]))) {
        spread = std::max(spread, std::abs(roots[j] - out[i].centroid));
      }
    }
    out[i].spread = spread;
  }
  return out;
}

// Distinct magnitudes of the imaginary root pairs of det P, ascending.
// Works on the even part q(mu) = det P with mu = lambda^2, which halves the
// root multiplicities; lambda-roots are imaginary iff all mu-roots are real
// and negative.
std::vector<double> imaginary_root_magnitudes(const QuatPoly& p, double tol,
                                               double cluster_radius = 1e-4) {
  const auto det = real_part_checked(poly_det(p), tol);

  double scale = 0.0;
  for (const auto& z : det) scale = std::max(scale, std::abs(z));
  double odd = 0.0;
  for (size_t j = 1; j < det.size(); j += 2) odd = std::max(odd, std::abs(det[j]));

  std::vector<double> mags;
  if (odd <= 1e-9 * (1.0 + scale)) {
    std::vector<Complex> even;
    for (size_t j = 0; j < det.size(); j += 2) even.push_back(det[j]);
    const auto mu = cluster_centroids(polynomial_roots(even), cluster_radius);
    for (const auto& m : mu) {
      // multiple roots scatter the iteration by their cluster radius;
      // isolated roots have no spread and are classified strictly
      const double imag_tol =
          std::max(std::max(tol, 1e-8) * (1.0 + std::abs(m.centroid)), 0.75 * m.spread);
      if (std::abs(m.centroid.imag()) > imag_tol || m.centroid.real() >= imag_tol) {
        throw Error(Errc::NonImaginaryRoots, "determinant polynomial has a non-imaginary root");
      }
      const double mag = std::sqrt(std::max(0.0, -m.centroid.real()));
      mags.push_back(mag);
      mags.push_back(mag);
    }
  } else {
    const auto roots = cluster_centroids(polynomial_roots(det), cluster_radius);
    for (const auto& r : roots) {
      const double imag_tol =
          std::max(std::max(tol, 1e-8) * (1.0 + std::abs(r.centroid)), 0.75 * r.spread);
      if (std::abs(r.centroid.real()) > imag_tol) {
        throw Error(Errc::NonImaginaryRoots, "determinant polynomial has a non-imaginary root");
      }
      mags.push_back(std::abs(r.centroid.imag()));
    }
  }
  std::sort(mags.begin(), mags.end());
  return mags;
}

// Remainder of Q modulo the central polynomial 1 + lambda^2/m^2, split into
// even part b and odd part a (remainder = b + a lambda), using
// lambda^2 = -m^2.
void central_remainder(const QuatPoly& q, double m, Mat2C& b, Mat2C& a) {
  b = Mat2C{};
  a = Mat2C{};
  double power = 1.0;
  for (int j = 0; j <= q.degree_bound(); j += 2) {
    b += power * q.coeff(j);
    a += power * q.coeff(j + 1);
    power *= -m * m;
  }
}

struct FactorCandidate {
  Mat2C v;
  double remainder_norm = 0.0;
};

double remainder_norm_for(const QuatPoly& q, const Mat2C& v) {
  return poly_divide_right(q, v).remainder.norm();
}

// Gauss-Newton refinement of a factor v = x i + y j against the right
// division remainder of Q. Steps are damped and only accepted when they
// shrink the remainder: near a central factor the remainder is flat
// along a whole circle of valid factors and undamped normal equations
// become arbitrarily ill-conditioned.
Mat2C polish_factor(const QuatPoly& q, Mat2C v, double tol) {
  auto coords = [&](const Mat2C& m) { return quaternion_coords(m, 1.0); };
  auto remainder_norm = [&](const Mat2C& cand) {
    return poly_divide_right(q, cand).remainder.norm();
  };
  Mat2C best = v;
  double best_norm = remainder_norm(v);
  const double target = 1e-3 * tol * (1.0 + q.max_coeff_norm());
  for (int iter = 0; iter < 12 && best_norm > target; ++iter) {
    const Mat2C r0 = poly_divide_right(q, best).remainder;
    const double h = 1e-7 * (1.0 + best.norm());
    const Mat2C rx = poly_divide_right(q, best + h * mat_i()).remainder;
    const Mat2C ry = poly_divide_right(q, best + h * mat_j()).remainder;
    const auto g0 = coords(r0);
    const auto gx = coords(rx);
    const auto gy = coords(ry);
    // 4x2 Jacobian, damped normal equations
    double jxx = 0.0, jxy = 0.0, jyy = 0.0, bx = 0.0, by = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double dx = (gx[k] - g0[k]) / h;
      const double dy = (gy[k] - g0[k]) / h;
      jxx += dx * dx;
      jxy += dx * dy;
      jyy += dy * dy;
      bx += dx * g0[k];
      by += dy * g0[k];
    }
    const double damping = 1e-10 * (1.0 + jxx + jyy);
    jxx += damping;
    jyy += damping;
    const double det = jxx * jyy - jxy * jxy;
    if (!(det > 0.0)) break;
    const double sx = (jyy * bx - jxy * by) / det;
    const double sy = (jxx * by - jxy * bx) / det;
    bool improved = false;
    for (double step = 1.0; step >= 0.125; step *= 0.5) {
      const Mat2C cand = best - step * sx * mat_i() - step * sy * mat_j();
      const double cand_norm = remainder_norm(cand);
      if (cand_norm < best_norm) {
        best = cand;
        best_norm = cand_norm;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return best;
}

}  // namespace

Mat2C refine_special_factor(const QuatPoly& p, Mat2C seed, double tol) {
  return polish_factor(p, seed, tol);
}

Mat2C special_right_factor(const QuatPoly& p, double root_magnitude, double tol) {
  Mat2C b, a;
  central_remainder(p, root_magnitude, b, a);
  const double scale = 1.0 + p.max_coeff_norm();
  if (std::abs(b.det()) <= tol * scale * scale) {
    return Mat2C{};
  }
  return polish_factor(p, b.inverse() * a, tol);
}

bool poly_det_roots_imaginary(const QuatPoly& p, double tol) {
  try {
    imaginary_root_magnitudes(p, tol);
  } catch (const Error&) {
    return false;
  }
  return true;
}

namespace {

std::vector<Mat2C> factor_special_pass(const QuatPoly& p, int n_requested, double tol,
                                       double cluster_radius) {
  if (p.coeffs.empty()) {
    throw Error(Errc::SingularLeading, "empty polynomial");
  }
  const Mat2C c0 = p.coeffs[0];
  if (std::abs(c0.det()) <= tol * (1.0 + c0.norm() * c0.norm())) {
    throw Error(Errc::SingularLeading, "constant coefficient is not invertible");
  }

  QuatPoly q;
  {
    const Mat2C c0inv = c0.inverse();
    q.coeffs.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) q.coeffs.push_back(c0inv * c);
  }
  const int deg = q.degree(tol);
  q.coeffs.resize(deg + 1);
  if (!poly_is_special(q, std::sqrt(tol))) {
    throw Error(Errc::FactorizationFailed, "normalized polynomial is not special");
  }

  std::vector<Mat2C> factors;
  QuatPoly cur = q;
  for (int step = 0; step < deg; ++step) {
    const auto mags = imaginary_root_magnitudes(cur, tol, cluster_radius);
    const double scale = 1.0 + cur.max_coeff_norm();

    FactorCandidate best;
    bool have = false;
    double last_mag = -1.0;
    for (const double m : mags) {
      if (m <= tol || std::abs(m - last_mag) <= 1e-8 * (1.0 + m)) continue;
      last_mag = m;
      Mat2C b, a;
      central_remainder(cur, m, b, a);
      Mat2C v;
      if (b.norm() <= 1e3 * tol * scale && a.norm() <= 1e3 * tol * scale) {
        // The central quadratic divides the polynomial: any factor with
        // det v = 1/m^2 works; take the i-direction representative.
        v = (1.0 / m) * mat_i();
      } else if (std::abs(b.det()) > tol * scale * scale) {
        v = b.inverse() * a;
      } else {
        continue;
      }
      v = polish_factor(cur, v, tol);
      const double rem = remainder_norm_for(cur, v);
      if (!have || rem < best.remainder_norm) {
        best = {v, rem};
        have = true;
      }
      if (have && best.remainder_norm <= 1e-2 * tol * scale) break;
    }
    if (!have || best.remainder_norm > std::sqrt(tol) * scale) {
      throw Error(Errc::FactorizationFailed, "no admissible linear right factor found");
    }
    if (!in_span_ij(best.v, std::sqrt(tol))) {
      throw Error(Errc::FactorizationFailed, "extracted factor is not in span{i,j}");
    }
    // Project exactly onto span{i,j}.
    const auto vc = quaternion_coords(best.v, 1.0);
    best.v = quaternion_from_coords(0.0, vc[1], vc[2], 0.0);
    factors.push_back(best.v);
    cur = poly_divide_right(cur, best.v).quotient;
  }

  // Verify by re-multiplication.
  QuatPoly rebuilt = QuatPoly({c0});
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    rebuilt = poly_mul(rebuilt, linear_factor(*it));
  }
  const double scale = 1.0 + p.max_coeff_norm();
  double err = 0.0;
  const int top = std::max(rebuilt.degree_bound(), p.degree_bound());
  for (int j = 0; j <= top; ++j) {
    err = std::max(err, (rebuilt.coeff(j) - p.coeff(j)).norm());
  }
  if (err > 100.0 * tol * scale) {
    throw Error(Errc::FactorizationFailed, "re-multiplication check failed");
  }

  if (n_requested > static_cast<int>(factors.size())) {
    factors.resize(n_requested, Mat2C{});
  }
  return factors;
}

}  // namespace

std::vector<Mat2C> poly_factor_special(const QuatPoly& p, int n_requested, double tol) {
  // A tight cluster radius keeps nearby distinct determinant roots apart;
  // roots of higher multiplicity scatter wider than that, so a failed
  // pass is retried with a radius that absorbs multiplicity-four scatter.
  try {
    return factor_special_pass(p, n_requested, tol, 1e-4);
  } catch (const Error& e) {
    if (e.code() != Errc::FactorizationFailed && e.code() != Errc::NonImaginaryRoots) throw;
  }
  return factor_special_pass(p, n_requested, tol, 2e-3);
}

}  // namespace sfc
