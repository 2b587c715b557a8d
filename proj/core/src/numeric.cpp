#include "sfcurve/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace sfc {

Complex polynomial_eval(const std::vector<Complex>& coeffs, Complex x) {
  Complex acc{};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, double tol) {
  double maxc = 0.0;
  for (const auto& c : coeffs) maxc = std::max(maxc, std::abs(c));
  if (maxc == 0.0) return {};

  std::vector<Complex> p = coeffs;
  while (p.size() > 1 && std::abs(p.back()) <= 1e-14 * maxc) p.pop_back();
  const int deg = static_cast<int>(p.size()) - 1;
  if (deg <= 0) return {};

  for (auto& c : p) c /= p.back();

  // Cauchy bound for the root radius.
  double bound = 0.0;
  for (int j = 0; j < deg; ++j) bound = std::max(bound, std::abs(p[j]));
  bound += 1.0;

  std::vector<Complex> z(deg);
  const Complex seed(0.4, 0.9);
  Complex w = seed;
  for (int k = 0; k < deg; ++k) {
    z[k] = 0.5 * bound * w;
    w *= seed;
  }

  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0.0;
    for (int k = 0; k < deg; ++k) {
      Complex denom = 1.0;
      for (int l = 0; l < deg; ++l) {
        if (l != k) denom *= z[k] - z[l];
      }
      if (std::abs(denom) == 0.0) {
        denom = 1e-30;
      }
      const Complex delta = polynomial_eval(p, z[k]) / denom;
      z[k] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < tol * (1.0 + bound)) break;
  }
  return z;
}

SymmetricEigen symmetric_eigen(std::vector<double> m, int n) {
  std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  auto at = [&](std::vector<double>& a, int r, int c) -> double& { return a[r * n + c]; };

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += m[i * n + j] * m[i * n + j];
    if (off < 1e-28) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(m, p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(m, q, q) - at(m, p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double mkp = at(m, k, p), mkq = at(m, k, q);
          at(m, k, p) = c * mkp - s * mkq;
          at(m, k, q) = s * mkp + c * mkq;
        }
        for (int k = 0; k < n; ++k) {
          const double mpk = at(m, p, k), mqk = at(m, q, k);
          at(m, p, k) = c * mpk - s * mqk;
          at(m, q, k) = s * mpk + c * mqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = at(v, k, p), vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int l, int r) { return m[l * n + l] < m[r * n + r]; });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.assign(static_cast<size_t>(n) * n, 0.0);
  for (int k = 0; k < n; ++k) {
    out.values[k] = m[order[k] * n + order[k]];
    for (int i = 0; i < n; ++i) out.vectors[i * n + k] = v[i * n + order[k]];
  }
  return out;
}

std::vector<double> least_squares_null_vector(const std::vector<double>& a, int rows, int cols) {
  std::vector<double> ata(static_cast<size_t>(cols) * cols, 0.0);
  for (int r = 0; r < rows; ++r) {
    for (int i = 0; i < cols; ++i) {
      const double ari = a[r * cols + i];
      if (ari == 0.0) continue;
      for (int j = 0; j < cols; ++j) ata[i * cols + j] += ari * a[r * cols + j];
    }
  }
  const auto eig = symmetric_eigen(std::move(ata), cols);
  std::vector<double> x(cols);
  for (int i = 0; i < cols; ++i) x[i] = eig.vectors[i * cols + 0];
  return x;
}

LinearFit2 linear_fit2(const std::vector<double>& x, const std::vector<double>& y,
                       const std::vector<double>& rhs) {
  double sxx = 0.0, sxy = 0.0, syy = 0.0, sxr = 0.0, syr = 0.0;
  for (size_t i = 0; i < rhs.size(); ++i) {
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
    syy += y[i] * y[i];
    sxr += x[i] * rhs[i];
    syr += y[i] * rhs[i];
  }
  LinearFit2 fit;
  const double det = sxx * syy - sxy * sxy;
  const double scale = std::max(sxx, syy);
  if (det <= 1e-12 * scale * scale || scale == 0.0) {
    fit.rank_deficient = true;
    // Fall back to the best single-parameter solution.
    if (sxx > syy && sxx > 0.0) {
      fit.p0 = sxr / sxx;
    } else if (syy > 0.0) {
      fit.p1 = syr / syy;
    }
    return fit;
  }
  fit.p0 = (syy * sxr - sxy * syr) / det;
  fit.p1 = (sxx * syr - sxy * sxr) / det;
  return fit;
}

}  // namespace sfc
