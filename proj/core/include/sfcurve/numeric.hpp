#pragma once

#include <vector>

#include "sfcurve/types.hpp"

namespace sfc {

/// Roots of a scalar polynomial sum_j coeffs[j] lambda^j by simultaneous
/// (Durand-Kerner) iteration. Trailing coefficients that are negligible
/// relative to the largest one are stripped first. Returns deg(p) roots.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& coeffs, double tol = 1e-13);

/// Evaluation of a scalar polynomial by Horner's rule.
Complex polynomial_eval(const std::vector<Complex>& coeffs, Complex x);

/// Eigen decomposition of a dense symmetric matrix (row-major, n x n) by
/// cyclic Jacobi rotations. Eigenvalues ascending, eigenvectors as columns.
struct SymmetricEigen {
  std::vector<double> values;
  std::vector<double> vectors;  // column k at vectors[i*n + k]
};
SymmetricEigen symmetric_eigen(std::vector<double> m, int n);

/// Unit minimizer x of |A x| for a dense row-major rows x cols matrix,
/// computed from the smallest eigenvector of A^T A.
std::vector<double> least_squares_null_vector(const std::vector<double>& a, int rows, int cols);

/// Solution of the 2x2 normal equations for min |M p - rhs| with
/// M = [cols x, y], p = (p0, p1). Returns {p0, p1, rank_deficient}.
struct LinearFit2 {
  double p0 = 0.0;
  double p1 = 0.0;
  bool rank_deficient = false;
};
LinearFit2 linear_fit2(const std::vector<double>& x, const std::vector<double>& y,
                       const std::vector<double>& rhs);

}  // namespace sfc
