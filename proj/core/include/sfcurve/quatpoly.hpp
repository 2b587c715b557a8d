#pragma once

#include <vector>

#include "sfcurve/algebra.hpp"

namespace sfc {

/// Polynomial in a scalar variable lambda with Mat2C coefficients,
/// coeffs[j] multiplying lambda^j. The variable commutes with the
/// coefficients, the coefficients do not commute with each other.
struct QuatPoly {
  std::vector<Mat2C> coeffs;

  QuatPoly() = default;
  explicit QuatPoly(std::vector<Mat2C> c) : coeffs(std::move(c)) {}

  /// Degree bound (size - 1); trailing zero coefficients are permitted.
  int degree_bound() const { return static_cast<int>(coeffs.size()) - 1; }

  /// Degree after ignoring trailing coefficients negligible relative to
  /// the largest coefficient norm. Returns -1 for the zero polynomial.
  int degree(double tol = kTol) const;

  double max_coeff_norm() const;

  const Mat2C& coeff(int j) const;  // zero matrix outside the stored range

  /// Per-coefficient trace-free part.
  QuatPoly trace_free_part() const;

  /// Coefficients of the scalar polynomial tr(P)/2.
  std::vector<Complex> half_trace() const;
};

QuatPoly operator+(const QuatPoly& p, const QuatPoly& q);
QuatPoly operator-(const QuatPoly& p, const QuatPoly& q);
QuatPoly operator*(const QuatPoly& p, Complex s);

/// Noncommutative convolution product; coefficient order is preserved.
QuatPoly poly_mul(const QuatPoly& p, const QuatPoly& q);

/// Substitution of the scalar lambda.
Mat2C poly_eval(const QuatPoly& p, Complex lambda);

/// Coefficients of the scalar polynomial det P(lambda), degree <= 2n.
std::vector<Complex> poly_det(const QuatPoly& p);

/// The linear polynomial 1 + lambda v.
QuatPoly linear_factor(const Mat2C& v);

struct DivisionResult {
  QuatPoly quotient;
  Mat2C remainder;  // constant; zero iff (1 + lambda q) right-divides P
};

/// Right division P = Q (1 + lambda q) + R with constant remainder R.
DivisionResult poly_divide_right(const QuatPoly& p, const Mat2C& q);

/// Division of P by a scalar polynomial s (exactly, coefficientwise);
/// remainder has degree < deg s.
struct ScalarDivisionResult {
  QuatPoly quotient;
  QuatPoly remainder;
};
ScalarDivisionResult poly_divide_scalar(const QuatPoly& p, const std::vector<Complex>& s);

/// A polynomial is special if C^j lies in span{i,j} for odd j and in
/// span{1,k} for even j.
bool poly_is_special(const QuatPoly& p, double tol = kTol);

/// True if every root of det P is purely imaginary within tolerance.
bool poly_det_roots_imaginary(const QuatPoly& p, double tol = kTol);

/// Gauss-Newton refinement of a special right factor candidate against
/// the right-division remainder. Returns the polished factor; callers
/// check the remainder themselves.
Mat2C refine_special_factor(const QuatPoly& p, Mat2C seed, double tol = kTol);

/// The special right factor 1 + lambda v of P belonging to the imaginary
/// determinant root pair of the given magnitude (det v = 1/magnitude^2).
/// Returns the zero matrix when the central remainder degenerates and the
/// factor direction is not determined by the root alone.
Mat2C special_right_factor(const QuatPoly& p, double root_magnitude, double tol = kTol);

/// Factorization P = C^0 (1+lambda v[m-1]) ... (1+lambda v[0]) of a
/// polynomial with invertible leading constant coefficient C^0 whose
/// normalization (C^0)^{-1} P is special and whose determinant roots are
/// all imaginary. The returned factors live in span{i,j}; the list is
/// padded with zero factors up to n_requested when that exceeds the
/// effective degree.
///
/// Throws SingularLeading, NonImaginaryRoots or FactorizationFailed.
std::vector<Mat2C> poly_factor_special(const QuatPoly& p, int n_requested = -1,
                                       double tol = kTol);

}  // namespace sfc
