#include "sfcurve/algebra.hpp"

#include <ostream>

namespace sfc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::NonImaginaryRoots: return "NonImaginaryRoots";
    case Errc::SingularLeading: return "SingularLeading";
    case Errc::FactorizationFailed: return "FactorizationFailed";
    case Errc::NotLightlike: return "NotLightlike";
    case Errc::IsotropicMirror: return "IsotropicMirror";
    case Errc::PointNotCircle: return "PointNotCircle";
    case Errc::NotOnModel: return "NotOnModel";
    case Errc::IrregularCurve: return "IrregularCurve";
    case Errc::CuspVertex: return "CuspVertex";
    case Errc::BoundaryVertex: return "BoundaryVertex";
    case Errc::BadSeedDistance: return "BadSeedDistance";
    case Errc::InadmissibleEta: return "InadmissibleEta";
    case Errc::TooShort: return "TooShort";
    case Errc::InadmissibleLambda: return "InadmissibleLambda";
    case Errc::NonCanonicalInitialPoint: return "NonCanonicalInitialPoint";
    case Errc::DegenerateQuad: return "DegenerateQuad";
    case Errc::CoincidentBD: return "CoincidentBD";
    case Errc::BadInitialPoint: return "BadInitialPoint";
    case Errc::ShapeNotPreserved: return "ShapeNotPreserved";
    case Errc::ReduciblePolynomial: return "ReduciblePolynomial";
    case Errc::ConditionViolated: return "ConditionViolated";
    case Errc::NotElastic: return "NotElastic";
    case Errc::NotCertified: return "NotCertified";
    case Errc::SearchFailed: return "SearchFailed";
    case Errc::ParseError: return "ParseError";
    case Errc::IOError: return "IOError";
  }
  return "UnknownError";
}

Mat2C Mat2C::inverse() const {
  const Complex dt = det();
  if (std::abs(dt) == 0.0) {
    throw Error(Errc::SingularMatrix, "matrix has zero determinant");
  }
  return adjugate() / dt;
}

std::ostream& operator<<(std::ostream& os, const Mat2C& m) {
  return os << "[" << m.a << ", " << m.b << "; " << m.c << ", " << m.d << "]";
}

namespace {
constexpr Complex kI{0.0, 1.0};
}

Mat2C mat_one() { return {1.0, 0.0, 0.0, 1.0}; }
Mat2C mat_i() { return {0.0, -kI, -kI, 0.0}; }
Mat2C mat_j() { return {0.0, -1.0, 1.0, 0.0}; }
Mat2C mat_k() { return {-kI, 0.0, 0.0, kI}; }
Mat2C mat_sigma1() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2C mat_sigma2() { return {0.0, -kI, kI, 0.0}; }
Mat2C mat_sigma3() { return {1.0, 0.0, 0.0, -1.0}; }

Complex mat_inner(const Mat2C& f, const Mat2C& g) {
  // tr(F G*)/2 without forming the product matrix.
  return 0.5 * (f.a * g.d - f.b * g.c - f.c * g.b + f.d * g.a);
}

Mat2C trace_free(const Mat2C& m) {
  const Complex h = 0.5 * m.trace();
  return {m.a - h, m.b, m.c, m.d - h};
}

bool approx_equal(const Mat2C& f, const Mat2C& g, double tol) {
  const double scale = 1.0 + std::max(f.norm(), g.norm());
  return (f - g).norm() <= tol * scale;
}

bool approx_zero(const Mat2C& m, double tol) { return m.norm() <= tol; }

namespace {

// Deviation from the quaternion span: a quaternion fulfills
// m11 = conj(m22) and m12 = -conj(m21).
double quaternion_defect(const Mat2C& m) {
  return std::abs(m.a - std::conj(m.d)) + std::abs(m.b + std::conj(m.c));
}

// Split-quaternions fulfill m11 = conj(m22) and m12 = conj(m21).
double split_defect(const Mat2C& m) {
  return std::abs(m.a - std::conj(m.d)) + std::abs(m.b - std::conj(m.c));
}

}  // namespace

bool is_quaternion(const Mat2C& m, double tol) {
  return quaternion_defect(m) <= tol * (1.0 + m.norm());
}

bool is_split_quaternion(const Mat2C& m, double tol) {
  return split_defect(m) <= tol * (1.0 + m.norm());
}

std::array<double, 4> quaternion_coords(const Mat2C& m, double tol) {
  if (!is_quaternion(m, tol)) {
    throw Error(Errc::NotOnModel, "matrix is not a quaternion");
  }
  const double w = 0.5 * std::real(m.a + m.d);
  const double x = -0.5 * std::imag(m.b + m.c);
  const double y = 0.5 * std::real(m.c - m.b);
  const double z = 0.5 * std::imag(m.d - m.a);
  return {w, x, y, z};
}

Mat2C quaternion_from_coords(double w, double x, double y, double z) {
  return {Complex(w, -z), Complex(-y, -x), Complex(y, -x), Complex(w, z)};
}

std::array<double, 4> split_coords(const Mat2C& m, double tol) {
  if (!is_split_quaternion(m, tol)) {
    throw Error(Errc::NotOnModel, "matrix is not a split-quaternion");
  }
  const double w = 0.5 * std::real(m.a + m.d);
  const double x = 0.5 * std::real(m.b + m.c);
  const double y = 0.5 * std::imag(m.c - m.b);
  const double z = 0.5 * std::imag(m.d - m.a);
  return {w, x, y, z};
}

Mat2C split_from_coords(double w, double x, double y, double z) {
  return {Complex(w, -z), Complex(x, -y), Complex(x, y), Complex(w, z)};
}

bool in_span_ij(const Mat2C& m, double tol) {
  if (!is_quaternion(m, tol)) return false;
  const auto q = quaternion_coords(m, tol);
  return std::abs(q[0]) + std::abs(q[3]) <= tol * (1.0 + m.norm());
}

bool in_span_1k(const Mat2C& m, double tol) {
  if (!is_quaternion(m, tol)) return false;
  const auto q = quaternion_coords(m, tol);
  return std::abs(q[1]) + std::abs(q[2]) <= tol * (1.0 + m.norm());
}

Mat2C plane_point(double x, double y) { return quaternion_from_coords(0.0, x, y, 0.0); }

std::array<double, 2> plane_coords(const Mat2C& m, double tol) {
  const auto q = quaternion_coords(m, tol);
  if (std::abs(q[0]) + std::abs(q[3]) > tol * (1.0 + m.norm())) {
    throw Error(Errc::NotOnModel, "matrix is not a plane vector in span{i,j}");
  }
  return {q[1], q[2]};
}

}  // namespace sfc
