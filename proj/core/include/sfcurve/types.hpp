#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace sfc {

using Complex = std::complex<double>;

/// Default tolerance used by all membership and equality predicates.
inline constexpr double kTol = 1e-9;

enum class Errc {
  // algebra
  SingularMatrix,
  NonImaginaryRoots,
  SingularLeading,
  FactorizationFailed,
  // lightcone
  NotLightlike,
  IsotropicMirror,
  PointNotCircle,
  NotOnModel,
  // curve
  IrregularCurve,
  CuspVertex,
  BoundaryVertex,
  // integrate
  BadSeedDistance,
  InadmissibleEta,
  TooShort,
  // family
  InadmissibleLambda,
  NonCanonicalInitialPoint,
  // backlund
  DegenerateQuad,
  CoincidentBD,
  BadInitialPoint,
  ShapeNotPreserved,
  ReduciblePolynomial,
  ConditionViolated,
  // elastic
  NotElastic,
  NotCertified,
  SearchFailed,
  // io
  ParseError,
  IOError,
};

const char* errc_name(Errc code);

/// Exception carrying one of the error codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sfc
