#pragma once

#include <optional>
#include <string>

#include "sfcurve/backlund.hpp"

namespace sfc {

/// On-disk curve format, schema_version "1": space form tag, eta,
/// periodicity, vertex coordinates (2 reals in E2, 3 in S2/H2) and an
/// optional invariance certificate. Complex numbers serialize as
/// [re, im] pairs, matrices row-major.
struct CurveDocument {
  DiscreteCurve curve;
  std::optional<InvarianceCertificate> certificate;
};

std::string document_to_json(const CurveDocument& doc);
CurveDocument document_from_json(const std::string& text, double tol = kTol);

void save_document(const CurveDocument& doc, const std::string& path);
CurveDocument load_document(const std::string& path, double tol = kTol);

}  // namespace sfc
