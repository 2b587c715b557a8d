#include <doctest.h>

#include "helpers.hpp"
#include "sfcurve/document.hpp"
#include "sfcurve/elastic.hpp"
#include "sfcurve/svg.hpp"

using namespace sfc;
using namespace sfc::testing;

TEST_CASE("document round trip is byte stable") {
  for (const auto form : all_forms()) {
    CurveDocument doc;
    doc.curve = random_curve(form, 12);
    const std::string once = document_to_json(doc);
    const CurveDocument back = document_from_json(once);
    CHECK(back.curve.form == doc.curve.form);
    CHECK(curve_distance(back.curve, doc.curve) == 0.0);
    CHECK(document_to_json(back) == once);
  }
}

TEST_CASE("certificates survive the round trip") {
  const DiscreteCurve c = random_constrained_elastic(SpaceForm::Euclidean, 24, 0.3);
  const auto cert = certify_euclidean(c);
  CurveDocument doc;
  doc.curve = c;
  doc.certificate = cert.certificate;
  const std::string text = document_to_json(doc);
  const CurveDocument back = document_from_json(text);
  REQUIRE(back.certificate.has_value());
  CHECK(back.certificate->n == cert.certificate.n);
  CHECK(verify_certificate(back.curve, *back.certificate).valid);
  CHECK(document_to_json(back) == text);
}

TEST_CASE("parse errors carry the right code") {
  CHECK_THROWS_AS(document_from_json("not json"), Error);
  CHECK_THROWS_AS(document_from_json("{\"schema_version\":\"1\"}"), Error);
  // off-model vertex
  const char* bad = R"({"schema_version":"1","space_form":"S2","eta":0.5,
    "periodic":false,"vertices":[[0,0,1],[0.5,0.5,0.5]]})";
  try {
    document_from_json(bad);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(std::string(e.what()).find("vertex 1") != std::string::npos);
  }
}

TEST_CASE("svg rendering emits the drawable pieces") {
  const DiscreteCurve c = random_constrained_elastic(SpaceForm::Euclidean, 20, 0.0);
  RenderOptions options;
  options.tangents = true;
  options.circles = true;
  options.directrix = true;
  const std::string svg = render_svg({c}, options);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);  // the directrix overlay

  // hyperbolic curves stay inside the unit disc
  const DiscreteCurve h = random_curve(SpaceForm::Hyperbolic, 14);
  for (int i = 0; i < h.size(); ++i) {
    const LCVector f = vertex_lift(h, i);
    const double w = f[2] + f[3];
    CHECK(std::hypot(f[0] / w, f[1] / w) < 1.0);
  }
  const std::string hsvg = render_svg({h}, RenderOptions{});
  CHECK(hsvg.find("<circle") != std::string::npos);  // boundary circle

  // deterministic output
  CHECK(render_svg({c}, options) == svg);
}
