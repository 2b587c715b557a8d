#include "sfcurve/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sfc {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw Error(Errc::ParseError, "complex numbers are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Mat2C& m) {
  return json::array({json::array({complex_to_json(m.a), complex_to_json(m.b)}),
                      json::array({complex_to_json(m.c), complex_to_json(m.d)})});
}

Mat2C matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || j[0].size() != 2 || j[1].size() != 2) {
    throw Error(Errc::ParseError, "matrices are 2x2 row-major arrays");
  }
  return {complex_from_json(j[0][0]), complex_from_json(j[0][1]), complex_from_json(j[1][0]),
          complex_from_json(j[1][1])};
}

SpaceForm form_from_string(const std::string& s) {
  if (s == "E2") return SpaceForm::Euclidean;
  if (s == "S2") return SpaceForm::Spherical;
  if (s == "H2") return SpaceForm::Hyperbolic;
  throw Error(Errc::ParseError, "unknown space form '" + s + "'");
}

}  // namespace

std::string document_to_json(const CurveDocument& doc) {
  json j;
  j["schema_version"] = "1";
  j["space_form"] = space_form_name(doc.curve.form);
  j["eta"] = curve_eta(doc.curve);
  j["periodic"] = doc.curve.periodic;
  json verts = json::array();
  for (const auto& f : doc.curve.vertices) {
    if (doc.curve.form == SpaceForm::Euclidean) {
      const auto xy = plane_coords(f, 1e-6);
      verts.push_back(json::array({xy[0], xy[1]}));
    } else if (doc.curve.form == SpaceForm::Spherical) {
      const auto q = quaternion_coords(f, 1e-6);
      verts.push_back(json::array({q[1], q[2], q[3]}));
    } else {
      const auto s = split_coords(f, 1e-6);
      verts.push_back(json::array({s[1], s[2], s[3]}));
    }
  }
  j["vertices"] = std::move(verts);

  if (doc.certificate) {
    const auto& cert = *doc.certificate;
    json c;
    c["n"] = cert.n;
    c["E"] = matrix_to_json(cert.e);
    if (doc.curve.form == SpaceForm::Euclidean) c["beta"] = cert.beta;
    json polys = json::array();
    for (const auto& p : cert.p) {
      json coeffs = json::array();
      for (const auto& m : p.coeffs) coeffs.push_back(matrix_to_json(m));
      polys.push_back(std::move(coeffs));
    }
    c["polynomials"] = std::move(polys);
    j["certificate"] = std::move(c);
  }
  return j.dump(2);
}

CurveDocument document_from_json(const std::string& text, double tol) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  CurveDocument doc;
  try {
    if (j.at("schema_version").get<std::string>() != "1") {
      throw Error(Errc::ParseError, "unsupported schema version");
    }
    doc.curve.form = form_from_string(j.at("space_form").get<std::string>());
    doc.curve.periodic = j.value("periodic", false);
    for (const auto& v : j.at("vertices")) {
      Mat2C f;
      if (doc.curve.form == SpaceForm::Euclidean) {
        if (v.size() != 2) throw Error(Errc::ParseError, "E2 vertices have two coordinates");
        f = plane_point(v[0].get<double>(), v[1].get<double>());
      } else {
        if (v.size() != 3) throw Error(Errc::ParseError, "S2/H2 vertices have three coordinates");
        const double x = v[0].get<double>(), y = v[1].get<double>(), z = v[2].get<double>();
        f = doc.curve.form == SpaceForm::Spherical ? quaternion_from_coords(0, x, y, z)
                                                   : split_from_coords(0, x, y, z);
      }
      doc.curve.vertices.push_back(f);
    }
    for (int i = 0; i < doc.curve.size(); ++i) {
      if (!on_model(doc.curve.form, doc.curve.vertices[i], std::max(tol, 1e-9))) {
        throw Error(Errc::ParseError,
                    "vertex " + std::to_string(i) + " violates the model constraint");
      }
    }
    if (j.contains("certificate")) {
      const auto& c = j.at("certificate");
      InvarianceCertificate cert;
      cert.n = c.at("n").get<int>();
      cert.e = matrix_from_json(c.at("E"));
      cert.beta = c.value("beta", 0.0);
      for (const auto& coeffs : c.at("polynomials")) {
        QuatPoly p;
        for (const auto& m : coeffs) p.coeffs.push_back(matrix_from_json(m));
        cert.p.push_back(std::move(p));
      }
      if (static_cast<int>(cert.p.size()) != doc.curve.size()) {
        throw Error(Errc::ParseError, "certificate needs one polynomial per vertex");
      }
      if (!cert.p.empty()) {
        const auto tr = cert.p[0].half_trace();
        for (const auto& t : tr) cert.r.push_back(t.real());
        if (doc.curve.form == SpaceForm::Euclidean) {
          cert.theta = theta_invariants(cert.p[0]);
        }
      }
      doc.certificate = std::move(cert);
    }
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return doc;
}

void save_document(const CurveDocument& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::IOError, "cannot open '" + path + "' for writing");
  out << document_to_json(doc) << "\n";
  if (!out) throw Error(Errc::IOError, "write to '" + path + "' failed");
}

CurveDocument load_document(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IOError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return document_from_json(buffer.str(), tol);
}

}  // namespace sfc
