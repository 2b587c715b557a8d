// Command line front end: generate, analyze, transform and render
// discrete constant arc-length curves in the three space forms.
//
// Exit codes: 0 success, 1 check failed, 2 usage error, 3 I/O error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sfcurve/document.hpp"
#include "sfcurve/elastic.hpp"
#include "sfcurve/family.hpp"
#include "sfcurve/svg.hpp"

namespace {

using namespace sfc;
using nlohmann::json;

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

SpaceForm parse_space(const std::string& name) {
  if (name == "E2") return SpaceForm::Euclidean;
  if (name == "S2") return SpaceForm::Spherical;
  if (name == "H2") return SpaceForm::Hyperbolic;
  throw CLI::ValidationError("--space", "expected E2, S2 or H2");
}

// lambda values: a real number or an imaginary one written like "0.5i"
Complex parse_lambda(std::string text) {
  bool imaginary = false;
  if (!text.empty() && (text.back() == 'i' || text.back() == 'I')) {
    imaginary = true;
    text.pop_back();
  }
  if (text.empty() || text == "-" || text == "+") text += "1";
  size_t used = 0;
  const double value = std::stod(text, &used);
  if (used != text.size()) {
    throw CLI::ValidationError("--lambda", "expected a real value or '<mu>i'");
  }
  return imaginary ? Complex(0.0, value) : Complex(value);
}

CurveDocument read_input(const std::string& path, double tol) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return document_from_json(buffer.str(), tol);
  }
  return load_document(path, tol);
}

void write_output(const CurveDocument& doc, const std::string& path) {
  if (path == "-") {
    std::cout << document_to_json(doc) << "\n";
    return;
  }
  save_document(doc, path);
}

int run_generate(const std::string& kind, SpaceForm form, double eta, int n, double kappa,
                 double a, double xi, double delta, double k0, double km1,
                 const std::string& out) {
  if (n < 3) throw Error(Errc::TooShort, "need at least 3 vertices");
  std::vector<double> curvature_values(n - 2, 0.0);
  if (kind == "geodesic") {
    // all zeros
  } else if (kind == "circle") {
    std::fill(curvature_values.begin(), curvature_values.end(), kappa);
  } else if (kind == "clothoid") {
    for (int i = 0; i < n - 2; ++i) curvature_values[i] = a * i;
  } else if (kind == "elastic" || kind == "constrained-elastic") {
    const double d = kind == "elastic" ? 0.0 : delta;
    const ElasticParams params = ElasticParams::make(form, xi, d, eta);
    const double start = std::isnan(km1) ? k0 : km1;
    curvature_values = kappa_recursion(params, start, k0, n - 2);
  } else {
    throw CLI::ValidationError("kind", "expected geodesic|circle|clothoid|elastic|constrained-elastic");
  }

  CurveDocument doc;
  doc.curve = integrate_curvature(form, eta, curvature_values);
  write_output(doc, out);
  return 0;
}

int run_analyze(const std::string& input, const std::string& csv, double tol, bool expect_cert) {
  const CurveDocument doc = read_input(input, tol);
  json report;
  report["space_form"] = space_form_name(doc.curve.form);
  report["n_vertices"] = doc.curve.size();

  bool pass = true;
  try {
    validate_curve(doc.curve, tol);
    report["regular"] = true;
  } catch (const Error& e) {
    report["regular"] = false;
    report["regularity_error"] = e.what();
    pass = false;
  }
  report["eta"] = curve_eta(doc.curve);
  report["zeta"] = curve_zeta(doc.curve);
  report["arclength_deviation"] = arclength_deviation(doc.curve);

  if (report["regular"].get<bool>()) {
    const auto kappa = curvature(doc.curve);
    json klist = json::array();
    for (const int i : doc.curve.interior_indices()) klist.push_back(kappa[i]);
    report["kappa"] = std::move(klist);

    double frenet = 0.0;
    for (const auto& r : frenet_residuals(doc.curve)) frenet = std::max(frenet, r.max());
    report["frenet_max_residual"] = frenet;
    if (frenet > std::max(tol, 1e-8)) pass = false;

    try {
      const auto fit = curvature_equation_fit(doc.curve, tol);
      report["fit"] = {{"xi", fit.xi},
                       {"delta", fit.delta},
                       {"max_residual", fit.max_residual},
                       {"non_unique", fit.non_unique}};
      if (doc.curve.form == SpaceForm::Euclidean && fit.max_residual <= std::sqrt(tol)) {
        const auto dir = euclidean_directrix(doc.curve, tol);
        json d;
        d["kind"] = dir.kind == Directrix::Kind::Line
                        ? "line"
                        : (dir.kind == Directrix::Kind::Circle ? "circle" : "imaginary-circle");
        if (dir.kind == Directrix::Kind::Line) {
          d["normal"] = {dir.nx, dir.ny};
          d["distance"] = dir.dist;
        } else {
          d["center"] = {dir.cx, dir.cy};
          d["radius_squared"] = dir.rho;
        }
        d["law_constant"] = dir.c;
        d["law_residual"] = dir.law_residual;
        report["directrix"] = std::move(d);
      }
    } catch (const Error&) {
      report["fit"] = nullptr;
    }

    if (doc.certificate) {
      const auto rep = verify_certificate(doc.curve, *doc.certificate, tol);
      json c;
      c["n"] = doc.certificate->n;
      c["valid"] = rep.valid;
      if (!rep.valid) c["failure"] = rep.failure;
      c["evolution_residual"] = rep.evolution_residual;
      c["trace_drift"] = rep.trace_drift;
      c["det_drift"] = rep.det_drift;
      if (doc.curve.form == SpaceForm::Euclidean) {
        c["theta"] = doc.certificate->theta;
        c["beta"] = doc.certificate->beta;
        c["theta_drift"] = rep.theta_drift;
        c["beta_identity_residual"] = rep.beta_identity;
      }
      report["certificate"] = std::move(c);
      if (!rep.valid) pass = false;
    } else {
      report["certificate"] = nullptr;
      if (expect_cert) pass = false;
    }
  }
  report["checks_passed"] = pass;
  std::cout << report.dump(2) << "\n";

  if (!csv.empty() && report.contains("kappa")) {
    std::ofstream out(csv);
    if (!out) throw Error(Errc::IOError, "cannot open '" + csv + "'");
    out << "vertex_index,kappa\n";
    const auto kappa = curvature(doc.curve);
    for (const int i : doc.curve.interior_indices()) {
      char line[64];
      std::snprintf(line, sizeof line, "%d,%.17g\n", i, kappa[i]);
      out << line;
    }
  }
  return pass ? 0 : kExitChecksFailed;
}

int run_transform_associated(const std::string& input, const std::string& lambda_text,
                             const std::string& out, double tol) {
  const CurveDocument doc = read_input(input, tol);
  const Complex lambda = parse_lambda(lambda_text);
  CurveDocument result;
  if (doc.certificate) {
    // carry the certified sequence through the family
    const auto cert = certify_invariance(doc.curve, tol);
    BacklundSequence transported = family_on_sequence(cert.sequence, lambda, tol);
    result.curve = transported.first();
    result.certificate = certificate_from_sequence(transported);
  } else {
    result.curve = associated_transform(doc.curve, lambda, tol);
  }
  write_output(result, out);
  return 0;
}

int run_transform_backlund(const std::string& input, const std::vector<double>& init,
                           const std::string& out, double tol) {
  const CurveDocument doc = read_input(input, tol);
  Mat2C seed;
  if (doc.curve.form == SpaceForm::Euclidean) {
    if (init.size() != 2) throw CLI::ValidationError("--init", "E2 seeds have two coordinates");
    seed = plane_point(init[0], init[1]);
  } else {
    if (init.size() != 3) throw CLI::ValidationError("--init", "S2/H2 seeds have three coordinates");
    seed = doc.curve.form == SpaceForm::Spherical
               ? quaternion_from_coords(0, init[0], init[1], init[2])
               : split_from_coords(0, init[0], init[1], init[2]);
  }
  CurveDocument result;
  result.curve = backlund_transform(doc.curve, seed);
  write_output(result, out);
  return 0;
}

int run_transform_flow(const std::string& input, int n, int steps, const std::string& prefix,
                       double tol) {
  CurveDocument doc = read_input(input, tol);
  DiscreteCurve current = doc.curve;
  ElasticCertification cert = certify_invariance(current, tol);
  if (cert.certificate.n > n) {
    throw Error(Errc::ConditionViolated, "curve certifies at order " +
                                             std::to_string(cert.certificate.n) + ", not " +
                                             std::to_string(n));
  }
  for (int step = 1; step <= steps; ++step) {
    DiscreteCurve next = cert.sequence.last();
    const auto fit = fit_isometry(next.form, cert.sequence.first().vertices, next.vertices);
    cert = certify_invariance(next, tol);
    CurveDocument out;
    out.curve = std::move(next);
    out.certificate = cert.certificate;
    char path[512];
    std::snprintf(path, sizeof path, "%s%03d.json", prefix.c_str(), step);
    save_document(out, path);
    std::fprintf(stderr, "step %d: isometry residual %.3e\n", step, fit.residual);
    current = cert.sequence.first();
  }
  return 0;
}

int run_render(const std::vector<std::string>& inputs, const std::string& out, bool tangents,
               bool circles, bool directrix, double tol) {
  std::vector<DiscreteCurve> curves;
  for (const auto& path : inputs) {
    curves.push_back(read_input(path, tol).curve);
  }
  RenderOptions options;
  options.tangents = tangents;
  options.circles = circles;
  options.directrix = directrix;
  save_svg(curves, options, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete constant arc-length curves in space forms"};
  app.require_subcommand(1);
  double tol = 1e-9;
  app.add_option("--tol", tol, "global tolerance")->capture_default_str();

  // generate
  auto* generate = app.add_subcommand("generate", "generate a curve document");
  std::string kind, space = "E2", out = "-";
  double eta = 0.5, kappa = 1.0, accel = 0.1, xi = 2.0, delta = 0.2, k0 = 0.5;
  double km1 = std::numeric_limits<double>::quiet_NaN();
  int n = 40;
  generate->add_option("kind", kind, "geodesic|circle|clothoid|elastic|constrained-elastic")
      ->required();
  generate->add_option("--space", space, "E2|S2|H2")->capture_default_str();
  generate->add_option("--eta", eta, "arc-length parameter")->capture_default_str();
  generate->add_option("--n", n, "vertex count")->capture_default_str();
  generate->add_option("--kappa", kappa, "curvature (circle)")->capture_default_str();
  generate->add_option("--a", accel, "curvature slope (clothoid)")->capture_default_str();
  generate->add_option("--xi", xi, "curvature equation xi")->capture_default_str();
  generate->add_option("--delta", delta, "curvature equation delta")->capture_default_str();
  generate->add_option("--k0", k0, "initial curvature")->capture_default_str();
  generate->add_option("--km1", km1, "curvature before k0 (defaults to k0)");
  generate->add_option("--out", out, "output file or -")->capture_default_str();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "report curve quantities and checks");
  std::string analyze_input = "-", csv;
  bool expect_cert = false;
  analyze->add_option("input", analyze_input, "curve document or -");
  analyze->add_option("--csv", csv, "write vertex_index,kappa table");
  analyze->add_flag("--expect-certificate", expect_cert, "fail when no certificate is attached");

  // transform
  auto* transform = app.add_subcommand("transform", "transform a curve document");
  transform->require_subcommand(1);
  auto* associated = transform->add_subcommand("associated", "associated family transform");
  std::string lambda_text = "1", trans_in = "-", trans_out = "-";
  associated->add_option("--lambda", lambda_text, "real or imaginary like 0.5i")
      ->capture_default_str();
  associated->add_option("--in", trans_in, "input document")->capture_default_str();
  associated->add_option("--out", trans_out, "output document")->capture_default_str();
  auto* backlund = transform->add_subcommand("backlund", "Backlund transformation");
  std::vector<double> init;
  std::string bl_in = "-", bl_out = "-";
  backlund->add_option("--init", init, "initial point coordinates")->expected(2, 3)->required();
  backlund->add_option("--in", bl_in, "input document")->capture_default_str();
  backlund->add_option("--out", bl_out, "output document")->capture_default_str();
  auto* flow = transform->add_subcommand("flow", "repeated n-step Backlund flow");
  int flow_n = 2, flow_steps = 1;
  std::string flow_in = "-", flow_prefix = "flow_";
  flow->add_option("--n", flow_n, "invariance order")->capture_default_str();
  flow->add_option("--steps", flow_steps, "number of flow steps")->capture_default_str();
  flow->add_option("--in", flow_in, "input document")->capture_default_str();
  flow->add_option("--out-prefix", flow_prefix, "output file prefix")->capture_default_str();

  // render
  auto* render = app.add_subcommand("render", "render documents to SVG");
  std::vector<std::string> render_inputs;
  std::string render_out = "out.svg";
  bool tangents = false, circles = false, directrix = false;
  render->add_option("inputs", render_inputs, "curve documents")->required();
  render->add_option("--out", render_out, "output SVG file")->capture_default_str();
  render->add_flag("--tangents", tangents, "draw tangent geodesics");
  render->add_flag("--circles", circles, "draw double-curvature circles");
  render->add_flag("--directrix", directrix, "draw the directrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (generate->parsed()) {
      return run_generate(kind, parse_space(space), eta, n, kappa, accel, xi, delta, k0, km1,
                          out);
    }
    if (analyze->parsed()) {
      return run_analyze(analyze_input, csv, tol, expect_cert);
    }
    if (transform->parsed()) {
      if (associated->parsed()) {
        return run_transform_associated(trans_in, lambda_text, trans_out, tol);
      }
      if (backlund->parsed()) {
        return run_transform_backlund(bl_in, init, bl_out, tol);
      }
      if (flow->parsed()) {
        return run_transform_flow(flow_in, flow_n, flow_steps, flow_prefix, tol);
      }
    }
    if (render->parsed()) {
      return run_render(render_inputs, render_out, tangents, circles, directrix, tol);
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return (e.code() == Errc::IOError || e.code() == Errc::ParseError) ? kExitIo
                                                                       : kExitChecksFailed;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitChecksFailed;
  }
  return kExitUsage;
}
