// End-to-end driver for the command line tool. Invoked by ctest with the
// binary path and a scratch directory.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;
std::string g_dir;
int g_failures = 0;

int run(const std::string& args) {
  const std::string cmd = g_binary + " " + args + " 2>" + g_dir + "/stderr.txt";
  const int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void expect(bool ok, const std::string& what) {
  if (ok) {
    std::printf("ok   %s\n", what.c_str());
  } else {
    std::printf("FAIL %s\n", what.c_str());
    ++g_failures;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <sfcurve-binary> <scratch-dir>\n", argv[0]);
    return 2;
  }
  g_binary = argv[1];
  g_dir = argv[2];

  const std::string doc = g_dir + "/curve.json";
  const std::string doc2 = g_dir + "/curve2.json";

  expect(run("generate clothoid --space E2 --a 0.1 --n 60 --out " + doc) == 0,
         "generate clothoid");
  expect(run("analyze " + doc) == 0, "analyze clothoid passes");

  expect(run("generate circle --space H2 --kappa 2 --eta 0.3 --n 40 --out " + doc) == 0,
         "generate H2 circle");
  expect(run("analyze " + doc + " --csv " + g_dir + "/kappa.csv") == 0, "analyze H2 circle");
  {
    const std::string csv = slurp(g_dir + "/kappa.csv");
    expect(csv.rfind("vertex_index,kappa", 0) == 0, "csv header");
    expect(csv.find("\n1,") != std::string::npos, "csv rows");
  }

  expect(run("generate elastic --xi 2.1 --eta 0.3 --k0 0.8 --n 120 --out " + doc) == 0,
         "generate elastic");
  expect(run("transform associated --lambda 1 --in " + doc + " --out " + doc2) == 0,
         "associated transform to S2");
  expect(run("analyze " + doc2) == 0, "transformed curve passes analyze");
  {
    const std::string text = slurp(doc2);
    expect(text.find("\"space_form\": \"S2\"") != std::string::npos, "transform target is S2");
  }

  // determinism: byte-identical regeneration
  expect(run("generate elastic --xi 2.1 --eta 0.3 --k0 0.8 --n 120 --out " + doc2) == 0,
         "regenerate elastic");
  expect(slurp(doc) == slurp(doc2), "deterministic output");

  // backlund on a line makes an elastic Euler loop
  expect(run("generate geodesic --space E2 --eta 0.5 --n 40 --out " + doc) == 0,
         "generate line");
  expect(run("transform backlund --init 0 0.35 --in " + doc + " --out " + doc2) == 0,
         "backlund transform");
  expect(run("analyze " + doc2 + " > " + g_dir + "/loop.json") == 0, "analyze loop");
  {
    const std::string rep = slurp(g_dir + "/loop.json");
    expect(rep.find("\"kind\": \"line\"") != std::string::npos, "loop has a line directrix");
  }

  // renders
  expect(run("render " + doc2 + " --out " + g_dir + "/loop.svg --tangents --circles "
             "--directrix") == 0,
         "render with overlays");
  expect(slurp(g_dir + "/loop.svg").find("<svg") == 0, "svg written");

  // flow emits one document with a valid certificate per step
  expect(run("generate constrained-elastic --xi 1.9 --delta 0.3 --eta 0.4 --k0 0.6 --n 40 "
             "--out " + doc) == 0,
         "generate constrained elastic");
  expect(run("transform flow --n 3 --steps 2 --in " + doc + " --out-prefix " + g_dir +
             "/step_") == 0,
         "flow steps");
  expect(run("analyze " + g_dir + "/step_002.json --expect-certificate") == 0,
         "flow output certified");

  // failure modes: corrupted vertex -> exit 1 naming the vertex
  {
    std::string text = slurp(doc);
    const auto pos = text.find("0.6");
    if (pos != std::string::npos) text.replace(pos, 3, "9.9");
    std::ofstream out(g_dir + "/broken.json");
    out << text;
  }
  expect(run("analyze " + g_dir + "/broken.json > " + g_dir + "/broken_report.json") == 1,
         "corrupted vertex fails analyze");
  {
    const std::string rep = slurp(g_dir + "/broken_report.json");
    expect(rep.find("vertex") != std::string::npos || rep.find("edge") != std::string::npos,
           "failure names the location");
  }

  // usage and io errors
  expect(run("generate nonsense --out " + doc) == 2, "usage error exits 2");
  expect(run("analyze " + g_dir + "/missing.json") == 3, "missing file exits 3");

  std::printf("%d failure(s)\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
