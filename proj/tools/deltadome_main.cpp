// Copyright 2026 The Deltadome Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line front end. Links only the public C API so it doubles as a
// smoke test of the shared library surface.
//
// Exit codes: 0 success or pass, 1 negative result (not domeable, audit
// failed, nothing found), 2 input error, 3 internal inconsistency.

#include "deltadome.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct StringOut {
  char* ptr = nullptr;
  ~StringOut() { dd_string_free(ptr); }
  std::string Str() const { return ptr ? ptr : ""; }
};

struct MeshOut {
  dd_mesh* ptr = nullptr;
  ~MeshOut() { dd_mesh_free(ptr); }
};

// Library statuses that signal bad input versus a broken invariant. A
// negative decision (DD_ERR_NOT_DOMEABLE) is a result, not an error.
int ExitFor(int status) {
  switch (status) {
    case DD_OK:
      return kExitPass;
    case DD_ERR_NOT_DOMEABLE:
      return kExitNegative;
    case DD_ERR_INVALID_ARGUMENT:
    case DD_ERR_NOT_CLOSED:
    case DD_ERR_PARSE:
    case DD_ERR_OUT_OF_RANGE:
      return kExitInput;
    default:
      return kExitInternal;
  }
}

int Complain(int status) {
  std::cerr << "error: " << dd_status_name(status) << ": " << dd_last_error()
            << "\n";
  return ExitFor(status);
}

int ComplainInput(const std::string& what) {
  std::cerr << "error: " << what << "\n";
  return kExitInput;
}

// Polygon input, either --edges 1,2,1,2 or a JSON file {"edges": [...]}.
struct PolygonArgs {
  std::vector<long long> edges;
  std::string file;

  void Attach(CLI::App* cmd) {
    cmd->add_option("--edges", edges,
                    "edge lengths of the equiangular polygon, in order")
        ->delimiter(',');
    cmd->add_option("polygon", file, "polygon JSON file {\"edges\": [...]}");
  }

  // Returns kExitPass and fills edges, or an exit code on bad input.
  int Resolve() {
    if (!edges.empty() && !file.empty())
      return ComplainInput("give either --edges or a polygon file, not both");
    if (edges.empty() && file.empty())
      return ComplainInput("missing polygon: use --edges or a polygon file");
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) return ComplainInput("cannot open " + file);
      nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
      if (doc.is_discarded() || !doc.is_object() || !doc.contains("edges") ||
          !doc["edges"].is_array())
        return ComplainInput(file + ": expected {\"edges\": [...]}");
      for (const auto& e : doc["edges"]) {
        if (!e.is_number_integer())
          return ComplainInput(file + ": edges must be integers");
        edges.push_back(e.get<long long>());
      }
    }
    if (edges.empty()) return ComplainInput("polygon has no edges");
    return kExitPass;
  }
};

int WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return kExitPass;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) return ComplainInput("cannot write " + path);
  return kExitPass;
}

int ReadFile(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return ComplainInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  *out = buf.str();
  return kExitPass;
}

int SerializeMesh(const dd_mesh* mesh, const std::string& format,
                  std::string* out) {
  StringOut text;
  int st = format == "json" ? dd_mesh_json(mesh, &text.ptr)
                            : dd_mesh_obj(mesh, &text.ptr);
  if (st != DD_OK) return Complain(st);
  *out = text.Str();
  return kExitPass;
}

int RunDecide(PolygonArgs& poly) {
  if (int rc = poly.Resolve()) return rc;
  StringOut report;
  int st = dd_decide(poly.edges.data(), static_cast<int>(poly.edges.size()),
                     &report.ptr);
  if (st != DD_OK) return Complain(st);
  std::cout << report.Str() << "\n";
  nlohmann::json doc = nlohmann::json::parse(report.Str());
  return doc["conditions"].value("domeable", false) ? kExitPass
                                                    : kExitNegative;
}

int RunBuild(PolygonArgs& poly, const std::string& out_path,
             const std::string& format, bool triangulate, double eps) {
  if (int rc = poly.Resolve()) return rc;
  const int n = static_cast<int>(poly.edges.size());
  MeshOut mesh;
  int st = dd_build(poly.edges.data(), n, eps, &mesh.ptr);
  if (st != DD_OK) return Complain(st);
  if (triangulate) {
    MeshOut tri;
    st = dd_mesh_triangulate(mesh.ptr, eps, &tri.ptr);
    if (st != DD_OK) return Complain(st);
    std::swap(mesh.ptr, tri.ptr);
  }
  // Audit the exact mesh being written; a failure here is our bug.
  int passed = 0;
  st = dd_verify(mesh.ptr, poly.edges.data(), n, eps, &passed, nullptr);
  if (st != DD_OK) return Complain(st);
  if (!passed) {
    std::cerr << "error: built mesh failed its own audit\n";
    return kExitInternal;
  }
  std::string text;
  if (int rc = SerializeMesh(mesh.ptr, format, &text)) return rc;
  return WriteOutput(out_path, text);
}

int RunVerify(const std::string& mesh_path, PolygonArgs& poly, int base_face,
              bool any_base, double eps) {
  std::string text;
  if (int rc = ReadFile(mesh_path, &text)) return rc;
  const long long* edges = nullptr;
  int n = 0;
  if (!poly.edges.empty() || !poly.file.empty()) {
    if (int rc = poly.Resolve()) return rc;
    edges = poly.edges.data();
    n = static_cast<int>(poly.edges.size());
  }

  auto verify_once = [&](int base, StringOut* report, int* passed) {
    MeshOut mesh;
    int st = dd_mesh_parse(text.c_str(), &mesh.ptr);
    if (st != DD_OK) return st;
    if (base >= 0) {
      st = dd_mesh_set_base(mesh.ptr, base);
      if (st != DD_OK) return st;
    }
    return dd_verify(mesh.ptr, edges, n, eps, passed,
                     report ? &report->ptr : nullptr);
  };

  if (any_base) {
    // Convenience: does any face work as the base? Try them all.
    MeshOut probe;
    int st = dd_mesh_parse(text.c_str(), &probe.ptr);
    if (st != DD_OK) return Complain(st);
    int faces = 0;
    st = dd_mesh_counts(probe.ptr, nullptr, nullptr, &faces);
    if (st != DD_OK) return Complain(st);
    for (int f = 0; f < faces; ++f) {
      StringOut report;
      int passed = 0;
      st = verify_once(f, &report, &passed);
      if (st != DD_OK) return Complain(st);
      if (passed) {
        std::cout << report.Str() << "\n";
        std::cerr << "face " << f << " serves as base\n";
        return kExitPass;
      }
    }
    std::cerr << "no face serves as base among " << faces << "\n";
    return kExitNegative;
  }

  StringOut report;
  int passed = 0;
  int st = verify_once(base_face, &report, &passed);
  if (st != DD_OK) return Complain(st);
  std::cout << report.Str() << "\n";
  return passed ? kExitPass : kExitNegative;
}

int RunSearch(PolygonArgs& poly, const dd_search_budget& budget,
              const std::string& out_path, const std::string& format,
              double eps) {
  if (int rc = poly.Resolve()) return rc;
  StringOut report;
  MeshOut mesh;
  int st = dd_search(poly.edges.data(), static_cast<int>(poly.edges.size()),
                     &budget, eps, &report.ptr, &mesh.ptr);
  if (st != DD_OK) return Complain(st);
  std::cout << report.Str() << "\n";
  if (!mesh.ptr) return kExitNegative;
  if (!out_path.empty()) {
    std::string text;
    if (int rc = SerializeMesh(mesh.ptr, format, &text)) return rc;
    if (int rc = WriteOutput(out_path, text)) return rc;
  }
  return kExitPass;
}

int RunGaussCheck(int count, unsigned seed, double eps) {
  StringOut report;
  int st = dd_gauss_sweep(count, seed, eps, &report.ptr);
  if (st != DD_OK) return Complain(st);
  std::cout << report.Str() << "\n";
  nlohmann::json doc = nlohmann::json::parse(report.Str());
  return doc.value("passed", false) ? kExitPass : kExitNegative;
}

int RunExport(const std::string& mesh_path, const std::string& out_path,
              const std::string& format, bool triangulate, double eps) {
  std::string text;
  if (int rc = ReadFile(mesh_path, &text)) return rc;
  MeshOut mesh;
  int st = dd_mesh_parse(text.c_str(), &mesh.ptr);
  if (st != DD_OK) return Complain(st);
  if (triangulate) {
    MeshOut tri;
    st = dd_mesh_triangulate(mesh.ptr, eps, &tri.ptr);
    if (st != DD_OK) return Complain(st);
    std::swap(mesh.ptr, tri.ptr);
  }
  std::string out;
  if (int rc = SerializeMesh(mesh.ptr, format, &out)) return rc;
  return WriteOutput(out_path, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deltahedral domes over equiangular integer polygons"};
  app.set_version_flag("--version", std::string(dd_version()));
  app.require_subcommand(1);

  // DELTADOME_EPS overrides the verification tolerance everywhere.
  double eps = 0;
  if (const char* env = std::getenv("DELTADOME_EPS"); env && *env) {
    char* end = nullptr;
    eps = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(eps > 0))
      return ComplainInput(std::string("DELTADOME_EPS: bad tolerance '") +
                           env + "'");
  }

  PolygonArgs decide_poly;
  CLI::App* decide = app.add_subcommand(
      "decide", "report whether the polygon admits a dome");
  decide_poly.Attach(decide);

  PolygonArgs build_poly;
  std::string build_out, build_format = "obj";
  bool build_tri = false;
  CLI::App* build =
      app.add_subcommand("build", "construct a dome mesh over the polygon");
  build_poly.Attach(build);
  build->add_option("--out", build_out, "output file (default stdout)");
  build->add_option("--format", build_format, "obj or json")
      ->check(CLI::IsMember({"obj", "json"}));
  build->add_flag("--triangulate", build_tri,
                  "emit unit triangles instead of merged faces");

  PolygonArgs verify_poly;
  std::string verify_mesh;
  int verify_base = -1;
  bool verify_any = false;
  CLI::App* verify =
      app.add_subcommand("verify", "audit a mesh file as a dome");
  verify->add_option("mesh", verify_mesh, "mesh file, OBJ or JSON")
      ->required();
  verify->add_option("--edges", verify_poly.edges,
                     "expected base edge lengths, in order")
      ->delimiter(',');
  verify->add_option("--polygon", verify_poly.file,
                     "expected polygon JSON file");
  verify->add_option("--base-face", verify_base,
                     "treat this face index as the base");
  verify->add_flag("--any-base", verify_any,
                   "pass if any face can serve as the base");

  PolygonArgs search_poly;
  dd_search_budget budget;
  dd_search_budget_init(&budget);
  std::string search_out, search_format = "obj";
  CLI::App* search = app.add_subcommand(
      "search", "enumerate dome templates and try to embed them");
  search_poly.Attach(search);
  search->add_option("--max-dome-vertices", budget.max_dome_vertices,
                     "dome vertex budget per template");
  search->add_option("--max-flat-vertices", budget.max_flat_vertices,
                     "interior flat vertex budget per template");
  search->add_option("--max-templates", budget.max_templates,
                     "stop after this many templates");
  search->add_option("--restarts", budget.restarts,
                     "embedding attempts per template");
  search->add_option("--seed", budget.seed, "random seed");
  search->add_option("--time-limit", budget.wall_clock_seconds,
                     "wall clock cap in seconds");
  search->add_option("--out", search_out, "write the found mesh here");
  search->add_option("--format", search_format, "obj or json")
      ->check(CLI::IsMember({"obj", "json"}));

  int gauss_count = 1000;
  unsigned gauss_seed = 1;
  CLI::App* gauss = app.add_subcommand(
      "gauss-check", "sample vertex stars and check their normal signs");
  gauss->add_option("--count", gauss_count, "number of sampled stars");
  gauss->add_option("--seed", gauss_seed, "random seed");

  std::string export_mesh, export_out, export_format = "obj";
  bool export_tri = false;
  CLI::App* exporter =
      app.add_subcommand("export", "convert a mesh file between formats");
  exporter->add_option("mesh", export_mesh, "mesh file, OBJ or JSON")
      ->required();
  exporter->add_option("--out", export_out, "output file (default stdout)");
  exporter->add_option("--format", export_format, "obj or json")
      ->check(CLI::IsMember({"obj", "json"}));
  exporter->add_flag("--triangulate", export_tri,
                     "emit unit triangles instead of merged faces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitInput;
  }

  if (*decide) return RunDecide(decide_poly);
  if (*build)
    return RunBuild(build_poly, build_out, build_format, build_tri, eps);
  if (*verify)
    return RunVerify(verify_mesh, verify_poly, verify_base, verify_any, eps);
  if (*search)
    return RunSearch(search_poly, budget, search_out, search_format, eps);
  if (*gauss) return RunGaussCheck(gauss_count, gauss_seed, eps);
  if (*exporter)
    return RunExport(export_mesh, export_out, export_format, export_tri, eps);
  return kExitInput;
}
