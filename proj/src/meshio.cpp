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

#include "meshio.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace deltadome {

namespace {

using nlohmann::json;

json ParseJsonText(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw Error(Code::kParse, std::string(what) + ": not valid JSON");
  return j;
}

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Face indices as written in OBJ records: 1-based, negative from the end.
int ObjIndex(const std::string& token, int v_count) {
  size_t slash = token.find('/');
  std::string head = slash == std::string::npos ? token : token.substr(0, slash);
  int idx = 0;
  try {
    size_t used = 0;
    idx = std::stoi(head, &used);
    if (used != head.size()) throw std::invalid_argument(head);
  } catch (const std::exception&) {
    throw Error(Code::kParse, "bad face index '" + token + "'");
  }
  int zero_based = idx > 0 ? idx - 1 : v_count + idx;
  if (idx == 0 || zero_based < 0 || zero_based >= v_count)
    throw Error(Code::kParse, "face index " + head + " outside 1.." +
                                  std::to_string(v_count));
  return zero_based;
}

void ValidateFaces(const Mesh& m, const char* what) {
  for (const std::vector<int>& f : m.faces) {
    if (f.size() < 3)
      throw Error(Code::kParse, std::string(what) + ": face with fewer than 3 vertices");
    for (int v : f)
      if (v < 0 || v >= m.V())
        throw Error(Code::kParse, std::string(what) + ": face index out of range");
  }
  if (m.base_face < -1 || m.base_face >= m.F())
    throw Error(Code::kParse, std::string(what) + ": base_face out of range");
}

}  // namespace

PolygonSpec ParsePolygonJson(const std::string& text) {
  json j = ParseJsonText(text, "polygon");
  if (!j.is_object() || !j.contains("edges") || !j["edges"].is_array())
    throw Error(Code::kParse, "polygon: expected {\"edges\": [..]}");
  PolygonSpec spec;
  for (const json& e : j["edges"]) {
    if (!e.is_number_integer())
      throw Error(Code::kParse, "polygon: edges must be integers");
    spec.edges.push_back(e.get<long long>());
  }
  return spec;
}

std::string PolygonJson(const PolygonSpec& spec) {
  json j;
  j["edges"] = spec.edges;
  return j.dump();
}

Mesh ParseMeshJson(const std::string& text) {
  json j = ParseJsonText(text, "mesh");
  if (!j.is_object() || !j.contains("vertices") || !j.contains("faces"))
    throw Error(Code::kParse, "mesh: expected vertices and faces arrays");
  Mesh m;
  for (const json& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 3 || !v[0].is_number())
      throw Error(Code::kParse, "mesh: each vertex is [x, y, z]");
    m.vertices.push_back(
        {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
  }
  for (const json& f : j["faces"]) {
    if (!f.is_array()) throw Error(Code::kParse, "mesh: faces are index lists");
    std::vector<int> face;
    for (const json& i : f) {
      if (!i.is_number_integer())
        throw Error(Code::kParse, "mesh: face indices must be integers");
      face.push_back(i.get<int>());
    }
    m.faces.push_back(std::move(face));
  }
  if (j.contains("base_face")) {
    if (!j["base_face"].is_number_integer())
      throw Error(Code::kParse, "mesh: base_face must be an integer");
    m.base_face = j["base_face"].get<int>();
  }
  ValidateFaces(m, "mesh");
  return m;
}

std::string MeshJson(const Mesh& mesh) {
  json j;
  j["vertices"] = json::array();
  for (const Vec3& v : mesh.vertices)
    j["vertices"].push_back({v.x, v.y, v.z});
  j["faces"] = mesh.faces;
  j["base_face"] = mesh.base_face;
  return j.dump();
}

Mesh ParseObj(const std::string& text) {
  Mesh m;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "v") {
      Vec3 p;
      if (!(ls >> p.x >> p.y >> p.z))
        throw Error(Code::kParse, "obj: bad vertex line '" + line + "'");
      m.vertices.push_back(p);
    } else if (key == "f") {
      std::vector<int> face;
      std::string tok;
      while (ls >> tok) face.push_back(ObjIndex(tok, m.V()));
      if (face.size() < 3)
        throw Error(Code::kParse, "obj: face with fewer than 3 vertices");
      m.faces.push_back(std::move(face));
    } else if (key == "#") {
      std::string tag;
      int idx;
      if (ls >> tag && tag == "base" && ls >> idx) m.base_face = idx;
    }
    // Normals, texture coordinates, groups and the like carry nothing we
    // track; skip them.
  }
  ValidateFaces(m, "obj");
  return m;
}

std::string MeshObj(const Mesh& mesh) {
  std::string out;
  out += "# deltadome mesh: " + std::to_string(mesh.V()) + " vertices, " +
         std::to_string(mesh.F()) + " faces\n";
  if (mesh.base_face >= 0)
    out += "# base " + std::to_string(mesh.base_face) + "\n";
  for (const Vec3& v : mesh.vertices)
    out += "v " + Num(v.x) + " " + Num(v.y) + " " + Num(v.z) + "\n";
  for (const std::vector<int>& f : mesh.faces) {
    out += "f";
    for (int i : f) out += " " + std::to_string(i + 1);
    out += "\n";
  }
  return out;
}

Mesh ParseMeshAuto(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? ParseMeshJson(text) : ParseObj(text);
  }
  throw Error(Code::kParse, "mesh: empty input");
}

Mesh Triangulated(const Mesh& mesh, const Tolerances& tol) {
  Mesh out;
  out.vertices = mesh.vertices;
  auto point = [&](const Vec3& p) {
    for (int i = 0; i < out.V(); ++i)
      if ((out.vertices[i] - p).Norm() <= tol.construct) return i;
    out.vertices.push_back(p);
    return out.V() - 1;
  };
  for (int f = 0; f < mesh.F(); ++f) {
    if (f == mesh.base_face) {
      // The base stays one polygon, its edges subdivided at the lattice
      // points so the result is edge to edge with the dome triangles.
      std::vector<int> loop;
      const std::vector<int>& bf = mesh.faces[f];
      for (size_t i = 0; i < bf.size(); ++i) {
        Vec3 a = mesh.vertices[bf[i]];
        Vec3 b = mesh.vertices[bf[(i + 1) % bf.size()]];
        long long len = std::max(1LL, std::llround((b - a).Norm()));
        loop.push_back(point(a));
        for (long long k = 1; k < len; ++k)
          loop.push_back(point(a + (b - a) * (static_cast<double>(k) / len)));
      }
      out.base_face = out.F();
      out.faces.push_back(loop);
      continue;
    }
    for (const UnitTri& t : DecomposeFaceUnits(mesh, f, tol))
      out.faces.push_back({point(t.p[0]), point(t.p[1]), point(t.p[2])});
  }
  return out;
}

std::string ConditionJson(const ConditionReport& r) {
  json j;
  j["n"] = r.n;
  j["closes"] = r.closes;
  j["n_admissible"] = r.n_admissible;
  j["odd_class_equal"] = r.odd_class_equal;
  j["parity"] = r.parity;
  j["domeable"] = r.domeable;
  j["detail"] = r.detail;
  return j.dump(2);
}

std::string DecideJson(const DecideOutcome& o) {
  json j;
  j["conditions"] = json::parse(ConditionJson(o.report));
  if (o.plan) {
    json p;
    p["kind"] = PlanKindName(o.plan->kind);
    p["edges"] = o.plan->spec.edges;
    p["parity"] = o.plan->parity;
    p["summary"] = o.plan->summary;
    j["plan"] = p;
  } else {
    j["plan"] = nullptr;
  }
  return j.dump(2);
}

std::string AuditJson(const AuditReport& r) {
  json j;
  j["passed"] = r.passed;
  j["failure"] = r.failure;
  j["n_base"] = r.n_base;
  j["V"] = r.V;
  j["E"] = r.E;
  j["F"] = r.F;
  j["unit_triangles"] = r.unit_triangles;
  j["checks"] = json::array();
  for (const CheckResult& c : r.checks) {
    json cj;
    cj["id"] = c.id;
    cj["passed"] = c.passed;
    cj["enforced"] = c.enforced;
    if (!c.message.empty()) cj["message"] = c.message;
    j["checks"].push_back(cj);
  }
  j["normals"]["d"] = r.normals.d;
  j["normals"]["down_face_ids"] = r.normals.down_face_ids;
  j["normals"]["up_face_ids"] = r.normals.up_face_ids;
  j["normals"]["all_base_angles_ge_120"] = r.normals.all_base_angles_ge_120;
  j["curvature"]["dome_v3"] = r.curvature.dome_v3;
  j["curvature"]["dome_v4"] = r.curvature.dome_v4;
  j["curvature"]["dome_v5"] = r.curvature.dome_v5;
  j["curvature"]["dome_v6"] = r.curvature.dome_v6;
  j["curvature"]["base_hypothesis_k3"] = r.curvature.base_hypothesis_k3;
  j["curvature"]["base_sum_deg"] = r.curvature.base_sum_deg;
  j["curvature"]["total_deg"] = r.curvature.total_deg;
  j["base_dihedrals_deg"] = r.base_dihedrals_deg;
  return j.dump(2);
}

std::string SearchJson(const SearchOutcome& o) {
  json j;
  j["found"] = o.found.has_value();
  j["templates_tried"] = o.templates_tried;
  j["embeddings_attempted"] = o.embeddings_attempted;
  j["budget_exceeded"] = o.budget_exceeded;
  j["certified"] = o.certified;
  j["detail"] = o.detail;
  j["mesh"] = o.found ? json::parse(MeshJson(*o.found)) : json(nullptr);
  return j.dump(2);
}

std::string GaussSweepJson(const GaussSweep& s) {
  json j;
  j["samples"] = s.samples;
  j["failures"] = s.failures;
  j["swapped"] = s.swapped;
  j["max_cross_error_deg"] = s.max_cross_error_deg;
  j["passed"] = s.failures == 0;
  return j.dump(2);
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Code::kParse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Code::kParse, "cannot open " + path + " for writing");
  out << text;
  if (!out.flush()) throw Error(Code::kParse, "short write to " + path);
}

}  // namespace deltadome
