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

#include "deltadome.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "constructors.hpp"
#include "gaussmap.hpp"
#include "geom.hpp"
#include "mesh.hpp"
#include "meshio.hpp"
#include "polygon.hpp"
#include "search.hpp"
#include "verifier.hpp"

struct dd_mesh {
  deltadome::Mesh impl;
};

namespace {

using deltadome::Code;
using deltadome::Error;
using deltadome::Tolerances;

// Error(code) crosses the boundary by value, so the enums must agree.
static_assert(static_cast<int>(Code::kOk) == DD_OK);
static_assert(static_cast<int>(Code::kInvalidArgument) ==
              DD_ERR_INVALID_ARGUMENT);
static_assert(static_cast<int>(Code::kNotClosed) == DD_ERR_NOT_CLOSED);
static_assert(static_cast<int>(Code::kNotDomeable) == DD_ERR_NOT_DOMEABLE);
static_assert(static_cast<int>(Code::kApexDegenerate) ==
              DD_ERR_APEX_DEGENERATE);
static_assert(static_cast<int>(Code::kNotPolyiamond) ==
              DD_ERR_NOT_POLYIAMOND);
static_assert(static_cast<int>(Code::kBandMismatch) == DD_ERR_BAND_MISMATCH);
static_assert(static_cast<int>(Code::kDegenerateMesh) ==
              DD_ERR_DEGENERATE_MESH);
static_assert(static_cast<int>(Code::kParse) == DD_ERR_PARSE);
static_assert(static_cast<int>(Code::kOutOfRange) == DD_ERR_OUT_OF_RANGE);
static_assert(static_cast<int>(Code::kInternal) == DD_ERR_INTERNAL);

thread_local std::string t_last_error;

int Fail(int status, const char* what) {
  t_last_error = what;
  return status;
}

// Runs fn and funnels every failure into a status code plus t_last_error.
// The C boundary must not leak exceptions.
template <typename Fn>
int Guard(Fn&& fn) {
  try {
    fn();
    return DD_OK;
  } catch (const Error& e) {
    return Fail(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Fail(DD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(DD_ERR_INTERNAL, e.what());
  }
}

char* CopyString(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

deltadome::PolygonSpec SpecFrom(const long long* edges, int n) {
  if (edges == nullptr || n < 1)
    throw Error(Code::kInvalidArgument, "edges array is empty");
  return deltadome::PolygonSpec{std::vector<long long>(edges, edges + n)};
}

Tolerances TolFrom(double eps) {
  Tolerances tol;
  if (eps > 0) {
    tol.verify = eps;
    tol.angle_deg = eps;
    if (tol.construct > eps) tol.construct = eps;
  }
  if (!tol.Valid()) throw Error(Code::kInvalidArgument, "invalid tolerance");
  return tol;
}

template <typename T>
T& Deref(T* p, const char* what) {
  if (p == nullptr) throw Error(Code::kInvalidArgument, what);
  return *p;
}

}  // namespace

extern "C" {

const char* dd_version(void) { return "1.0.0"; }

const char* dd_status_name(int status) {
  switch (status) {
    case DD_OK:
      return "ok";
    case DD_ERR_INVALID_ARGUMENT:
      return "invalid-argument";
    case DD_ERR_NOT_CLOSED:
      return "not-closed";
    case DD_ERR_NOT_DOMEABLE:
      return "not-domeable";
    case DD_ERR_APEX_DEGENERATE:
      return "apex-degenerate";
    case DD_ERR_NOT_POLYIAMOND:
      return "not-polyiamond";
    case DD_ERR_BAND_MISMATCH:
      return "band-mismatch";
    case DD_ERR_DEGENERATE_MESH:
      return "degenerate-mesh";
    case DD_ERR_PARSE:
      return "parse";
    case DD_ERR_OUT_OF_RANGE:
      return "out-of-range";
    case DD_ERR_INTERNAL:
      return "internal";
    default:
      return "unknown";
  }
}

const char* dd_last_error(void) { return t_last_error.c_str(); }

void dd_string_free(char* text) { delete[] text; }

void dd_mesh_free(dd_mesh* mesh) { delete mesh; }

int dd_decide(const long long* edges, int n, char** out_json) {
  return Guard([&] {
    char*& out = Deref(out_json, "out_json is null");
    out = nullptr;
    const deltadome::DecideOutcome o =
        deltadome::Decide(SpecFrom(edges, n), Tolerances::Default());
    out = CopyString(deltadome::DecideJson(o));
  });
}

int dd_build(const long long* edges, int n, double eps, dd_mesh** out_mesh) {
  return Guard([&] {
    dd_mesh*& out = Deref(out_mesh, "out_mesh is null");
    out = nullptr;
    deltadome::Mesh m = deltadome::BuildDome(SpecFrom(edges, n), TolFrom(eps));
    out = new dd_mesh{std::move(m)};
  });
}

int dd_mesh_parse(const char* text, dd_mesh** out_mesh) {
  return Guard([&] {
    dd_mesh*& out = Deref(out_mesh, "out_mesh is null");
    out = nullptr;
    if (text == nullptr) throw Error(Code::kInvalidArgument, "text is null");
    deltadome::Mesh m = deltadome::ParseMeshAuto(text);
    out = new dd_mesh{std::move(m)};
  });
}

int dd_mesh_obj(const dd_mesh* mesh, char** out_text) {
  return Guard([&] {
    char*& out = Deref(out_text, "out_text is null");
    out = nullptr;
    out = CopyString(deltadome::MeshObj(Deref(mesh, "mesh is null").impl));
  });
}

int dd_mesh_json(const dd_mesh* mesh, char** out_text) {
  return Guard([&] {
    char*& out = Deref(out_text, "out_text is null");
    out = nullptr;
    out = CopyString(deltadome::MeshJson(Deref(mesh, "mesh is null").impl));
  });
}

int dd_mesh_counts(const dd_mesh* mesh, int* out_v, int* out_e, int* out_f) {
  return Guard([&] {
    const deltadome::Mesh& m = Deref(mesh, "mesh is null").impl;
    if (out_e) *out_e = deltadome::BuildTopology(m).E();
    if (out_v) *out_v = m.V();
    if (out_f) *out_f = m.F();
  });
}

int dd_mesh_vertex(const dd_mesh* mesh, int index, double out_xyz[3]) {
  return Guard([&] {
    const deltadome::Mesh& m = Deref(mesh, "mesh is null").impl;
    Deref(out_xyz, "out_xyz is null");
    if (index < 0 || index >= m.V())
      throw Error(Code::kOutOfRange, "vertex index out of range");
    out_xyz[0] = m.vertices[index].x;
    out_xyz[1] = m.vertices[index].y;
    out_xyz[2] = m.vertices[index].z;
  });
}

int dd_mesh_base(const dd_mesh* mesh, int* out_base) {
  return Guard([&] {
    const deltadome::Mesh& m = Deref(mesh, "mesh is null").impl;
    Deref(out_base, "out_base is null") = m.base_face;
  });
}

int dd_mesh_set_base(dd_mesh* mesh, int base_face) {
  return Guard([&] {
    dd_mesh& m = Deref(mesh, "mesh is null");
    m.impl = deltadome::WithBaseFace(m.impl, base_face);
  });
}

int dd_mesh_triangulate(const dd_mesh* mesh, double eps, dd_mesh** out_mesh) {
  return Guard([&] {
    dd_mesh*& out = Deref(out_mesh, "out_mesh is null");
    out = nullptr;
    deltadome::Mesh m =
        deltadome::Triangulated(Deref(mesh, "mesh is null").impl,
                                TolFrom(eps));
    out = new dd_mesh{std::move(m)};
  });
}

int dd_verify(const dd_mesh* mesh, const long long* edges, int n, double eps,
              int* out_passed, char** out_json) {
  return Guard([&] {
    if (out_json) *out_json = nullptr;
    const deltadome::Mesh& m = Deref(mesh, "mesh is null").impl;
    std::optional<deltadome::PolygonSpec> spec;
    if (edges != nullptr) spec = SpecFrom(edges, n);
    const deltadome::AuditReport r =
        deltadome::VerifyFull(m, spec ? &*spec : nullptr, TolFrom(eps));
    if (out_passed) *out_passed = r.passed ? 1 : 0;
    if (out_json) *out_json = CopyString(deltadome::AuditJson(r));
  });
}

void dd_search_budget_init(dd_search_budget* budget) {
  if (budget == nullptr) return;
  const deltadome::SearchBudget d;
  budget->max_dome_vertices = d.max_dome_vertices;
  budget->max_flat_vertices = d.max_flat_vertices;
  budget->max_templates = d.max_templates;
  budget->restarts = d.restarts;
  budget->seed = d.seed;
  budget->wall_clock_seconds = d.wall_clock_seconds;
}

int dd_search(const long long* edges, int n, const dd_search_budget* budget,
              double eps, char** out_json, dd_mesh** out_mesh) {
  return Guard([&] {
    if (out_json) *out_json = nullptr;
    if (out_mesh) *out_mesh = nullptr;
    deltadome::SearchBudget b;
    if (budget != nullptr) {
      b.max_dome_vertices = budget->max_dome_vertices;
      b.max_flat_vertices = budget->max_flat_vertices;
      b.max_templates = budget->max_templates;
      b.restarts = budget->restarts;
      b.seed = budget->seed;
      b.wall_clock_seconds = budget->wall_clock_seconds;
    }
    deltadome::SearchOutcome o =
        deltadome::SearchDome(SpecFrom(edges, n), b, TolFrom(eps));
    if (out_json) *out_json = CopyString(deltadome::SearchJson(o));
    if (out_mesh && o.found) *out_mesh = new dd_mesh{std::move(*o.found)};
  });
}

int dd_gauss_sweep(int count, unsigned int seed, double eps,
                   char** out_json) {
  return Guard([&] {
    char*& out = Deref(out_json, "out_json is null");
    out = nullptr;
    const deltadome::GaussSweep s =
        deltadome::RunGaussSweep(count, seed, TolFrom(eps));
    out = CopyString(deltadome::GaussSweepJson(s));
  });
}

}  // extern "C"
