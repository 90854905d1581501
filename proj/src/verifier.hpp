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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mesh.hpp"
#include "polygon.hpp"

namespace deltadome {

// One named check. enforced=false marks checks whose hypotheses the mesh
// does not satisfy; they are reported for information but do not fail the
// audit.
struct CheckResult {
  std::string id;
  bool passed = false;
  bool enforced = true;
  std::string message;
};

// Downward / upward classification of the dome faces touching the base.
struct NormalsSummary {
  int d = 0;                      // downward faces sharing a base edge
  std::vector<int> down_face_ids;
  std::vector<int> up_face_ids;   // upward faces sharing a base edge
  bool all_base_angles_ge_120 = false;
};

// Angle defect bookkeeping in degrees. A closed convex surface carries a
// total of 720.
struct CurvatureSummary {
  int dome_v3 = 0, dome_v4 = 0, dome_v5 = 0, dome_v6 = 0;
  bool base_hypothesis_k3 = false;  // every base vertex meets 3 unit angles
  double base_sum_deg = 0;          // defect over base vertices
  double total_deg = 0;             // defect over all vertices
};

struct AuditReport {
  bool passed = false;
  std::vector<CheckResult> checks;
  std::string failure;  // id of the first failing enforced check

  int n_base = 0, V = 0, E = 0, F = 0;
  NormalsSummary normals;
  CurvatureSummary curvature;
  std::vector<double> base_dihedrals_deg;  // one per base edge, boundary order
  long long unit_triangles = 0;

  const CheckResult* Find(const std::string& id) const;
};

// Full audit of a dome mesh: closed orientable structure, planar convex
// lattice faces with integer edges, global convexity, dome strictly above
// the base plane, angle defect accounting, and the downward-face counts.
// Checks whose lemma hypotheses fail (base angles below 120, base vertices
// not meeting exactly three unit angles) are downgraded to informational.
// spec, when given, pins the base boundary to the polygon's edge word.
AuditReport VerifyFull(const Mesh& mesh, const PolygonSpec* spec,
                       const Tolerances& tol);

// Stand-alone passes over an already structurally valid mesh.
NormalsSummary ClassifyNormals(const Mesh& mesh, const Tolerances& tol);
CurvatureSummary AuditCurvature(const Mesh& mesh, const Tolerances& tol);

}  // namespace deltadome
