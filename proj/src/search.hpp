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

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mesh.hpp"
#include "polygon.hpp"

namespace deltadome {

// Combinatorial dome candidate: a triangulated disk whose boundary is the
// base polygon subdivided into unit edges. Vertices 0..boundary-1 walk the
// base counterclockwise; interior vertices follow.
struct DomeTemplate {
  int boundary = 0;
  int interior = 0;
  std::vector<std::array<int, 3>> triangles;
};

struct SearchBudget {
  int max_dome_vertices = 6;  // interior vertices with curvature
  int max_flat_vertices = 2;  // interior vertices of degree 6
  long long max_templates = 10'000'000;
  int restarts = 50;
  unsigned seed = 1;
  double wall_clock_seconds = 1800;
};

struct SearchOutcome {
  std::optional<Mesh> found;
  long long templates_tried = 0;
  long long embeddings_attempted = 0;
  bool budget_exceeded = false;  // enumeration or clock cut the walk short
  bool certified = false;        // never: absence of a find proves nothing
  std::string detail;
};

// Return false to stop the walk.
using TemplateFn = std::function<bool(const DomeTemplate&)>;

// Base boundary in the plane: polygon corners with the unit subdivision
// points of the longer edges, counterclockwise.
std::vector<Vec3> BoundaryPoints(const PolygonSpec& spec);

// Walks every triangulated-disk template over the polygon in a fixed
// deterministic order. Base vertices take three triangles each; when a
// corner angle drops below 120 degrees every corner instead branches over
// two to four. Emits at most budget.max_templates templates and flags
// *budget_exceeded when a cap cut the walk short. Returns the number
// emitted.
long long EnumerateTemplates(const PolygonSpec& spec,
                             const SearchBudget& budget,
                             const Tolerances& tol, const TemplateFn& fn,
                             bool* budget_exceeded = nullptr);

// Seeded least-squares embeddings of one template; the first solution that
// verifies as a dome wins. Coplanar faces arrive merged. attempts, when
// given, accumulates the number of solver runs.
std::optional<Mesh> EmbedTemplate(const DomeTemplate& tmpl,
                                  const PolygonSpec& spec,
                                  const SearchBudget& budget,
                                  const Tolerances& tol,
                                  long long template_index,
                                  long long* attempts = nullptr);

// Full pipeline: enumerate, embed, verify, return the first dome found.
// A miss is an exhaustion report, never a nonexistence certificate.
SearchOutcome SearchDome(const PolygonSpec& spec, const SearchBudget& budget,
                         const Tolerances& tol);

}  // namespace deltadome
