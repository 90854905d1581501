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
#include <map>
#include <optional>
#include <vector>

#include "geom.hpp"

namespace deltadome {

// Closed polyhedral surface. Faces list vertex indices counterclockwise as
// seen from outside. base_face indexes the distinguished bottom polygon.
struct Mesh {
  std::vector<Vec3> vertices;
  std::vector<std::vector<int>> faces;
  int base_face = -1;

  int V() const { return static_cast<int>(vertices.size()); }
  int F() const { return static_cast<int>(faces.size()); }
  std::vector<Vec3> FacePoints(int f) const;
};

// Undirected edge with its two incident faces, in discovery order.
struct EdgeUse {
  int a = -1, b = -1;        // vertex ids, a < b
  int fa = -1, fb = -1;      // faces traversing a->b and b->a respectively
};

// Edge pairing for a closed orientable surface. Construction throws
// kDegenerateMesh when any directed edge is missing, doubled, or unmatched,
// or when the face graph is disconnected.
struct Topology {
  std::vector<EdgeUse> edges;
  std::map<std::pair<int, int>, int> index;  // (a, b) with a < b -> edge id
  int E() const { return static_cast<int>(edges.size()); }
};

Topology BuildTopology(const Mesh& mesh);

Vec3 FaceNormal(const Mesh& mesh, int f);
double FaceArea(const Mesh& mesh, int f);

// Interior dihedral across edge e in degrees, (0, 360): < 180 convex.
double EdgeDihedralDeg(const Mesh& mesh, const Topology& topo, int e);

// Fuses faces that meet flat across an edge, then drops vertices that have
// become collinear in every incident face. The base face never merges with
// a dome face. Fails with kDegenerateMesh if fusion produces a non simple
// boundary.
Mesh MergeCoplanarFaces(const Mesh& mesh, const Tolerances& tol);

// Rigid placement moving face f into the z=0 plane with outward normal -z
// and the face's first edge along +x. Applies to the whole mesh and marks
// f as the base.
Mesh WithBaseFace(const Mesh& mesh, int f);

// Unit triangles tiling one face, as coordinate triples in 3-space. The
// face must be a convex lattice polygon of unit triangles (integer edges,
// angles multiples of 60). Fails with kNotPolyiamond otherwise.
struct UnitTri {
  std::array<Vec3, 3> p;
};
std::vector<UnitTri> DecomposeFaceUnits(const Mesh& mesh, int f,
                                        const Tolerances& tol);

// True when the two meshes are congruent: same face structure up to
// relabeling and a rigid motion (reflections excluded), matched by aligning
// base frames. Requires both to have base faces.
bool CongruentMeshes(const Mesh& a, const Mesh& b, double eps);

}  // namespace deltadome
