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

#include <string>
#include <vector>

#include "mesh.hpp"

namespace deltadome {

struct NamedMesh {
  std::string name;
  Mesh mesh;
};

// Convex deltahedron from its vertex coordinates: collects the triangles
// with side `edge` whose plane has every other point strictly on one side,
// winds them outward, and checks the result is closed. Throws
// kDegenerateMesh when the points do not carry such a surface.
Mesh DeltahedronFromPoints(const std::vector<Vec3>& points, double edge,
                           const Tolerances& tol);

// The eight strictly convex solids with all faces unit triangles,
// 4 to 20 faces, no base designated.
std::vector<NamedMesh> ConvexDeltahedra(const Tolerances& tol);

// Individual solids used by the slice fixtures, edge length `side`,
// centered on the origin with the symmetry axis along z.
Mesh IcosahedronSolid(long long side, const Tolerances& tol);
Mesh GyroSquareBipyramid(long long side, const Tolerances& tol);
Mesh HexagonalAntiprismSolid(long long side, const Tolerances& tol);

// Twelve unit triangles around two skew unit-edge ridges; coordinates come
// out of a least-squares solve of the edge conditions.
Mesh SnubDisphenoid(const Tolerances& tol);

// Part of a convex solid above the plane z = z0, translated so the section
// lands in z = 0. Crossing faces are clipped, vertices on the plane are
// kept, and the section polygon becomes the base face.
Mesh SliceUpper(const Mesh& solid, double z0, const Tolerances& tol);

// Dome corpus from the construction figures: pyramids, roof, truncated
// tetrahedron, antiprism, the three layered families, the two one-story
// domes, and the solid slices.
std::vector<NamedMesh> DomeFixtures(const Tolerances& tol);

// Closed reference solids: the eight deltahedra and the hexagonal
// antiprism.
std::vector<NamedMesh> ClosedSolidFixtures(const Tolerances& tol);

}  // namespace deltadome
