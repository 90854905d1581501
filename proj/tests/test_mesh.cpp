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

#include <cmath>

#include "doctest.h"
#include "mesh.hpp"

using namespace deltadome;

namespace {

const double kS3 = std::sqrt(3.0);

Mesh Cube() {
  Mesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  m.faces = {{0, 3, 2, 1},   // bottom, outward -z
             {4, 5, 6, 7},   // top
             {0, 1, 5, 4},   // y=0
             {2, 3, 7, 6},   // y=1
             {1, 2, 6, 5},   // x=1
             {3, 0, 4, 7}};  // x=0
  m.base_face = 0;
  return m;
}

Mesh UnitTetra(double s = 1) {
  Mesh m;
  m.vertices = {{0, 0, 0},
                {s, 0, 0},
                {s / 2, s * kS3 / 2, 0},
                {s / 2, s * kS3 / 6, s * std::sqrt(2.0 / 3.0)}};
  m.faces = {{0, 2, 1}, {0, 1, 3}, {1, 2, 3}, {2, 0, 3}};
  m.base_face = 0;
  return m;
}

Mesh Octahedron() {
  Mesh m;
  double r = 1 / std::sqrt(2.0);
  m.vertices = {{r, 0, 0}, {-r, 0, 0}, {0, r, 0},
                {0, -r, 0}, {0, 0, r}, {0, 0, -r}};
  m.faces = {{0, 2, 4}, {2, 1, 4}, {1, 3, 4}, {3, 0, 4},
             {2, 0, 5}, {1, 2, 5}, {3, 1, 5}, {0, 3, 5}};
  return m;
}

}  // namespace

TEST_CASE("topology of a cube") {
  auto topo = BuildTopology(Cube());
  CHECK(topo.E() == 12);
  for (const auto& e : topo.edges) {
    CHECK(e.fa >= 0);
    CHECK(e.fb >= 0);
  }
}

TEST_CASE("topology rejects broken meshes") {
  Mesh flipped = Cube();
  std::reverse(flipped.faces[1].begin(), flipped.faces[1].end());
  CHECK_THROWS_AS(BuildTopology(flipped), Error);

  Mesh open = Cube();
  open.faces.erase(open.faces.begin() + 1);
  CHECK_THROWS_AS(BuildTopology(open), Error);

  Mesh disjoint = UnitTetra();
  Mesh other = UnitTetra();
  int off = disjoint.V();
  for (const Vec3& v : other.vertices)
    disjoint.vertices.push_back(v + Vec3{10, 0, 0});
  for (auto f : other.faces) {
    for (int& v : f) v += off;
    disjoint.faces.push_back(f);
  }
  CHECK_THROWS_AS(BuildTopology(disjoint), Error);

  Mesh repeated = Cube();
  repeated.faces[1] = {4, 5, 5, 7};
  CHECK_THROWS_AS(BuildTopology(repeated), Error);
}

TEST_CASE("edge dihedrals of the platonic test solids") {
  Mesh cube = Cube();
  auto tc = BuildTopology(cube);
  for (int e = 0; e < tc.E(); ++e)
    CHECK(EdgeDihedralDeg(cube, tc, e) == doctest::Approx(90).epsilon(1e-12));

  Mesh tet = UnitTetra();
  auto tt = BuildTopology(tet);
  double want = RadToDeg(std::acos(1.0 / 3.0));
  for (int e = 0; e < tt.E(); ++e)
    CHECK(EdgeDihedralDeg(tet, tt, e) == doctest::Approx(want).epsilon(1e-9));

  Mesh oct = Octahedron();
  auto to = BuildTopology(oct);
  double wo = RadToDeg(std::acos(-1.0 / 3.0));
  CHECK(wo == doctest::Approx(109.4712206).epsilon(1e-8));
  for (int e = 0; e < to.E(); ++e)
    CHECK(EdgeDihedralDeg(oct, to, e) == doctest::Approx(wo).epsilon(1e-9));
}

TEST_CASE("coplanar faces fuse and flat vertices disappear") {
  // Cube with the top face split in two; the split points also sit mid-edge
  // in the neighbouring walls.
  Mesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
                {0.5, 0, 1}, {0.5, 1, 1}};
  m.faces = {{0, 3, 2, 1},
             {4, 8, 9, 7},
             {8, 5, 6, 9},
             {0, 1, 5, 8, 4},
             {2, 3, 7, 9, 6},
             {1, 2, 6, 5},
             {3, 0, 4, 7}};
  m.base_face = 0;
  Mesh merged = MergeCoplanarFaces(m, Tolerances{});
  CHECK(merged.F() == 6);
  CHECK(merged.V() == 8);
  CHECK(CongruentMeshes(merged, Cube(), 1e-9));
}

TEST_CASE("merging never crosses the base face") {
  // Bottom split in two instead; the halves stay separate because one of
  // them is the base.
  Mesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1},
                {0.5, 0, 0}, {0.5, 1, 0}};
  m.faces = {{0, 3, 9, 8},
             {8, 9, 2, 1},
             {4, 5, 6, 7},
             {0, 8, 1, 5, 4},
             {2, 9, 3, 7, 6},
             {1, 2, 6, 5},
             {3, 0, 4, 7}};
  // Wall faces list the mid points so edges pair up.
  m.faces[3] = {0, 8, 1, 5, 4};
  m.faces[4] = {2, 9, 3, 7, 6};
  m.base_face = 0;
  Mesh merged = MergeCoplanarFaces(m, Tolerances{});
  CHECK(merged.F() == 7);
  // Split corners survive since the bottom halves keep them as corners.
  CHECK(merged.V() == 10);
  int base_size = static_cast<int>(merged.faces[merged.base_face].size());
  CHECK(base_size == 4);
}

TEST_CASE("triangulated prism side fuses back to a square") {
  // Triangular prism with one rectangular side split along its diagonal.
  Mesh m;
  m.vertices = {{0, 0, 0}, {1, 0, 0}, {0.5, kS3 / 2, 0},
                {0, 0, 1}, {1, 0, 1}, {0.5, kS3 / 2, 1}};
  m.faces = {{0, 2, 1},
             {3, 4, 5},
             {0, 1, 4},  // diagonal half
             {0, 4, 3},  // diagonal half
             {1, 2, 5, 4},
             {2, 0, 3, 5}};
  m.base_face = 0;
  Mesh merged = MergeCoplanarFaces(m, Tolerances{});
  CHECK(merged.F() == 5);
  CHECK(merged.V() == 6);
  for (int f = 0; f < merged.F(); ++f)
    if (f != merged.base_face && merged.faces[f].size() == 4) {
      // Recovered rectangle, not a slanted quad.
      auto pts = merged.FacePoints(f);
      CHECK(PolygonArea(pts) == doctest::Approx(1).epsilon(1e-12));
    }
}

TEST_CASE("base placement normalizes pose") {
  Mesh t = UnitTetra();
  // Move it around, then ask for face 2 as the base.
  for (Vec3& v : t.vertices) v = Vec3{v.z + 3, v.x - 1, v.y + 0.5};
  Mesh placed = WithBaseFace(t, 2);
  const auto& base = placed.faces[placed.base_face];
  for (int v : base) CHECK(std::fabs(placed.vertices[v].z) < 1e-12);
  // Remaining vertex strictly above.
  for (int v = 0; v < placed.V(); ++v) {
    bool in_base = std::find(base.begin(), base.end(), v) != base.end();
    if (!in_base) CHECK(placed.vertices[v].z > 0.1);
  }
  Vec3 n = FaceNormal(placed, placed.base_face);
  CHECK(n.z == doctest::Approx(-1).epsilon(1e-12));
  // First edge of the base face runs along +x.
  Vec3 e0 = placed.vertices[base[1]] - placed.vertices[base[0]];
  CHECK(std::fabs(e0.y) < 1e-12);
  CHECK(e0.x > 0);
}

TEST_CASE("unit decomposition of lattice faces") {
  Tolerances tol;
  Mesh t2 = UnitTetra(2);
  for (int f = 0; f < t2.F(); ++f) {
    auto tris = DecomposeFaceUnits(t2, f, tol);
    CHECK(tris.size() == 4);
    for (const auto& tri : tris) {
      CHECK((tri.p[0] - tri.p[1]).Norm() == doctest::Approx(1).epsilon(1e-9));
      CHECK((tri.p[1] - tri.p[2]).Norm() == doctest::Approx(1).epsilon(1e-9));
      CHECK((tri.p[2] - tri.p[0]).Norm() == doctest::Approx(1).epsilon(1e-9));
    }
  }
  Mesh t3 = UnitTetra(3);
  CHECK(DecomposeFaceUnits(t3, 1, tol).size() == 9);

  CHECK_THROWS_AS(DecomposeFaceUnits(Cube(), 1, tol), Error);
}

TEST_CASE("congruence detects rigid copies and rejects others") {
  Mesh a = Cube();
  Mesh b = Cube();
  // Rotate b about z by 17 degrees and translate.
  double c = std::cos(0.3), s = std::sin(0.3);
  for (Vec3& v : b.vertices)
    v = Vec3{c * v.x - s * v.y + 2, s * v.x + c * v.y - 1, v.z + 4};
  CHECK(CongruentMeshes(a, b, 1e-9));

  Mesh box = Cube();
  for (Vec3& v : box.vertices) v.z *= 2;
  CHECK_FALSE(CongruentMeshes(a, box, 1e-9));

  CHECK(CongruentMeshes(UnitTetra(), UnitTetra(), 1e-12));
  CHECK_FALSE(CongruentMeshes(UnitTetra(), UnitTetra(2), 1e-9));
}
