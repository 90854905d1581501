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

#include <map>
#include <string>

#include "constructors.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "lm.hpp"
#include "verifier.hpp"

using namespace deltadome;

namespace {

const Tolerances kTol;

const Mesh& Named(const std::vector<NamedMesh>& list, const std::string& n) {
  for (const NamedMesh& nm : list)
    if (nm.name == n) return nm.mesh;
  throw std::runtime_error("no fixture " + n);
}

void CheckClosedConvexDeltahedron(const Mesh& m, double edge) {
  Topology topo = BuildTopology(m);
  for (int e = 0; e < topo.E(); ++e) {
    double d = EdgeDihedralDeg(m, topo, e);
    CHECK(d > 1);
    CHECK(d < 179.5);  // strictly convex
  }
  for (int f = 0; f < m.F(); ++f) {
    std::vector<Vec3> pts = m.FacePoints(f);
    if (pts.size() != 3) continue;
    for (int i = 0; i < 3; ++i)
      CHECK((pts[i] - pts[(i + 1) % 3]).Norm() ==
            doctest::Approx(edge).epsilon(1e-9));
  }
  CHECK(AuditCurvature(m, kTol).total_deg == doctest::Approx(720).epsilon(1e-9));
}

}  // namespace

TEST_CASE("the eight convex deltahedra") {
  std::vector<NamedMesh> solids = ConvexDeltahedra(kTol);
  REQUIRE(solids.size() == 8);
  std::map<std::string, std::pair<int, int>> expect = {
      {"tetrahedron", {4, 4}},           {"triangular-bipyramid", {5, 6}},
      {"octahedron", {6, 8}},            {"pentagonal-bipyramid", {7, 10}},
      {"snub-disphenoid", {8, 12}},      {"triaugmented-prism", {9, 14}},
      {"gyro-square-bipyramid", {10, 16}}, {"icosahedron", {12, 20}}};
  for (const NamedMesh& nm : solids) {
    INFO("solid ", nm.name);
    REQUIRE(expect.count(nm.name));
    CHECK(nm.mesh.V() == expect[nm.name].first);
    CHECK(nm.mesh.F() == expect[nm.name].second);
    CHECK(BuildTopology(nm.mesh).E() == 3 * nm.mesh.V() - 6);
    for (const std::vector<int>& f : nm.mesh.faces) CHECK(f.size() == 3);
    CheckClosedConvexDeltahedron(nm.mesh, 1);
  }
}

TEST_CASE("snub disphenoid solves to unit edges") {
  Mesh m = SnubDisphenoid(kTol);
  Topology topo = BuildTopology(m);
  REQUIRE(topo.E() == 18);
  // Two ridge pairs of degree-4 vertices, an equator of degree 5.
  std::vector<int> degree(m.V(), 0);
  for (const EdgeUse& e : topo.edges) {
    ++degree[e.a];
    ++degree[e.b];
  }
  int d4 = 0, d5 = 0;
  for (int d : degree) {
    if (d == 4) ++d4;
    if (d == 5) ++d5;
  }
  CHECK(d4 == 4);
  CHECK(d5 == 4);
}

TEST_CASE("point set builder rejects flat and holed inputs") {
  std::vector<Vec3> square = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  CHECK_THROWS_AS(DeltahedronFromPoints(square, 1, kTol), Error);

  Mesh icosa = IcosahedronSolid(1, kTol);
  std::vector<Vec3> holed(icosa.vertices.begin(), icosa.vertices.end() - 1);
  CHECK_THROWS_AS(DeltahedronFromPoints(holed, 1, kTol), Error);
}

TEST_CASE("hexagonal antiprism solid") {
  Mesh m = HexagonalAntiprismSolid(1, kTol);
  CHECK(m.V() == 12);
  CHECK(m.F() == 14);
  Topology topo = BuildTopology(m);
  CHECK(topo.E() == 24);
  int hexes = 0;
  for (const std::vector<int>& f : m.faces)
    if (f.size() == 6) ++hexes;
  CHECK(hexes == 2);
  CheckClosedConvexDeltahedron(m, 1);  // triangles checked, hexes skipped
}

TEST_CASE("solid slices reproduce the layered constructions") {
  std::vector<NamedMesh> domes = DomeFixtures(kTol);
  struct Pair {
    const char* slice;
    std::vector<long long> edges;
  };
  std::vector<Pair> pairs = {
      {"slice-octagon", std::vector<long long>(8, 1)},
      {"slice-decagon", std::vector<long long>(10, 1)},
      {"slice-12gon", std::vector<long long>(12, 1)},
      {"slice-decagon-31", {3, 1, 3, 1, 3, 1, 3, 1, 3, 1}},
  };
  for (const Pair& p : pairs) {
    INFO("fixture ", p.slice);
    const Mesh& slice = Named(domes, p.slice);
    PolygonSpec spec{p.edges};
    AuditReport audit = VerifyFull(slice, &spec, kTol);
    INFO("failure ", audit.failure);
    CHECK(audit.passed);
    CHECK(CongruentMeshes(slice, BuildDome(spec, kTol), 1e-7));
  }
}

TEST_CASE("pentagon slice of the icosahedron") {
  std::vector<NamedMesh> domes = DomeFixtures(kTol);
  const Mesh& m = Named(domes, "slice-pentagon");
  CHECK(m.V() == 11);
  CHECK(m.F() == 16);
  PolygonSpec spec{std::vector<long long>(5, 1)};
  AuditReport audit = VerifyFull(m, &spec, kTol);
  INFO("failure ", audit.failure);
  CHECK(audit.passed);
  CHECK(audit.curvature.dome_v3 == 0);
  CHECK(audit.curvature.dome_v4 == 0);
  CHECK(audit.curvature.dome_v5 == 6);  // apex plus the upper ring
  CHECK(audit.curvature.base_hypothesis_k3);
  CHECK(audit.curvature.base_sum_deg == doctest::Approx(360).epsilon(1e-9));
  // Not congruent to the pentagon pyramid: a second dome over one base.
  CHECK(!CongruentMeshes(m, PyramidDome(5, 1, kTol), 1e-7));
}

TEST_CASE("figure corpus passes the verifier") {
  std::vector<NamedMesh> domes = DomeFixtures(kTol);
  CHECK(domes.size() == 18);
  for (const NamedMesh& nm : domes) {
    INFO("fixture ", nm.name);
    AuditReport audit = VerifyFull(nm.mesh, nullptr, kTol);
    INFO("failure ", audit.failure);
    CHECK(audit.passed);
  }
  const Mesh& octa = Named(domes, "octa-4x2");
  CHECK(octa.F() == 13);
  AuditReport oa = VerifyFull(octa, nullptr, kTol);
  CHECK(oa.n_base == 8);
  CHECK(oa.normals.d >= 4);
  const Mesh& pepa = Named(domes, "pepa-12gon");
  CHECK(pepa.F() == 14);  // 13 dome faces over the base
  CHECK(VerifyFull(pepa, nullptr, kTol).n_base == 12);
  CHECK(VerifyFull(Named(domes, "story-9gon"), nullptr, kTol).n_base == 9);
  CHECK(VerifyFull(Named(domes, "story-11gon"), nullptr, kTol).n_base == 11);
}

TEST_CASE("closed solid corpus") {
  std::vector<NamedMesh> solids = ClosedSolidFixtures(kTol);
  CHECK(solids.size() == 9);
  for (const NamedMesh& nm : solids) {
    INFO("solid ", nm.name);
    CHECK(nm.mesh.base_face == -1);
    CHECK(AuditCurvature(nm.mesh, kTol).total_deg ==
          doctest::Approx(720).epsilon(1e-9));
  }
}

TEST_CASE("length solver basics") {
  // A rigid unit tetrahedron from a squashed seed, no fixed vertices.
  std::vector<Vec3> seed = {{0, 0, 0}, {1.2, 0, 0}, {0.4, 0.8, 0},
                            {0.5, 0.3, 0.9}};
  std::vector<LengthConstraint> cons;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) cons.push_back({i, j, 1});
  SolveReport rep = SolveLengths(seed, std::vector<char>(4, 0), cons, 1e-12);
  CHECK(rep.converged);
  CHECK(rep.max_residual <= 1e-12);

  // Pinning three points leaves the apex two mirror choices, both unit.
  std::vector<char> fixed = {1, 1, 1, 0};
  std::vector<Vec3> flat = {{0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2, 0},
                            {0.5, 0.3, 0.8}};
  SolveReport pinned = SolveLengths(flat, fixed, cons, 1e-12);
  CHECK(pinned.converged);
  for (int i = 0; i < 3; ++i) {
    CHECK((pinned.positions[i] - flat[i]).Norm() == 0);
    CHECK((pinned.positions[3] - pinned.positions[i]).Norm() ==
          doctest::Approx(1).epsilon(1e-11));
  }

  CHECK_THROWS_AS(SolveLengths(seed, std::vector<char>(3, 0), cons, 1e-12),
                  Error);
  CHECK_THROWS_AS(SolveLengths(seed, std::vector<char>(4, 0),
                               {{0, 9, 1.0}}, 1e-12),
                  Error);
}
