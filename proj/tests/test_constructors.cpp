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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "constructors.hpp"
#include "doctest.h"
#include "verifier.hpp"

using namespace deltadome;

namespace {

const Tolerances kTol;

// Every construction must survive the full audit, with and without fusing
// coplanar faces.
AuditReport ExpectClean(const Mesh& m, const PolygonSpec* spec = nullptr) {
  AuditReport r = VerifyFull(m, spec, kTol);
  const CheckResult* c = r.passed ? nullptr : r.Find(r.failure);
  INFO("failed check: " << r.failure << ": " << (c ? c->message : ""));
  CHECK(r.passed);
  AuditReport rm = VerifyFull(MergeCoplanarFaces(m, kTol), spec, kTol);
  CHECK(rm.passed);
  return r;
}

double MaxZ(const Mesh& m) {
  double z = 0;
  for (const Vec3& v : m.vertices) z = std::max(z, v.z);
  return z;
}

// Specs whose alternating class structure satisfies the exact closure
// pattern for the given n, suitable as random domeable inputs.
PolygonSpec RandomLayeredSpec(int n, std::mt19937& rng) {
  std::uniform_int_distribution<long long> small(1, 4);
  std::uniform_int_distribution<long long> shift(-2, 2);
  for (;;) {
    long long l = small(rng);
    std::vector<long long> e(n, l);
    if (n == 8) {
      long long a = small(rng), b = small(rng);
      e[0] = a, e[2] = b, e[4] = a, e[6] = b;
    } else if (n == 10) {
      long long a = small(rng);
      for (int k = 0; k < 10; k += 2) e[k] = a;
    } else {
      long long m0 = small(rng), m1 = small(rng), m2 = small(rng);
      long long t = shift(rng);
      if (m0 - t < 1 || m1 + t < 1 || m2 - t < 1) continue;
      long long m[6] = {m0, m1, m2, m0 - t, m1 + t, m2 - t};
      for (int k = 0; k < 6; ++k) e[2 * k] = m[k];
    }
    return PolygonSpec{e};
  }
}

PolygonSpec RandomHexSpec(std::mt19937& rng) {
  std::uniform_int_distribution<long long> small(1, 5);
  std::uniform_int_distribution<long long> shift(-3, 3);
  for (;;) {
    long long a = small(rng), b = small(rng), c = small(rng), t = shift(rng);
    if (a - t < 1 || b + t < 1 || c - t < 1) continue;
    return PolygonSpec{{a, b, c, a - t, b + t, c - t}};
  }
}

}  // namespace

TEST_CASE("pyramid apex heights") {
  for (long long s : {1LL, 3LL}) {
    double sf = double(s);
    Mesh t3 = PyramidDome(3, s, kTol);
    CHECK(t3.V() == 4);
    CHECK(t3.F() == 4);
    CHECK(MaxZ(t3) == doctest::Approx(sf * std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    ExpectClean(t3);

    Mesh t4 = PyramidDome(4, s, kTol);
    CHECK(t4.V() == 5);
    CHECK(t4.F() == 5);
    CHECK(MaxZ(t4) == doctest::Approx(sf / std::sqrt(2.0)).epsilon(1e-12));
    ExpectClean(t4);

    Mesh t5 = PyramidDome(5, s, kTol);
    CHECK(t5.V() == 6);
    CHECK(t5.F() == 6);
    // Height from the circumradius of the regular pentagon.
    double r = sf / (2 * std::sin(kPi / 5));
    CHECK(MaxZ(t5) == doctest::Approx(std::sqrt(sf * sf - r * r)).epsilon(1e-12));
    CHECK(MaxZ(t5) == doctest::Approx(0.5257311121 * sf).epsilon(1e-9));
    ExpectClean(t5);
  }

  CHECK_THROWS_AS(PyramidDome(6, 1, kTol), Error);
  try {
    PyramidDome(6, 2, kTol);
  } catch (const Error& e) {
    CHECK(e.code() == Code::kApexDegenerate);
  }
  CHECK_THROWS_AS(PyramidDome(7, 1, kTol), Error);
  CHECK_THROWS_AS(PyramidDome(3, 0, kTol), Error);
}

TEST_CASE("roof over a rectangle") {
  Mesh r = RoofDome(3, 1, kTol);
  CHECK(r.V() == 6);
  CHECK(r.F() == 5);
  CHECK(MaxZ(r) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
  // The ridge is the only z > 0 edge; its length is the side difference.
  std::vector<int> top;
  for (int i = 0; i < r.V(); ++i)
    if (r.vertices[i].z > 0.5) top.push_back(i);
  REQUIRE(top.size() == 2);
  CHECK((r.vertices[top[0]] - r.vertices[top[1]]).Norm() ==
        doctest::Approx(2).epsilon(1e-12));
  AuditReport rep = ExpectClean(r);
  CHECK(rep.normals.d == 0);

  // Same dome regardless of which side comes first.
  CHECK(CongruentMeshes(r, RoofDome(1, 3, kTol), 1e-9));

  // Equal sides squash the ridge into a pyramid apex.
  Mesh sq = RoofDome(2, 2, kTol);
  CHECK(sq.F() == 5);
  CHECK(sq.V() == 5);
  CHECK(CongruentMeshes(sq, PyramidDome(4, 2, kTol), 1e-9));
  ExpectClean(sq);
}

TEST_CASE("truncated tetra over lattice polygons") {
  std::vector<double> hex_angles(6, 120.0);

  // Unit hexagon: side 3 tetrahedron with all corners cut at 1.
  Mesh h1 = TruncatedTetraDome({1, 1, 1, 1, 1, 1}, hex_angles, kTol);
  CHECK(h1.V() == 10);
  CHECK(h1.F() == 7);
  ExpectClean(h1);
  int pentagons = 0;
  for (int f = 0; f < h1.F(); ++f) {
    if (h1.faces[f].size() != 5) continue;
    ++pentagons;
    std::multiset<long long> sides;
    for (size_t k = 0; k < 5; ++k) {
      const Vec3& a = h1.vertices[h1.faces[f][k]];
      const Vec3& b = h1.vertices[h1.faces[f][(k + 1) % 5]];
      sides.insert(std::llround((a - b).Norm()));
    }
    CHECK(sides == std::multiset<long long>({1, 1, 1, 2, 2}));
  }
  CHECK(pentagons == 3);

  ExpectClean(TruncatedTetraDome({2, 1, 2, 1, 2, 1}, hex_angles, kTol));
  ExpectClean(TruncatedTetraDome({3, 1, 1, 3, 1, 1}, hex_angles, kTol));

  // The plain triangle is the uncut tetrahedron.
  Mesh tri = TruncatedTetraDome({2, 2, 2}, {60, 60, 60}, kTol);
  CHECK(tri.F() == 4);
  CHECK(CongruentMeshes(tri, PyramidDome(3, 2, kTol), 1e-9));

  // One corner cut: a trapezoid base. Two cut apexes collapse onto the
  // base, leaving one new mid edge vertex plus the apex.
  Mesh trap = TruncatedTetraDome({2, 1, 1, 1}, {60, 60, 120, 120}, kTol);
  CHECK(trap.F() == 5);
  CHECK(trap.V() == 6);
  ExpectClean(trap);

  // Two corners cut: a pentagon base.
  Mesh pent =
      TruncatedTetraDome({2, 1, 1, 1, 2}, {60, 120, 120, 120, 120}, kTol);
  CHECK(pent.F() == 6);
  ExpectClean(pent);

  // Fully cut corners can meet: the rhombus needs a zero length side.
  Mesh rho = TruncatedTetraDome({1, 1, 1, 1}, {60, 120, 60, 120}, kTol);
  CHECK(rho.F() == 6);
  CHECK(rho.V() == 7);
  ExpectClean(rho);

  CHECK_THROWS_AS(TruncatedTetraDome({1, 1, 1, 1}, {90, 90, 90, 90}, kTol),
                  Error);
  CHECK_THROWS_AS(TruncatedTetraDome({1, 2, 1, 1, 1, 1}, hex_angles, kTol),
                  Error);
}

TEST_CASE("antiprism band height") {
  Mesh a = AntiprismDome(1, kTol);
  CHECK(a.V() == 12);
  CHECK(a.F() == 14);
  // Band height satisfies 4 sin^2(15 deg) + h^2 = 1.
  double want = std::sqrt(1 - 4 * std::pow(std::sin(kPi / 12), 2));
  CHECK(MaxZ(a) == doctest::Approx(want).epsilon(1e-12));
  CHECK(MaxZ(a) == doctest::Approx(0.8555996785).epsilon(1e-8));
  AuditReport rep = ExpectClean(a);
  CHECK(rep.normals.d == 6);

  Mesh a3 = AntiprismDome(3, kTol);
  CHECK(MaxZ(a3) == doctest::Approx(3 * want).epsilon(1e-12));
  ExpectClean(a3);
}

TEST_CASE("layered octagon") {
  PolygonSpec spec{std::vector<long long>(8, 1)};
  Mesh m = LayeredDome(spec, 0, kTol);
  CHECK(m.V() == 13);
  CHECK(m.F() == 13);
  double delta = std::tan(kPi / 8) / 2;
  double band_h = 1 / std::sqrt(std::sqrt(2.0));  // 3/4 - delta^2 is 1/sqrt 2
  CHECK(MaxZ(m) == doctest::Approx(band_h + std::sqrt(2.0)).epsilon(1e-9));

  AuditReport rep = ExpectClean(m, &spec);
  CHECK(rep.normals.d == 4);
  // Base dihedrals alternate: steep under the lid triangles, shallow under
  // the trapezoids. The steep one leans past vertical.
  double steep = 180 - RadToDeg(std::atan(band_h / delta));
  REQUIRE(rep.base_dihedrals_deg.size() == 8);
  std::vector<double> sorted = rep.base_dihedrals_deg;
  std::sort(sorted.begin(), sorted.end());
  for (int k = 4; k < 8; ++k)
    CHECK(sorted[k] == doctest::Approx(steep).epsilon(1e-9));
  CHECK(steep == doctest::Approx(103.84).epsilon(1e-4));

  // Seam between band and lid cap, along the edges at band height.
  Topology topo = BuildTopology(m);
  double cap_slope = RadToDeg(std::atan(std::sqrt(2.0)));
  double seam = 180 - RadToDeg(std::atan(band_h / delta)) + cap_slope;
  int seams = 0;
  for (int e = 0; e < topo.E(); ++e) {
    const EdgeUse& eu = topo.edges[e];
    if (std::fabs(m.vertices[eu.a].z - band_h) > 1e-9) continue;
    if (std::fabs(m.vertices[eu.b].z - band_h) > 1e-9) continue;
    ++seams;
    CHECK(EdgeDihedralDeg(m, topo, e) == doctest::Approx(seam).epsilon(1e-9));
  }
  CHECK(seams == 4);
  CHECK(seam == doctest::Approx(158.57).epsilon(1e-4));

  // Uneven trapezoid class, constant class at offset 1.
  PolygonSpec wide{{3, 2, 1, 2, 3, 2, 1, 2}};
  ExpectClean(LayeredDome(wide, 1, kTol), &wide);
  CHECK_THROWS_AS(LayeredDome(PolygonSpec{{1, 2, 1, 3, 1, 2, 1, 3}}, 1, kTol),
                  Error);
}

TEST_CASE("layered decagon") {
  PolygonSpec spec{std::vector<long long>(10, 1)};
  Mesh m = LayeredDome(spec, 0, kTol);
  CHECK(m.V() == 16);
  CHECK(m.F() == 16);
  double delta = std::tan(kPi / 10) / 2;
  double band_h = std::sqrt(0.75 - delta * delta);
  // Lid is a regular pentagon of side 2 capped by its own pyramid.
  double lid_r = 1 / std::sin(kPi / 5);
  double apex = band_h + std::sqrt(4 - lid_r * lid_r);
  CHECK(MaxZ(m) == doctest::Approx(apex).epsilon(1e-9));

  AuditReport rep = ExpectClean(m, &spec);
  CHECK(rep.normals.d == 5);

  Topology topo = BuildTopology(m);
  double cap_slope =
      RadToDeg(std::atan(std::sqrt(4 - lid_r * lid_r) / std::cos(kPi / 5) /
                         lid_r));
  double seam = 180 - RadToDeg(std::atan(band_h / delta)) + cap_slope;
  int seams = 0;
  for (int e = 0; e < topo.E(); ++e) {
    const EdgeUse& eu = topo.edges[e];
    if (std::fabs(m.vertices[eu.a].z - band_h) > 1e-9) continue;
    if (std::fabs(m.vertices[eu.b].z - band_h) > 1e-9) continue;
    ++seams;
    CHECK(EdgeDihedralDeg(m, topo, e) == doctest::Approx(seam).epsilon(1e-9));
  }
  CHECK(seams == 5);
  CHECK(seam == doctest::Approx(138.19).epsilon(1e-4));
}

TEST_CASE("layered twelve gon") {
  PolygonSpec spec{std::vector<long long>(12, 1)};
  Mesh m = LayeredDome(spec, 0, kTol);
  CHECK(m.V() == 18);
  CHECK(m.F() == 14);
  // Same band height as the hexagonal antiprism.
  CHECK(MaxZ(m) == doctest::Approx(std::sqrt(std::sqrt(3.0) - 1)).epsilon(1e-12));
  AuditReport rep = ExpectClean(m, &spec);
  CHECK(rep.normals.d == 6);

  PolygonSpec mixed{{2, 1, 3, 1, 2, 1, 3, 1, 2, 1, 3, 1}};
  REQUIRE(ClosesExactly(mixed));
  ExpectClean(LayeredDome(mixed, 1, kTol), &mixed);
}

TEST_CASE("construction scales with the spec") {
  std::vector<PolygonSpec> bases = {
      PolygonSpec{{1, 1, 1}},
      PolygonSpec{{2, 1, 2, 1}},
      PolygonSpec{{1, 2, 1, 2, 1, 2}},
      PolygonSpec{std::vector<long long>(10, 1)},
  };
  for (const PolygonSpec& base : bases) {
    Mesh one = BuildDome(base, kTol);
    for (long long k : {2LL, 3LL}) {
      PolygonSpec scaled = base;
      for (long long& e : scaled.edges) e *= k;
      Mesh big = BuildDome(scaled, kTol);
      REQUIRE(big.V() == one.V());
      REQUIRE(big.faces == one.faces);
      for (int i = 0; i < one.V(); ++i)
        CHECK((big.vertices[i] - one.vertices[i] * double(k)).Norm() <= 1e-9);
    }
  }
}

TEST_CASE("one story band under a hexagon lid") {
  // The unit lid gives exactly the hexagonal antiprism.
  Mesh u = OneStoryDome(PolygonSpec{{1, 1, 1, 1, 1, 1}}, kTol);
  CHECK(u.V() == 12);
  CHECK(u.F() == 14);
  CHECK(CongruentMeshes(u, AntiprismDome(1, kTol), 1e-9));
  ExpectClean(u);

  // Alternating lid: three band corners merge, a 9 sided base remains.
  Mesh nine = OneStoryDome(PolygonSpec{{2, 1, 2, 1, 2, 1}}, kTol);
  CHECK(nine.V() == 15);
  CHECK(nine.F() == 14);
  REQUIRE(nine.base_face >= 0);
  CHECK(nine.faces[nine.base_face].size() == 9);
  AuditReport rep9 = ExpectClean(nine);
  CHECK(rep9.n_base == 9);
  CHECK(rep9.normals.d == 6);

  // One unit lid edge: an 11 sided base.
  Mesh eleven = OneStoryDome(PolygonSpec{{3, 2, 2, 2, 3, 1}}, kTol);
  CHECK(eleven.faces[eleven.base_face].size() == 11);
  AuditReport rep11 = ExpectClean(eleven);
  CHECK(rep11.n_base == 11);
  CHECK(rep11.normals.d == 6);

  CHECK_THROWS_AS(OneStoryDome(PolygonSpec{{1, 1, 2, 1, 1, 1}}, kTol), Error);
  CHECK_THROWS_AS(OneStoryDome(PolygonSpec{{1, 1, 1, 1}}, kTol), Error);
}

TEST_CASE("decide picks a construction") {
  auto kind_of = [](std::vector<long long> e) {
    DecideOutcome out = Decide(PolygonSpec{std::move(e)}, kTol);
    REQUIRE(out.plan.has_value());
    CHECK(!out.plan->summary.empty());
    return out.plan->kind;
  };
  CHECK(kind_of({5, 5, 5}) == PlanKind::kPyramid);
  CHECK(kind_of({3, 3, 3, 3}) == PlanKind::kPyramid);
  CHECK(kind_of({2, 3, 2, 3}) == PlanKind::kRoof);
  CHECK(kind_of({2, 2, 2, 2, 2}) == PlanKind::kPyramid);
  CHECK(kind_of({1, 2, 1, 2, 1, 2}) == PlanKind::kTruncatedTetra);
  CHECK(kind_of({1, 1, 1, 1, 1, 1, 1, 1}) == PlanKind::kLayered);
  CHECK(kind_of({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}) == PlanKind::kLayered);

  auto rejected = [](std::vector<long long> e) {
    PolygonSpec spec{std::move(e)};
    DecideOutcome out = Decide(spec, kTol);
    CHECK(!out.plan.has_value());
    CHECK(!out.report.domeable);
    CHECK_THROWS_AS(BuildDome(spec, kTol), Error);
    return out.report;
  };
  // Regular 7 and 9 gons close but admit no dome.
  ConditionReport r7 = rejected({1, 1, 1, 1, 1, 1, 1});
  CHECK(r7.closes);
  CHECK(!r7.n_admissible);
  ConditionReport r9 = rejected({1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(r9.closes);
  CHECK(!r9.n_admissible);
  // Closed octagon with both alternating classes uneven.
  ConditionReport r8 = rejected({1, 1, 2, 2, 1, 1, 2, 2});
  CHECK(r8.closes);
  CHECK(r8.n_admissible);
  CHECK(!r8.odd_class_equal);
  // Unclosed word.
  ConditionReport rbad = rejected({1, 1, 1, 2, 1, 1, 1, 1});
  CHECK(!rbad.closes);
}

TEST_CASE("every decided plan builds and verifies") {
  std::mt19937 rng(20260818);
  std::uniform_int_distribution<long long> side(1, 6);

  int built = 0;
  for (int rep = 0; rep < 40; ++rep) {
    std::vector<PolygonSpec> specs;
    specs.push_back(PolygonSpec{{side(rng), side(rng), side(rng)}});  // mostly open
    long long a = side(rng), b = side(rng);
    specs.push_back(PolygonSpec{{a, b, a, b}});
    specs.push_back(RandomHexSpec(rng));
    for (int n : {8, 10, 12}) specs.push_back(RandomLayeredSpec(n, rng));
    long long s = side(rng);
    specs.push_back(PolygonSpec{std::vector<long long>(5, s)});

    for (const PolygonSpec& spec : specs) {
      DecideOutcome out = Decide(spec, kTol);
      if (!out.plan) {
        CHECK_THROWS_AS(BuildDome(spec, kTol), Error);
        continue;
      }
      Mesh m = BuildDome(spec, kTol);
      ExpectClean(m, &spec);
      ++built;
    }
  }
  CHECK(built > 200);
}
