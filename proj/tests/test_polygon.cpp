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
#include <random>

#include "doctest.h"
#include "polygon.hpp"

using namespace deltadome;

namespace {

// Independent closure oracle: walk the edge word in long double arithmetic.
// Residuals are either ~0 or bounded away from zero for small integers, so
// a fixed cutoff separates the two cases.
bool ClosesFloat(const PolygonSpec& spec) {
  long double x = 0, y = 0, perim = 0;
  int n = spec.n();
  for (int k = 0; k < n; ++k) {
    long double th = 2.0L * 3.14159265358979323846264338327950288L * k / n;
    x += spec.edges[k] * cosl(th);
    y += spec.edges[k] * sinl(th);
    perim += spec.edges[k];
  }
  return sqrtl(x * x + y * y) < 1e-9L * perim;
}

PolygonSpec Spec(std::initializer_list<long long> e) {
  return PolygonSpec{std::vector<long long>(e)};
}

}  // namespace

TEST_CASE("closure, regular polygons") {
  for (int n = 3; n <= 20; ++n) {
    PolygonSpec s{std::vector<long long>(n, 1)};
    CHECK(ClosesExactly(s));
  }
}

TEST_CASE("closure matches the analytic pattern for n=6") {
  // (a, b, c, a', b', c') closes iff a - a' = b' - b = c - c'.
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long long> d(1, 9);
  for (int it = 0; it < 3000; ++it) {
    PolygonSpec s{{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)}};
    bool pattern = (s.edges[0] - s.edges[3] == s.edges[4] - s.edges[1]) &&
                   (s.edges[4] - s.edges[1] == s.edges[2] - s.edges[5]);
    CHECK(ClosesExactly(s) == pattern);
  }
}

TEST_CASE("closure matches the analytic pattern for n=8 and n=16") {
  // Opposite sides equal: e_{i+n/2} = e_i.
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long long> d(1, 6);
  for (int n : {8, 16}) {
    for (int it = 0; it < 2000; ++it) {
      std::vector<long long> e(n);
      for (auto& v : e) v = d(rng);
      bool pattern = true;
      for (int i = 0; i < n / 2; ++i) pattern &= (e[i] == e[i + n / 2]);
      CHECK(ClosesExactly(PolygonSpec{e}) == pattern);
    }
  }
}

TEST_CASE("closure matches the analytic pattern for n=12") {
  // Differences of opposite sides follow (p, q, -p, -q, p, q).
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long long> d(1, 5);
  int closed_seen = 0;
  for (int it = 0; it < 5000; ++it) {
    std::vector<long long> e(12);
    for (auto& v : e) v = d(rng);
    long long p = e[0] - e[6], q = e[1] - e[7];
    bool pattern = (e[2] - e[8] == -p) && (e[3] - e[9] == -q) &&
                   (e[4] - e[10] == p) && (e[5] - e[11] == q);
    CHECK(ClosesExactly(PolygonSpec{e}) == pattern);
    closed_seen += pattern;
  }
  CHECK(closed_seen > 0);
}

TEST_CASE("closure agrees with the floating point oracle") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long long> d(1, 4);
  std::uniform_int_distribution<int> nn(3, 16);
  for (int it = 0; it < 5000; ++it) {
    int n = nn(rng);
    std::vector<long long> e(n);
    for (auto& v : e) v = d(rng);
    PolygonSpec s{e};
    CHECK(ClosesExactly(s) == ClosesFloat(s));
  }
}

TEST_CASE("closure rejects bad input") {
  CHECK_THROWS_AS(ClosesExactly(Spec({1, 1})), Error);
  CHECK_THROWS_AS(ClosesExactly(Spec({1, 0, 1})), Error);
  CHECK_THROWS_AS(ClosesExactly(Spec({1, -2, 1})), Error);
}

TEST_CASE("decision procedure on known polygons") {
  // Triangle through hexagon: closure is the whole story.
  CHECK(CheckConditions(Spec({2, 2, 2})).domeable);
  CHECK(CheckConditions(Spec({3, 1, 3, 1})).domeable);
  CHECK(CheckConditions(Spec({1, 1, 1, 1, 1})).domeable);
  CHECK(CheckConditions(Spec({2, 1, 2, 1, 2, 1})).domeable);
  CHECK_FALSE(CheckConditions(Spec({2, 1, 1, 1, 1, 1})).domeable);

  // Regular 7-gon closes but no dome exists over it.
  auto r7 = CheckConditions(Spec({1, 1, 1, 1, 1, 1, 1}));
  CHECK(r7.closes);
  CHECK_FALSE(r7.n_admissible);
  CHECK_FALSE(r7.domeable);

  // Octagons: one alternating class must be constant.
  CHECK(CheckConditions(Spec({1, 4, 1, 2, 1, 4, 1, 2})).domeable);
  CHECK(CheckConditions(Spec({1, 4, 1, 2, 1, 4, 1, 2})).parity == 0);
  CHECK(CheckConditions(Spec({4, 1, 2, 1, 4, 1, 2, 1})).parity == 1);
  auto bad8 = CheckConditions(Spec({1, 2, 2, 1, 1, 2, 2, 1}));
  CHECK(bad8.closes);
  CHECK_FALSE(bad8.odd_class_equal);
  CHECK_FALSE(bad8.domeable);

  // Decagon and 12-gon.
  CHECK(CheckConditions(Spec({2, 1, 2, 1, 2, 1, 2, 1, 2, 1})).domeable);
  CHECK(CheckConditions(Spec({1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 1, 1})).domeable);
  CHECK(CheckConditions(Spec({2, 1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 1})).domeable);

  // 14 and 16 sides close easily but are never domeable.
  CHECK_FALSE(CheckConditions(Spec({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}))
                  .domeable);
  std::vector<long long> e16(16, 2);
  CHECK_FALSE(CheckConditions(PolygonSpec{e16}).domeable);
}

TEST_CASE("embedding places canonical vertices") {
  Tolerances tol;
  auto sq = Embed(Spec({1, 1, 1, 1}), tol);
  REQUIRE(sq.n() == 4);
  CHECK(sq.vertices[0].Norm() < 1e-15);
  CHECK((sq.vertices[1] - Vec3{1, 0, 0}).Norm() < 1e-12);
  CHECK((sq.vertices[2] - Vec3{1, 1, 0}).Norm() < 1e-12);
  CHECK((sq.vertices[3] - Vec3{0, 1, 0}).Norm() < 1e-12);

  auto hex = Embed(Spec({1, 1, 1, 1, 1, 1}), tol);
  CHECK((hex.vertices[2] - Vec3{1.5, std::sqrt(3) / 2, 0}).Norm() < 1e-12);
  CHECK((hex.vertices[3] - Vec3{1.0, std::sqrt(3), 0}).Norm() < 1e-12);

  CHECK_THROWS_AS(Embed(Spec({1, 2, 1, 1, 1, 1}), tol), Error);
}

TEST_CASE("embedding of any closed spec has equal interior angles") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long long> d(1, 5);
  Tolerances tol;
  int seen = 0;
  while (seen < 500) {
    std::vector<long long> e(12);
    for (auto& v : e) v = d(rng);
    PolygonSpec s{e};
    if (!ClosesExactly(s)) continue;
    ++seen;
    auto emb = Embed(s, tol);
    double want = InteriorAngleDeg(12);
    for (int i = 0; i < 12; ++i) {
      const Vec3& prev = emb.vertices[(i + 11) % 12];
      const Vec3& next = emb.vertices[(i + 1) % 12];
      CHECK(std::fabs(AngleDegAt(emb.vertices[i], prev, next) - want) < 1e-9);
    }
  }
}

TEST_CASE("polyiamond polygon recognition") {
  Tolerances tol;
  CHECK(IsPolyiamondPolygon({1, 1, 1}, {60, 60, 60}, tol));
  CHECK(IsPolyiamondPolygon({3, 3, 3}, {60, 60, 60}, tol));
  CHECK(IsPolyiamondPolygon({1, 1, 1, 1, 1, 1},
                            {120, 120, 120, 120, 120, 120}, tol));
  // Trapezoid: big triangle of side 2 with one corner cut.
  CHECK(IsPolyiamondPolygon({2, 1, 1, 1}, {60, 60, 120, 120}, tol));
  // Same edges, angles shuffled so the walk misses the start.
  CHECK_FALSE(IsPolyiamondPolygon({2, 1, 1, 1}, {60, 120, 120, 60}, tol));
  // Squares are not lattice polygons.
  CHECK_FALSE(IsPolyiamondPolygon({1, 1, 1, 1}, {90, 90, 90, 90}, tol));
  // Non-closing hexagon word.
  CHECK_FALSE(IsPolyiamondPolygon({2, 1, 1, 1, 1, 1},
                                  {120, 120, 120, 120, 120, 120}, tol));
  // Pentagon: cut two corners of a side-3 triangle.
  CHECK(IsPolyiamondPolygon({2, 1, 1, 1, 2}, {60, 120, 120, 120, 120}, tol));
}

TEST_CASE("interior angle helper") {
  CHECK(InteriorAngleDeg(3) == doctest::Approx(60));
  CHECK(InteriorAngleDeg(4) == doctest::Approx(90));
  CHECK(InteriorAngleDeg(6) == doctest::Approx(120));
  CHECK(InteriorAngleDeg(12) == doctest::Approx(150));
}
