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

#include "fixtures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <utility>

#include "constructors.hpp"
#include "lm.hpp"

namespace deltadome {

namespace {

Mesh Scaled(Mesh m, double k) {
  for (Vec3& v : m.vertices) v = v * k;
  return m;
}

std::vector<Vec3> RingPoints(int count, double radius, double z,
                             double phase_deg) {
  std::vector<Vec3> out;
  for (int i = 0; i < count; ++i) {
    double a = DegToRad(phase_deg + 360.0 * i / count);
    out.push_back({radius * std::cos(a), radius * std::sin(a), z});
  }
  return out;
}

void Append(std::vector<Vec3>& dst, const std::vector<Vec3>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

// Ring radii and heights that keep every edge at length 1.
constexpr double kPentagonR = 0.85065080835203993;   // 1 / (2 sin 36)
constexpr double kPentagonH = 0.52573111211913359;   // pyramid over it
constexpr double kSquareBandH = 0.84089641525371454; // 2^(-1/4)
constexpr double kHexBandH = 0.85559967716735219;    // sqrt(sqrt 3 - 1)

}  // namespace

Mesh DeltahedronFromPoints(const std::vector<Vec3>& points, double edge,
                           const Tolerances& tol) {
  int n = static_cast<int>(points.size());
  double eps = tol.verify * std::max(1.0, edge);
  auto unit = [&](int a, int b) {
    return std::fabs((points[a] - points[b]).Norm() - edge) <= eps;
  };

  Mesh m;
  m.vertices = points;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!unit(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!unit(i, k) || !unit(j, k)) continue;
        Vec3 nrm = (points[j] - points[i]).Cross(points[k] - points[i]);
        if (nrm.Norm() <= eps) continue;
        int pos = 0, neg = 0;
        for (int v = 0; v < n; ++v) {
          if (v == i || v == j || v == k) continue;
          double s = nrm.Dot(points[v] - points[i]);
          if (s > eps) ++pos;
          if (s < -eps) ++neg;
        }
        if (pos && neg) continue;  // interior plane, not a hull face
        if (pos == 0 && neg == 0 && n > 3) continue;
        if (pos)
          m.faces.push_back({i, k, j});  // flip so the normal faces out
        else
          m.faces.push_back({i, j, k});
      }
    }
  if (m.F() < 4)
    throw Error(Code::kDegenerateMesh, "points carry no deltahedron");
  try {
    BuildTopology(m);
  } catch (const Error& e) {
    throw Error(Code::kDegenerateMesh,
                std::string("points carry no deltahedron: ") + e.what());
  }
  return m;
}

Mesh IcosahedronSolid(long long side, const Tolerances& tol) {
  if (side < 1) throw Error(Code::kInvalidArgument, "side must be positive");
  // Pentagonal antiprism of the two rings plus an apex over each; band
  // height equals the ring radius.
  std::vector<Vec3> pts;
  Append(pts, RingPoints(5, kPentagonR, kPentagonR / 2, 0));
  Append(pts, RingPoints(5, kPentagonR, -kPentagonR / 2, 36));
  pts.push_back({0, 0, kPentagonR / 2 + kPentagonH});
  pts.push_back({0, 0, -kPentagonR / 2 - kPentagonH});
  return Scaled(DeltahedronFromPoints(pts, 1, tol), side);
}

Mesh GyroSquareBipyramid(long long side, const Tolerances& tol) {
  if (side < 1) throw Error(Code::kInvalidArgument, "side must be positive");
  double r = std::sqrt(0.5);
  std::vector<Vec3> pts;
  Append(pts, RingPoints(4, r, kSquareBandH / 2, 45));
  Append(pts, RingPoints(4, r, -kSquareBandH / 2, 0));
  pts.push_back({0, 0, kSquareBandH / 2 + r});
  pts.push_back({0, 0, -kSquareBandH / 2 - r});
  return Scaled(DeltahedronFromPoints(pts, 1, tol), side);
}

Mesh HexagonalAntiprismSolid(long long side, const Tolerances& tol) {
  if (side < 1) throw Error(Code::kInvalidArgument, "side must be positive");
  // Hexagon faces defeat the unit-triangle hull scan, so this one is
  // assembled by hand: two hexagons and a twisted band of 12 triangles.
  Mesh m;
  Append(m.vertices, RingPoints(6, 1, kHexBandH / 2, 30));
  Append(m.vertices, RingPoints(6, 1, -kHexBandH / 2, 0));
  m.faces.push_back({0, 1, 2, 3, 4, 5});
  m.faces.push_back({11, 10, 9, 8, 7, 6});
  for (int i = 0; i < 6; ++i) {
    int u = i, u1 = (i + 1) % 6;
    int l = 6 + (i + 1) % 6, l0 = 6 + i;
    m.faces.push_back({u, l0, l});   // points down toward the lower ring
    m.faces.push_back({u, l, u1});   // points up toward the upper ring
  }
  BuildTopology(m);  // sanity: closed and consistently wound
  (void)tol;
  return Scaled(std::move(m), side);
}

Mesh SnubDisphenoid(const Tolerances& tol) {
  // Ridge pairs (a, b) and (c, d), equator (e, f, g, h).
  std::vector<Vec3> seed = {{0.6, 0, 0.6},   {-0.6, 0, 0.6}, {0, 0.6, -0.6},
                            {0, -0.6, -0.6}, {0, 0.9, 0.1},  {0, -0.9, 0.1},
                            {0.9, 0, -0.1},  {-0.9, 0, -0.1}};
  enum { A, B, C, D, E, F, G, H };
  std::vector<std::array<int, 3>> faces = {
      {A, B, E}, {A, B, F}, {A, E, G}, {A, G, F}, {B, E, H}, {B, H, F},
      {C, D, G}, {C, D, H}, {C, G, E}, {C, E, H}, {D, G, F}, {D, F, H}};
  std::set<std::pair<int, int>> edges;
  for (const std::array<int, 3>& f : faces)
    for (int i = 0; i < 3; ++i)
      edges.insert(std::minmax(f[i], f[(i + 1) % 3]));
  std::vector<LengthConstraint> cons;
  for (const std::pair<int, int>& e : edges) cons.push_back({e.first, e.second, 1});

  SolveReport rep = SolveLengths(seed, std::vector<char>(seed.size(), 0),
                                 cons, 1e-12, 500);
  if (!rep.converged)
    throw Error(Code::kInternal, "ridge solid solve did not converge");
  return DeltahedronFromPoints(rep.positions, 1, tol);
}

std::vector<NamedMesh> ConvexDeltahedra(const Tolerances& tol) {
  std::vector<NamedMesh> out;
  double s3 = std::sqrt(3.0);

  std::vector<Vec3> tetra = {
      {0, 0, 0}, {1, 0, 0}, {0.5, s3 / 2, 0}, {0.5, s3 / 6, std::sqrt(2.0 / 3)}};
  out.push_back({"tetrahedron", DeltahedronFromPoints(tetra, 1, tol)});

  std::vector<Vec3> bi3 = RingPoints(3, 1 / s3, 0, 90);
  bi3.push_back({0, 0, std::sqrt(2.0 / 3)});
  bi3.push_back({0, 0, -std::sqrt(2.0 / 3)});
  out.push_back({"triangular-bipyramid", DeltahedronFromPoints(bi3, 1, tol)});

  double r = std::sqrt(0.5);
  std::vector<Vec3> octa = {{r, 0, 0},  {-r, 0, 0}, {0, r, 0},
                            {0, -r, 0}, {0, 0, r},  {0, 0, -r}};
  out.push_back({"octahedron", DeltahedronFromPoints(octa, 1, tol)});

  std::vector<Vec3> bi5 = RingPoints(5, kPentagonR, 0, 90);
  bi5.push_back({0, 0, kPentagonH});
  bi5.push_back({0, 0, -kPentagonH});
  out.push_back({"pentagonal-bipyramid", DeltahedronFromPoints(bi5, 1, tol)});

  out.push_back({"snub-disphenoid", SnubDisphenoid(tol)});

  // Prism of two aligned triangles with a pyramid over each square side.
  std::vector<Vec3> prism;
  Append(prism, RingPoints(3, 1 / s3, 0.5, 90));
  Append(prism, RingPoints(3, 1 / s3, -0.5, 90));
  Append(prism, RingPoints(3, 1 / (2 * s3) + r, 0, 30));
  out.push_back({"triaugmented-prism", DeltahedronFromPoints(prism, 1, tol)});

  out.push_back({"gyro-square-bipyramid", GyroSquareBipyramid(1, tol)});
  out.push_back({"icosahedron", IcosahedronSolid(1, tol)});
  return out;
}

Mesh SliceUpper(const Mesh& solid, double z0, const Tolerances& tol) {
  Mesh out;
  out.vertices = solid.vertices;
  double eps = tol.construct * 100;  // on-plane window
  auto weld = [&](const Vec3& p) {
    for (int i = 0; i < out.V(); ++i)
      if ((out.vertices[i] - p).Norm() <= eps) return i;
    out.vertices.push_back(p);
    return out.V() - 1;
  };

  for (int f = 0; f < solid.F(); ++f) {
    const std::vector<int>& face = solid.faces[f];
    std::vector<int> clipped;
    size_t m = face.size();
    for (size_t i = 0; i < m; ++i) {
      const Vec3& p = solid.vertices[face[i]];
      const Vec3& q = solid.vertices[face[(i + 1) % m]];
      bool pin = p.z >= z0 - eps, qin = q.z >= z0 - eps;
      if (pin) clipped.push_back(face[i]);
      if (pin != qin) {
        double t = (z0 - p.z) / (q.z - p.z);
        clipped.push_back(weld(p + (q - p) * t));
      }
    }
    // Squash welded repeats, drop faces that lost their area.
    std::vector<int> cleaned;
    for (int v : clipped)
      if (cleaned.empty() || cleaned.back() != v) cleaned.push_back(v);
    while (cleaned.size() > 1 && cleaned.front() == cleaned.back())
      cleaned.pop_back();
    std::set<int> distinct(cleaned.begin(), cleaned.end());
    if (distinct.size() >= 3) out.faces.push_back(std::move(cleaned));
  }
  if (out.faces.empty())
    throw Error(Code::kDegenerateMesh, "nothing above the cutting plane");

  // Section boundary: directed edges with no reverse partner, each
  // reversed, chained into the base cycle.
  std::set<std::pair<int, int>> dirs;
  for (const std::vector<int>& face : out.faces)
    for (size_t i = 0; i < face.size(); ++i)
      dirs.insert({face[i], face[(i + 1) % face.size()]});
  std::map<int, int> next;
  int start = -1;
  for (const std::pair<int, int>& d : dirs)
    if (!dirs.count({d.second, d.first})) {
      if (next.count(d.second))
        throw Error(Code::kDegenerateMesh, "section is not a single cycle");
      next[d.second] = d.first;  // reversed edge
      start = d.second;
    }
  if (start < 0) throw Error(Code::kDegenerateMesh, "slice left no section");
  std::vector<int> base;
  int at = start;
  do {
    base.push_back(at);
    auto it = next.find(at);
    if (it == next.end())
      throw Error(Code::kDegenerateMesh, "section boundary is broken");
    at = it->second;
  } while (at != start && base.size() <= next.size());
  if (at != start || base.size() != next.size())
    throw Error(Code::kDegenerateMesh, "section is not a single cycle");
  out.base_face = out.F();
  out.faces.push_back(base);

  // Compact away the vertices that stayed below the plane.
  std::vector<int> remap(out.V(), -1);
  std::vector<Vec3> kept;
  for (const std::vector<int>& face : out.faces)
    for (int v : face)
      if (remap[v] < 0) {
        remap[v] = static_cast<int>(kept.size());
        kept.push_back(out.vertices[v]);
      }
  for (std::vector<int>& face : out.faces)
    for (int& v : face) v = remap[v];
  out.vertices = std::move(kept);
  for (Vec3& v : out.vertices) v.z -= z0;  // base into the z = 0 plane
  BuildTopology(out);  // sanity: closed after capping
  return out;
}

std::vector<NamedMesh> DomeFixtures(const Tolerances& tol) {
  std::vector<NamedMesh> out;
  out.push_back({"pyramid-3", PyramidDome(3, 1, tol)});
  out.push_back({"pyramid-4", PyramidDome(4, 1, tol)});
  out.push_back({"pyramid-5", PyramidDome(5, 1, tol)});
  out.push_back({"roof-3x1", RoofDome(3, 1, tol)});
  out.push_back(
      {"trunc-tetra-hexagon", BuildDome(PolygonSpec{{1, 1, 1, 1, 1, 1}}, tol)});
  out.push_back({"antiprism-hexagon", AntiprismDome(1, tol)});
  out.push_back({"layered-octagon",
                 BuildDome(PolygonSpec{std::vector<long long>(8, 1)}, tol)});
  out.push_back({"layered-decagon",
                 BuildDome(PolygonSpec{std::vector<long long>(10, 1)}, tol)});
  out.push_back({"layered-12gon",
                 BuildDome(PolygonSpec{std::vector<long long>(12, 1)}, tol)});
  out.push_back(
      {"octa-4x2", BuildDome(PolygonSpec{{1, 4, 1, 2, 1, 4, 1, 2}}, tol)});
  out.push_back({"pepa-12gon",
                 BuildDome(PolygonSpec{{1, 1, 1, 2, 1, 1, 1, 1, 1, 2, 1, 1}},
                           tol)});
  out.push_back({"story-9gon", OneStoryDome(PolygonSpec{{2, 1, 2, 1, 2, 1}},
                                            tol)});
  out.push_back({"story-11gon", OneStoryDome(PolygonSpec{{3, 2, 2, 2, 3, 1}},
                                             tol)});

  // Slices: the plane through the lower ring peels one apex off the
  // icosahedron; mid-band planes halve the gyroelongated solids.
  out.push_back({"slice-pentagon",
                 SliceUpper(IcosahedronSolid(1, tol), -kPentagonR / 2, tol)});
  out.push_back({"slice-decagon", SliceUpper(IcosahedronSolid(2, tol), 0, tol)});
  out.push_back({"slice-decagon-31",
                 SliceUpper(IcosahedronSolid(4, tol), -kPentagonR, tol)});
  out.push_back({"slice-octagon",
                 SliceUpper(GyroSquareBipyramid(2, tol), 0, tol)});
  out.push_back({"slice-12gon",
                 SliceUpper(HexagonalAntiprismSolid(2, tol), 0, tol)});
  return out;
}

std::vector<NamedMesh> ClosedSolidFixtures(const Tolerances& tol) {
  std::vector<NamedMesh> out = ConvexDeltahedra(tol);
  out.push_back({"hexagonal-antiprism", HexagonalAntiprismSolid(1, tol)});
  return out;
}

}  // namespace deltadome
