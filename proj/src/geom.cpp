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

#include "geom.hpp"

#include <algorithm>

namespace deltadome {

Vec3 Vec3::Normalized() const {
  double n = Norm();
  if (n <= 0) throw Error(Code::kInternal, "normalizing zero vector");
  return *this / n;
}

double AngleDegAt(const Vec3& v, const Vec3& a, const Vec3& b) {
  Vec3 u = a - v;
  Vec3 w = b - v;
  double nu = u.Norm(), nw = w.Norm();
  if (nu <= 0 || nw <= 0)
    throw Error(Code::kInvalidArgument, "angle at coincident points");
  // atan2 form is stable near 0 and 180 where acos loses digits.
  return RadToDeg(std::atan2(u.Cross(w).Norm(), u.Dot(w)));
}

double DihedralDeg(const Vec3& p, const Vec3& q, const Vec3& a, const Vec3& b) {
  Vec3 t = q - p;
  double tn = t.Norm();
  if (tn <= 0) throw Error(Code::kInvalidArgument, "degenerate hinge");
  t = t / tn;
  // Project a, b into the plane orthogonal to the hinge.
  Vec3 u = a - p;
  Vec3 w = b - p;
  u = u - t * u.Dot(t);
  w = w - t * w.Dot(t);
  if (u.Norm() <= 0 || w.Norm() <= 0)
    throw Error(Code::kInvalidArgument, "dihedral side on hinge");
  double ang = RadToDeg(std::atan2(u.Cross(w).Norm(), u.Dot(w)));
  return ang == 0 ? 0 : ang;
}

double OrientedDihedralDeg(const Vec3& na, const Vec3& nb,
                           const Vec3& edge_in_a) {
  double s = na.Cross(nb).Dot(edge_in_a);
  double c = na.Dot(nb);
  // Normals equal: flat edge. Fold angle phi in (-180, 180], interior
  // dihedral is 180 - phi.
  double phi = RadToDeg(std::atan2(s, c));
  return 180.0 - phi;
}

Vec3 PolygonNormal(const std::vector<Vec3>& pts) {
  if (pts.size() < 3)
    throw Error(Code::kInvalidArgument, "polygon needs 3 or more vertices");
  Vec3 n{0, 0, 0};
  for (size_t i = 0; i < pts.size(); ++i) {
    const Vec3& a = pts[i];
    const Vec3& b = pts[(i + 1) % pts.size()];
    n.x += (a.y - b.y) * (a.z + b.z);
    n.y += (a.z - b.z) * (a.x + b.x);
    n.z += (a.x - b.x) * (a.y + b.y);
  }
  double len = n.Norm();
  if (len <= 0) throw Error(Code::kDegenerateMesh, "degenerate polygon");
  return n / len;
}

double PolygonArea(const std::vector<Vec3>& pts) {
  if (pts.size() < 3) return 0;
  Vec3 s{0, 0, 0};
  const Vec3& o = pts[0];
  for (size_t i = 1; i + 1 < pts.size(); ++i)
    s += (pts[i] - o).Cross(pts[i + 1] - o);
  return 0.5 * s.Norm();
}

bool NearestInt(double x, double eps, long long* out) {
  double r = std::round(x);
  if (std::fabs(x - r) > eps) return false;
  if (out) *out = static_cast<long long>(r);
  return true;
}

}  // namespace deltadome
