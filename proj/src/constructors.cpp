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

#include "constructors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace deltadome {

namespace {

// Assembles faces from raw coordinates, deduplicating vertices and
// squashing zero-length edges so degenerate corners vanish cleanly.
class MeshBuilder {
 public:
  explicit MeshBuilder(double weld_eps) : weld_(weld_eps) {}

  int Point(const Vec3& p) {
    for (int i = 0; i < static_cast<int>(mesh_.vertices.size()); ++i)
      if ((mesh_.vertices[i] - p).Norm() <= weld_) return i;
    mesh_.vertices.push_back(p);
    return static_cast<int>(mesh_.vertices.size()) - 1;
  }

  // Returns the face index, or -1 if the face collapsed.
  int Face(const std::vector<Vec3>& pts) {
    std::vector<int> ids;
    for (const Vec3& p : pts) {
      int v = Point(p);
      if (ids.empty() || ids.back() != v) ids.push_back(v);
    }
    while (ids.size() > 1 && ids.front() == ids.back()) ids.pop_back();
    if (ids.size() < 3) return -1;
    mesh_.faces.push_back(ids);
    return static_cast<int>(mesh_.faces.size()) - 1;
  }

  void SetBase(int f) { mesh_.base_face = f; }
  Mesh Take() {
    if (mesh_.base_face < 0)
      throw Error(Code::kInternal, "builder finished without a base");
    return std::move(mesh_);
  }

 private:
  Mesh mesh_;
  double weld_;
};

std::vector<Vec3> Reversed(std::vector<Vec3> pts) {
  std::reverse(pts.begin(), pts.end());
  return pts;
}

void RequireLength(const Vec3& a, const Vec3& b, double want,
                   const Tolerances& tol, const char* what) {
  if (std::fabs((a - b).Norm() - want) > tol.construct * std::max(1.0, want))
    throw Error(Code::kInternal,
                std::string("construction drift on ") + what);
}

// Four roof faces over a rectangle given counterclockwise from above:
// trapezoids along the longer sides, equilateral triangles over the
// shorter ones. Ridge height is shorter/sqrt(2). Equal sides give a
// pyramid through edge squashing.
void EmitRoof(MeshBuilder& mb, const std::vector<Vec3>& rect,
              const Tolerances& tol) {
  double len0 = (rect[1] - rect[0]).Norm();
  double len1 = (rect[2] - rect[1]).Norm();
  int lo = len0 >= len1 ? 0 : 1;  // first corner of a longer edge
  double a = std::max(len0, len1), b = std::min(len0, len1);
  const Vec3&v0 = rect[lo], &v1 = rect[lo + 1], &v2 = rect[lo + 2],
        &v3 = rect[(lo + 3) % 4];
  Vec3 c = (v0 + v1 + v2 + v3) / 4;
  Vec3 dir = (v1 - v0) / a;  // v0 to v1 is a longer edge by choice of lo
  Vec3 up = Vec3{0, 0, 1} * (b / std::sqrt(2.0));
  Vec3 r0 = c - dir * ((a - b) / 2) + up;
  Vec3 r1 = c + dir * ((a - b) / 2) + up;
  mb.Face({v0, v1, r1, r0});
  mb.Face({v2, v3, r0, r1});
  mb.Face({v1, v2, r1});
  mb.Face({v3, v0, r0});
  RequireLength(v1, r1, b, tol, "roof end edge");
  RequireLength(v0, r0, b, tol, "roof end edge");
}

Vec3 OutwardNormal2D(const Vec3& edge_dir) {
  // Counterclockwise boundary keeps the interior on the left, so outward
  // is the right-hand side.
  return {edge_dir.y, -edge_dir.x, 0};
}

}  // namespace

const char* PlanKindName(PlanKind k) {
  switch (k) {
    case PlanKind::kPyramid:
      return "pyramid";
    case PlanKind::kRoof:
      return "roof";
    case PlanKind::kTruncatedTetra:
      return "truncated-tetra";
    case PlanKind::kAntiprism:
      return "antiprism";
    case PlanKind::kLayered:
      return "layered";
  }
  return "?";
}

Mesh PyramidDome(int n, long long side, const Tolerances& tol) {
  if (side < 1) throw Error(Code::kInvalidArgument, "side must be >= 1");
  if (n == 6)
    throw Error(Code::kApexDegenerate,
                "hexagon pyramid is flat: apex height is zero");
  if (n < 3 || n > 5)
    throw Error(Code::kInvalidArgument, "pyramid covers 3 to 5 sides");
  PolygonSpec spec{std::vector<long long>(static_cast<size_t>(n), side)};
  EmbeddedPolygon base = Embed(spec, tol);
  Vec3 c{0, 0, 0};
  for (const Vec3& v : base.vertices) c += v;
  c = c / n;
  double s = static_cast<double>(side);
  double r = s / (2 * std::sin(kPi / n));
  Vec3 apex = c + Vec3{0, 0, std::sqrt(s * s - r * r)};

  MeshBuilder mb(tol.construct);
  int bf = mb.Face(Reversed(base.vertices));
  mb.SetBase(bf);
  for (int i = 0; i < n; ++i) {
    const Vec3& u = base.vertices[i];
    const Vec3& v = base.vertices[(i + 1) % n];
    mb.Face({u, v, apex});
    RequireLength(u, apex, s, tol, "pyramid slant");
  }
  return mb.Take();
}

Mesh RoofDome(long long a, long long b, const Tolerances& tol) {
  if (a < 1 || b < 1) throw Error(Code::kInvalidArgument, "sides must be >= 1");
  PolygonSpec spec{{a, b, a, b}};
  EmbeddedPolygon base = Embed(spec, tol);
  MeshBuilder mb(tol.construct);
  int bf = mb.Face(Reversed(base.vertices));
  mb.SetBase(bf);
  EmitRoof(mb, base.vertices, tol);
  return mb.Take();
}

Mesh TruncatedTetraDome(const std::vector<long long>& edges,
                        const std::vector<double>& angles_deg,
                        const Tolerances& tol) {
  if (!IsPolyiamondPolygon(edges, angles_deg, tol))
    throw Error(Code::kNotPolyiamond,
                "polygon is not a convex lattice polygon");

  // Canonical hexagon: insert a zero edge at every 60 degree corner, then
  // rotate so inserted zeros sit at odd positions (the corner cuts).
  size_t n = edges.size();
  std::vector<long long> h;
  std::vector<bool> inserted;
  for (size_t k = 0; k < n; ++k) {
    if (NearlyEq(angles_deg[k], 60, tol.angle_deg)) {
      h.push_back(0);
      inserted.push_back(true);
    }
    h.push_back(edges[k]);
    inserted.push_back(false);
  }
  if (h.size() != 6)
    throw Error(Code::kNotPolyiamond, "polygon does not canonicalize");
  // Prefer reading inserted zeros as vanished cuts, not vanished sides: it
  // picks the smaller triangle. Either reading builds a valid dome, so a
  // mix of both (a rhombus, say) just proceeds with zero length sides.
  bool rot = false;
  for (size_t k = 0; k < 6; ++k) rot |= (inserted[k] && k % 2 == 0);
  if (rot) std::rotate(h.begin(), h.begin() + 5, h.end());

  // Even slots are triangle side remainders, odd slots corner cuts;
  // cut[k] precedes side h[2k]. Closure makes the three sums agree.
  long long cut[3] = {h[5], h[1], h[3]};
  long long T = cut[0] + h[0] + cut[1];
  if (T != cut[1] + h[2] + cut[2] || T != cut[2] + h[4] + cut[0])
    throw Error(Code::kInternal, "triangle sides disagree");

  // Hexagon vertices; edge k runs in direction 60k degrees.
  std::vector<Vec3> H(6);
  Vec3 p{0, 0, 0};
  for (int k = 0; k < 6; ++k) {
    H[k] = p;
    double th = kPi * k / 3;
    p += Vec3{std::cos(th), std::sin(th), 0} * static_cast<double>(h[k]);
  }
  Vec3 C[3];
  for (int k = 0; k < 3; ++k) {
    double th = 2 * kPi * k / 3;
    C[k] = H[2 * k] - Vec3{std::cos(th), std::sin(th), 0} *
                          static_cast<double>(cut[k]);
  }
  Vec3 center = (C[0] + C[1] + C[2]) / 3;
  double Tf = static_cast<double>(T);
  Vec3 apex = center + Vec3{0, 0, Tf * std::sqrt(2.0 / 3.0)};
  Vec3 cut_apex[3];
  for (int k = 0; k < 3; ++k)
    cut_apex[k] = C[k] + (apex - C[k]) * (static_cast<double>(cut[k]) / Tf);

  MeshBuilder mb(tol.construct);
  std::vector<Vec3> base;
  for (int k = 0; k < 6; ++k) base.push_back(H[k]);
  int bf = mb.Face(Reversed(base));
  mb.SetBase(bf);
  for (int k = 0; k < 3; ++k) {
    // Side face: pentagon shrinking to a quad or triangle as cuts vanish.
    mb.Face({H[2 * k], H[2 * k + 1], cut_apex[(k + 1) % 3], apex,
             cut_apex[k]});
    // Cut face over the short hexagon edge before this side.
    if (cut[k] > 0)
      mb.Face({H[(2 * k + 5) % 6], H[2 * k], cut_apex[k]});
  }
  return mb.Take();
}

Mesh AntiprismDome(long long side, const Tolerances& tol) {
  if (side < 1) throw Error(Code::kInvalidArgument, "side must be >= 1");
  double s = static_cast<double>(side);
  double hh = s * std::sqrt(std::sqrt(3.0) - 1.0);
  std::vector<Vec3> B(6), L(6);
  for (int k = 0; k < 6; ++k) {
    double tb = kPi * k / 3;
    double tl = tb + kPi / 6;
    B[k] = Vec3{s * std::cos(tb), s * std::sin(tb), 0};
    L[k] = Vec3{s * std::cos(tl), s * std::sin(tl), hh};
  }
  MeshBuilder mb(tol.construct);
  int bf = mb.Face(Reversed(B));
  mb.SetBase(bf);
  for (int k = 0; k < 6; ++k) {
    int k1 = (k + 1) % 6;
    mb.Face({B[k], B[k1], L[k]});
    mb.Face({B[k1], L[k1], L[k]});
    RequireLength(B[k], L[k], s, tol, "antiprism band");
    RequireLength(B[k1], L[k], s, tol, "antiprism band");
  }
  mb.Face(L);
  return mb.Take();
}

Mesh LayeredDome(const PolygonSpec& spec, int parity, const Tolerances& tol) {
  int n = spec.n();
  if (n != 8 && n != 10 && n != 12)
    throw Error(Code::kInvalidArgument, "layered dome covers 8, 10, 12 sides");
  if (parity != 0 && parity != 1)
    throw Error(Code::kInvalidArgument, "parity must be 0 or 1");
  long long ell = spec.edges[parity];
  for (int k = parity; k < n; k += 2)
    if (spec.edges[k] != ell)
      throw Error(Code::kInvalidArgument,
                  "selected edge class is not constant");
  EmbeddedPolygon base = Embed(spec, tol);

  double lf = static_cast<double>(ell);
  double delta = lf / 2 * std::tan(kPi / n);
  double hh = std::sqrt(3 * lf * lf / 4 - delta * delta);

  int half = n / 2;
  std::vector<Vec3> lid(half);
  for (int t = 0; t < half; ++t) {
    int i = parity + 2 * t;
    const Vec3& u = base.vertices[i];
    const Vec3& v = base.vertices[(i + 1) % n];
    Vec3 dir = (v - u) / lf;
    lid[t] = (u + v) / 2 + OutwardNormal2D(dir) * delta + Vec3{0, 0, hh};
  }

  MeshBuilder mb(tol.construct);
  int bf = mb.Face(Reversed(base.vertices));
  mb.SetBase(bf);
  for (int t = 0; t < half; ++t) {
    int i = parity + 2 * t;             // constant-class edge
    int j = (i + 1) % n;                // following edge
    int t1 = (t + 1) % half;
    const Vec3& u = base.vertices[i];
    const Vec3& v = base.vertices[(i + 1) % n];
    const Vec3& w = base.vertices[(i + 2) % n];
    mb.Face({u, v, lid[t]});
    RequireLength(u, lid[t], lf, tol, "band triangle");
    RequireLength(v, lid[t], lf, tol, "band triangle");
    mb.Face({v, w, lid[t1], lid[t]});
    RequireLength(w, lid[t1], lf, tol, "band trapezoid leg");
    double top = static_cast<double>(spec.edges[j] + ell);
    RequireLength(lid[t], lid[t1], top, tol, "band trapezoid top");
  }

  if (n == 12) {
    mb.Face(lid);
  } else if (n == 10) {
    Vec3 c{0, 0, 0};
    for (const Vec3& v : lid) c += v;
    c = c / half;
    double L = (lid[1] - lid[0]).Norm();
    double r = L / (2 * std::sin(kPi / 5));
    Vec3 apex = c + Vec3{0, 0, std::sqrt(L * L - r * r)};
    for (int t = 0; t < half; ++t) {
      mb.Face({lid[t], lid[(t + 1) % half], apex});
      RequireLength(lid[t], apex, L, tol, "lid pyramid slant");
    }
  } else {
    EmitRoof(mb, lid, tol);
  }
  return mb.Take();
}

Mesh OneStoryDome(const PolygonSpec& lid_spec, const Tolerances& tol) {
  if (lid_spec.n() != 6)
    throw Error(Code::kInvalidArgument, "lid must be a hexagon");
  EmbeddedPolygon lid2 = Embed(lid_spec, tol);  // throws if it cannot close

  double alpha = std::tan(kPi / 12) / 2;
  double hh = std::sqrt(0.75 - alpha * alpha);
  std::vector<Vec3> L(6);
  for (int i = 0; i < 6; ++i) L[i] = lid2.vertices[i] + Vec3{0, 0, hh};

  // Band corners under each lid edge, pulled outward by alpha and inset
  // half a unit from the lid corners.
  std::vector<Vec3> P(6), Q(6);
  for (int i = 0; i < 6; ++i) {
    int i1 = (i + 1) % 6;
    double len = static_cast<double>(lid_spec.edges[i]);
    Vec3 dir = (L[i1] - L[i]) / len;
    Vec3 out = OutwardNormal2D(dir) * alpha - Vec3{0, 0, hh};
    P[i] = L[i] + dir * 0.5 + out;
    Q[i] = L[i1] - dir * 0.5 + out;
    RequireLength(L[i], P[i], 1, tol, "story leg");
    RequireLength(L[i1], Q[i], 1, tol, "story leg");
  }

  MeshBuilder mb(tol.construct);
  std::vector<Vec3> base;
  for (int i = 0; i < 6; ++i) {
    base.push_back(P[i]);
    if ((Q[i] - P[i]).Norm() > tol.construct) base.push_back(Q[i]);
  }
  int bf = mb.Face(Reversed(base));
  mb.SetBase(bf);
  for (int i = 0; i < 6; ++i) {
    int i1 = (i + 1) % 6;
    // Band face under lid edge i; triangle when the lid edge is a unit.
    mb.Face({P[i], Q[i], L[i1], L[i]});
    // Upward triangle at lid corner i1.
    mb.Face({Q[i], P[i1], L[i1]});
    RequireLength(Q[i], P[i1], 1, tol, "story floor edge");
  }
  mb.Face(L);
  return mb.Take();
}

DecideOutcome Decide(const PolygonSpec& spec, const Tolerances& tol) {
  if (!tol.Valid()) throw Error(Code::kInvalidArgument, "bad tolerances");
  DecideOutcome out;
  out.report = CheckConditions(spec);
  if (!out.report.domeable) return out;

  DomePlan plan;
  plan.spec = spec;
  std::ostringstream sum;
  int n = spec.n();
  if (n == 3 || n == 5 || (n == 4 && spec.edges[0] == spec.edges[1])) {
    plan.kind = PlanKind::kPyramid;
    sum << "pyramid over the regular " << n << "-gon of side "
        << spec.edges[0];
  } else if (n == 4) {
    plan.kind = PlanKind::kRoof;
    sum << "roof over the " << spec.edges[0] << " x " << spec.edges[1]
        << " rectangle";
  } else if (n == 6) {
    plan.kind = PlanKind::kTruncatedTetra;
    sum << "triangular pyramid with corners cut at (" << spec.edges[1] << ", "
        << spec.edges[3] << ", " << spec.edges[5] << ")";
  } else {
    plan.kind = PlanKind::kLayered;
    plan.parity = out.report.parity;
    sum << "band of side-" << spec.edges[plan.parity]
        << " triangles and trapezoids under a "
        << (n == 8 ? "roof" : n == 10 ? "pyramid" : "hexagon") << " lid";
  }
  plan.summary = sum.str();
  out.plan = plan;
  return out;
}

Mesh BuildDome(const PolygonSpec& spec, const Tolerances& tol) {
  DecideOutcome out = Decide(spec, tol);
  if (!out.plan)
    throw Error(Code::kNotDomeable, out.report.detail);
  const DomePlan& p = *out.plan;
  switch (p.kind) {
    case PlanKind::kPyramid:
      return PyramidDome(spec.n(), spec.edges[0], tol);
    case PlanKind::kRoof:
      return RoofDome(spec.edges[0], spec.edges[1], tol);
    case PlanKind::kTruncatedTetra: {
      std::vector<double> angles(6, 120.0);
      return TruncatedTetraDome(spec.edges, angles, tol);
    }
    case PlanKind::kAntiprism:
      return AntiprismDome(spec.edges[0], tol);
    case PlanKind::kLayered:
      return LayeredDome(spec, p.parity, tol);
  }
  throw Error(Code::kInternal, "unhandled plan");
}

}  // namespace deltadome
