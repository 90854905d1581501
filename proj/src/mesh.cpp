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

#include "mesh.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace deltadome {

std::vector<Vec3> Mesh::FacePoints(int f) const {
  std::vector<Vec3> pts;
  pts.reserve(faces[f].size());
  for (int v : faces[f]) pts.push_back(vertices[v]);
  return pts;
}

Topology BuildTopology(const Mesh& mesh) {
  if (mesh.F() < 2) throw Error(Code::kDegenerateMesh, "too few faces");
  Topology topo;
  std::map<std::pair<int, int>, int> directed_seen;
  for (int f = 0; f < mesh.F(); ++f) {
    const auto& face = mesh.faces[f];
    if (face.size() < 3)
      throw Error(Code::kDegenerateMesh, "face with fewer than 3 vertices");
    std::set<int> uniq(face.begin(), face.end());
    if (uniq.size() != face.size())
      throw Error(Code::kDegenerateMesh, "face repeats a vertex");
    for (size_t i = 0; i < face.size(); ++i) {
      int a = face[i];
      int b = face[(i + 1) % face.size()];
      if (a < 0 || b < 0 || a >= mesh.V() || b >= mesh.V())
        throw Error(Code::kDegenerateMesh, "vertex index out of range");
      if (directed_seen.count({a, b}))
        throw Error(Code::kDegenerateMesh,
                    "directed edge used twice; orientation inconsistent");
      directed_seen[{a, b}] = f;
      auto key = std::minmax(a, b);
      auto it = topo.index.find(key);
      if (it == topo.index.end()) {
        topo.index[key] = topo.E();
        EdgeUse e;
        e.a = key.first;
        e.b = key.second;
        (a == key.first ? e.fa : e.fb) = f;
        topo.edges.push_back(e);
      } else {
        EdgeUse& e = topo.edges[it->second];
        int& slot = (a == e.a) ? e.fa : e.fb;
        if (slot != -1)
          throw Error(Code::kDegenerateMesh, "edge with more than two faces");
        slot = f;
      }
    }
  }
  for (const EdgeUse& e : topo.edges)
    if (e.fa == -1 || e.fb == -1)
      throw Error(Code::kDegenerateMesh, "boundary edge in closed mesh");

  // Face graph must be connected for a single closed surface.
  std::vector<int> seen(mesh.F(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    const auto& face = mesh.faces[f];
    for (size_t i = 0; i < face.size(); ++i) {
      auto key = std::minmax(face[i], face[(i + 1) % face.size()]);
      const EdgeUse& e = topo.edges[topo.index.at(key)];
      int g = (e.fa == f) ? e.fb : e.fa;
      if (!seen[g]) {
        seen[g] = 1;
        ++reached;
        stack.push_back(g);
      }
    }
  }
  if (reached != mesh.F())
    throw Error(Code::kDegenerateMesh, "disconnected face set");

  // Every vertex must appear in some face.
  std::vector<int> used(mesh.V(), 0);
  for (const auto& face : mesh.faces)
    for (int v : face) used[v] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end())
    throw Error(Code::kDegenerateMesh, "unreferenced vertex");
  return topo;
}

Vec3 FaceNormal(const Mesh& mesh, int f) {
  return PolygonNormal(mesh.FacePoints(f));
}

double FaceArea(const Mesh& mesh, int f) {
  return PolygonArea(mesh.FacePoints(f));
}

double EdgeDihedralDeg(const Mesh& mesh, const Topology& topo, int e) {
  const EdgeUse& eu = topo.edges[e];
  Vec3 na = FaceNormal(mesh, eu.fa);
  Vec3 nb = FaceNormal(mesh, eu.fb);
  Vec3 t = (mesh.vertices[eu.b] - mesh.vertices[eu.a]).Normalized();
  // fa traverses a->b, so t is fa's traversal direction.
  return OrientedDihedralDeg(na, nb, t);
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int Find(int x) { return p[x] == x ? x : p[x] = Find(p[x]); }
  void Unite(int a, int b) { p[Find(a)] = Find(b); }
};

// Chain leftover directed edges into a single cycle. Returns empty on
// failure (branching or disconnected boundary).
std::vector<int> ChainCycle(const std::vector<std::pair<int, int>>& edges) {
  std::map<int, int> next;
  for (auto& [a, b] : edges) {
    if (next.count(a)) return {};
    next[a] = b;
  }
  std::vector<int> cycle;
  int start = edges.front().first;
  int cur = start;
  do {
    cycle.push_back(cur);
    auto it = next.find(cur);
    if (it == next.end()) return {};
    cur = it->second;
  } while (cur != start && cycle.size() <= edges.size());
  if (cycle.size() != edges.size()) return {};
  return cycle;
}

}  // namespace

Mesh MergeCoplanarFaces(const Mesh& mesh, const Tolerances& tol) {
  Topology topo = BuildTopology(mesh);
  UnionFind uf(mesh.F());
  for (int e = 0; e < topo.E(); ++e) {
    const EdgeUse& eu = topo.edges[e];
    if (eu.fa == mesh.base_face || eu.fb == mesh.base_face) continue;
    if (std::fabs(EdgeDihedralDeg(mesh, topo, e) - 180.0) <= tol.angle_deg)
      uf.Unite(eu.fa, eu.fb);
  }

  // Gather faces per group, keep group order by least member.
  std::map<int, std::vector<int>> groups;
  for (int f = 0; f < mesh.F(); ++f) groups[uf.Find(f)].push_back(f);

  Mesh out;
  out.vertices = mesh.vertices;
  std::vector<std::pair<int, std::vector<int>>> ordered;
  for (auto& [root, members] : groups)
    ordered.push_back({*std::min_element(members.begin(), members.end()),
                       members});
  std::sort(ordered.begin(), ordered.end());

  for (auto& [least, members] : ordered) {
    if (members.size() == 1) {
      out.faces.push_back(mesh.faces[members[0]]);
    } else {
      // Boundary of the union: directed edges not cancelled by a reverse
      // partner inside the group.
      std::set<std::pair<int, int>> dirs;
      for (int f : members) {
        const auto& face = mesh.faces[f];
        for (size_t i = 0; i < face.size(); ++i)
          dirs.insert({face[i], face[(i + 1) % face.size()]});
      }
      std::vector<std::pair<int, int>> boundary;
      for (auto& d : dirs)
        if (!dirs.count({d.second, d.first})) boundary.push_back(d);
      if (boundary.size() < 3)
        throw Error(Code::kDegenerateMesh, "merged region has no boundary");
      std::vector<int> cycle = ChainCycle(boundary);
      if (cycle.empty())
        throw Error(Code::kDegenerateMesh, "merged region is not a disk");
      out.faces.push_back(cycle);
    }
    if (std::find(members.begin(), members.end(), mesh.base_face) !=
        members.end())
      out.base_face = static_cast<int>(out.faces.size()) - 1;
  }

  // Drop vertices that are flat in every incident face.
  std::vector<char> keep(out.V(), 0);
  std::vector<char> corner(out.V(), 0);
  for (const auto& face : out.faces) {
    size_t m = face.size();
    for (size_t i = 0; i < m; ++i) {
      keep[face[i]] = 1;
      double ang = AngleDegAt(out.vertices[face[i]],
                              out.vertices[face[(i + m - 1) % m]],
                              out.vertices[face[(i + 1) % m]]);
      if (std::fabs(ang - 180.0) > tol.angle_deg) corner[face[i]] = 1;
    }
  }
  for (int v = 0; v < out.V(); ++v)
    if (!corner[v]) keep[v] = 0;
  std::vector<int> remap(out.V(), -1);
  std::vector<Vec3> verts;
  for (int v = 0; v < out.V(); ++v)
    if (keep[v]) {
      remap[v] = static_cast<int>(verts.size());
      verts.push_back(out.vertices[v]);
    }
  for (auto& face : out.faces) {
    std::vector<int> nf;
    for (int v : face)
      if (keep[v]) nf.push_back(remap[v]);
    if (nf.size() < 3)
      throw Error(Code::kDegenerateMesh, "face collapsed during cleanup");
    face = nf;
  }
  out.vertices = verts;
  BuildTopology(out);  // sanity: still a closed surface
  return out;
}

Mesh WithBaseFace(const Mesh& mesh, int f) {
  if (f < 0 || f >= mesh.F())
    throw Error(Code::kInvalidArgument, "base face out of range");
  Vec3 n = FaceNormal(mesh, f);
  Vec3 v0 = mesh.vertices[mesh.faces[f][0]];
  Vec3 v1 = mesh.vertices[mesh.faces[f][1]];
  Vec3 X = (v1 - v0).Normalized();
  Vec3 Z = -n;
  Vec3 Y = Z.Cross(X);
  Mesh out = mesh;
  for (Vec3& p : out.vertices) {
    Vec3 d = p - v0;
    p = {d.Dot(X), d.Dot(Y), d.Dot(Z)};
  }
  out.base_face = f;
  return out;
}

std::vector<UnitTri> DecomposeFaceUnits(const Mesh& mesh, int f,
                                        const Tolerances& tol) {
  std::vector<Vec3> pts = mesh.FacePoints(f);
  size_t m = pts.size();
  Vec3 n = PolygonNormal(pts);
  Vec3 v0 = pts[0];
  Vec3 ex = (pts[1] - pts[0]).Normalized();
  Vec3 ey = n.Cross(ex);

  // Planarity and lattice checks.
  for (const Vec3& p : pts)
    if (std::fabs((p - v0).Dot(n)) > tol.verify)
      throw Error(Code::kNotPolyiamond, "face not planar");
  for (size_t i = 0; i < m; ++i) {
    double len = (pts[(i + 1) % m] - pts[i]).Norm();
    if (!NearestInt(len, tol.verify, nullptr) || len < 0.5)
      throw Error(Code::kNotPolyiamond, "face edge not an integer");
    double ang = AngleDegAt(pts[i], pts[(i + m - 1) % m], pts[(i + 1) % m]);
    long long sixth;
    if (!NearestInt(ang / 60.0, tol.angle_deg, &sixth) || sixth < 1 ||
        sixth > 2)
      throw Error(Code::kNotPolyiamond, "face corner not 60 or 120 degrees");
  }

  // 2D coordinates, then triangular lattice coordinates.
  auto to2d = [&](const Vec3& p) {
    Vec3 d = p - v0;
    return std::pair<double, double>{d.Dot(ex), d.Dot(ey)};
  };
  const double kRow = std::sqrt(3.0) / 2.0;
  std::vector<std::pair<double, double>> poly2;
  long long umin = 0, umax = 0, wmin = 0, wmax = 0;
  for (const Vec3& p : pts) {
    auto [x, y] = to2d(p);
    poly2.push_back({x, y});
    double wf = y / kRow;
    double uf = x - wf / 2;
    long long u, w;
    if (!NearestInt(uf, 1e-6 + tol.verify, &u) ||
        !NearestInt(wf, 1e-6 + tol.verify, &w))
      throw Error(Code::kNotPolyiamond, "vertex off the unit lattice");
    umin = std::min(umin, u);
    umax = std::max(umax, u);
    wmin = std::min(wmin, w);
    wmax = std::max(wmax, w);
  }

  auto lattice_pt = [&](double u, double w) {
    return std::pair<double, double>{u + w / 2, w * kRow};
  };
  // Signed distance margin: unit cell centroids sit sqrt(3)/6 away from any
  // lattice line, and the polygon boundary runs along lattice lines.
  auto inside = [&](double cx, double cy) {
    for (size_t i = 0; i < m; ++i) {
      auto [ax, ay] = poly2[i];
      auto [bx, by] = poly2[(i + 1) % m];
      double ex2 = bx - ax, ey2 = by - ay;
      double cross = ex2 * (cy - ay) - ey2 * (cx - ax);
      if (cross / std::hypot(ex2, ey2) < 0.1) return false;
    }
    return true;
  };
  auto to3d = [&](std::pair<double, double> q) {
    return v0 + ex * q.first + ey * q.second;
  };

  std::vector<UnitTri> tris;
  for (long long w = wmin - 1; w <= wmax + 1; ++w) {
    for (long long u = umin - 1; u <= umax + 1; ++u) {
      auto A = lattice_pt(u, w), B = lattice_pt(u + 1, w),
           C = lattice_pt(u, w + 1), D = lattice_pt(u + 1, w + 1);
      double upx = (A.first + B.first + C.first) / 3;
      double upy = (A.second + B.second + C.second) / 3;
      if (inside(upx, upy))
        tris.push_back({{to3d(A), to3d(B), to3d(C)}});
      double dnx = (B.first + D.first + C.first) / 3;
      double dny = (B.second + D.second + C.second) / 3;
      if (inside(dnx, dny))
        tris.push_back({{to3d(B), to3d(D), to3d(C)}});
    }
  }

  double area = PolygonArea(pts);
  long long expect;
  if (!NearestInt(area / (std::sqrt(3.0) / 4.0), 1e-6 + tol.verify, &expect) ||
      expect != static_cast<long long>(tris.size()))
    throw Error(Code::kInternal, "unit decomposition area mismatch");
  return tris;
}

bool CongruentMeshes(const Mesh& a, const Mesh& b, double eps) {
  if (a.V() != b.V() || a.F() != b.F()) return false;
  if (a.base_face < 0 || b.base_face < 0) return false;
  const auto& bb = b.faces[b.base_face];
  if (a.faces[a.base_face].size() != bb.size()) return false;

  Mesh pa = WithBaseFace(a, a.base_face);

  // Canonical face keys of pa under a vertex mapping.
  auto face_key = [](const std::vector<int>& f) {
    std::vector<int> k = f;
    std::rotate(k.begin(), std::min_element(k.begin(), k.end()), k.end());
    return k;
  };
  std::set<std::vector<int>> fa_keys;
  for (const auto& f : pa.faces) fa_keys.insert(face_key(f));

  for (size_t off = 0; off < bb.size(); ++off) {
    Mesh rb = b;
    std::vector<int> rot(bb.size());
    for (size_t i = 0; i < bb.size(); ++i) rot[i] = bb[(i + off) % bb.size()];
    rb.faces[b.base_face] = rot;
    Mesh pb = WithBaseFace(rb, b.base_face);
    // Vertex correspondence by nearest match.
    std::vector<int> map_ab(pa.V(), -1);
    std::vector<char> taken(pb.V(), 0);
    bool ok = true;
    for (int v = 0; v < pa.V() && ok; ++v) {
      ok = false;
      for (int w = 0; w < pb.V(); ++w) {
        if (taken[w]) continue;
        if ((pa.vertices[v] - pb.vertices[w]).Norm() <= eps) {
          map_ab[v] = w;
          taken[w] = 1;
          ok = true;
          break;
        }
      }
    }
    if (!ok) continue;
    std::set<std::vector<int>> fb_keys;
    for (const auto& f : pb.faces) fb_keys.insert(face_key(f));
    std::set<std::vector<int>> fa_mapped;
    for (auto k : fa_keys) {
      for (int& v : k) v = map_ab[v];
      fa_mapped.insert(face_key(k));
    }
    if (fa_mapped == fb_keys) return true;
  }
  return false;
}

}  // namespace deltadome
