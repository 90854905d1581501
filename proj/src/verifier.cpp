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

#include "verifier.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace deltadome {

namespace {

// Base boundary in counterclockwise order seen from above. The stored base
// face winds the other way since its outward normal is -z.
std::vector<int> BaseBoundary(const Mesh& mesh) {
  std::vector<int> b = mesh.faces[mesh.base_face];
  std::reverse(b.begin(), b.end());
  return b;
}

double InteriorAngleAt(const Mesh& mesh, const std::vector<int>& cycle,
                       size_t i) {
  size_t m = cycle.size();
  return AngleDegAt(mesh.vertices[cycle[i]],
                    mesh.vertices[cycle[(i + m - 1) % m]],
                    mesh.vertices[cycle[(i + 1) % m]]);
}

// Boundary positions where the base polygon actually turns. Triangulated
// meshes subdivide long base edges, so collinear points are not corners.
std::vector<size_t> CornerPositions(const Mesh& mesh,
                                    const std::vector<int>& boundary,
                                    const Tolerances& tol) {
  std::vector<size_t> out;
  for (size_t i = 0; i < boundary.size(); ++i)
    if (InteriorAngleAt(mesh, boundary, i) < 180.0 - (1e-5 + tol.angle_deg))
      out.push_back(i);
  return out;
}

struct Audit {
  const Mesh& mesh;
  const Tolerances& tol;
  AuditReport& rep;

  void Add(const std::string& id, bool passed, bool enforced,
           const std::string& msg) {
    rep.checks.push_back({id, passed, enforced, msg});
    if (!passed && enforced && rep.failure.empty()) rep.failure = id;
  }
  void Add(const std::string& id, bool passed, const std::string& msg) {
    Add(id, passed, true, msg);
  }
};

}  // namespace

const CheckResult* AuditReport::Find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

NormalsSummary ClassifyNormals(const Mesh& mesh, const Tolerances& tol) {
  NormalsSummary out;
  std::vector<int> boundary = BaseBoundary(mesh);
  std::set<std::pair<int, int>> base_edges;
  size_t n = boundary.size();
  for (size_t i = 0; i < n; ++i) {
    auto [a, b] = std::minmax(boundary[i], boundary[(i + 1) % n]);
    base_edges.insert({a, b});
  }
  out.all_base_angles_ge_120 = true;
  for (size_t i = 0; i < n; ++i)
    out.all_base_angles_ge_120 &=
        InteriorAngleAt(mesh, boundary, i) >= 120.0 - tol.angle_deg;

  for (int f = 0; f < mesh.F(); ++f) {
    if (f == mesh.base_face) continue;
    const auto& face = mesh.faces[f];
    bool touches = false;
    for (size_t i = 0; i < face.size() && !touches; ++i) {
      auto [a, b] = std::minmax(face[i], face[(i + 1) % face.size()]);
      touches = base_edges.count({a, b}) > 0;
    }
    if (!touches) continue;
    double nz = FaceNormal(mesh, f).z;
    // nz equals cos of the dihedral against the base plane.
    if (nz < -1e-12) {
      out.down_face_ids.push_back(f);
    } else {
      out.up_face_ids.push_back(f);
    }
  }
  out.d = static_cast<int>(out.down_face_ids.size());
  return out;
}

CurvatureSummary AuditCurvature(const Mesh& mesh, const Tolerances& tol) {
  CurvatureSummary out;
  // A closed solid with no designated base has no base vertices; every
  // vertex counts as a dome vertex.
  std::vector<int> boundary =
      mesh.base_face >= 0 ? BaseBoundary(mesh) : std::vector<int>{};
  std::set<int> base_verts(boundary.begin(), boundary.end());

  // Face angle sums per vertex, base face excluded.
  std::vector<double> dome_angle(mesh.V(), 0);
  std::vector<double> full_angle(mesh.V(), 0);
  for (int f = 0; f < mesh.F(); ++f) {
    const auto& face = mesh.faces[f];
    for (size_t i = 0; i < face.size(); ++i) {
      double a = InteriorAngleAt(mesh, face, i);
      full_angle[face[i]] += a;
      if (f != mesh.base_face) dome_angle[face[i]] += a;
    }
  }

  out.base_hypothesis_k3 = mesh.base_face >= 0;
  for (int v = 0; v < mesh.V(); ++v) {
    double defect = 360.0 - full_angle[v];
    out.total_deg += defect;
    if (base_verts.count(v)) {
      out.base_sum_deg += defect;
      long long k;
      if (!NearestInt(dome_angle[v] / 60.0, 1e-5 + tol.angle_deg, &k) || k != 3)
        out.base_hypothesis_k3 = false;
    } else {
      long long k;
      if (NearestInt(dome_angle[v] / 60.0, 1e-5 + tol.angle_deg, &k)) {
        if (k == 3) ++out.dome_v3;
        if (k == 4) ++out.dome_v4;
        if (k == 5) ++out.dome_v5;
        if (k == 6) ++out.dome_v6;
      }
    }
  }
  return out;
}

AuditReport VerifyFull(const Mesh& mesh, const PolygonSpec* spec,
                       const Tolerances& tol) {
  AuditReport rep;
  Audit a{mesh, tol, rep};
  if (!tol.Valid()) throw Error(Code::kInvalidArgument, "bad tolerances");

  rep.V = mesh.V();
  rep.F = mesh.F();

  // Structure: closed, orientable, connected, one sphere.
  Topology topo;
  try {
    topo = BuildTopology(mesh);
    a.Add("structure.closed", true, "every edge bounds two faces");
    a.Add("structure.orientable", true, "face windings consistent");
  } catch (const Error& e) {
    a.Add("structure.closed", false, e.what());
    rep.passed = false;
    return rep;
  }
  rep.E = topo.E();
  {
    int euler = mesh.V() - topo.E() + mesh.F();
    std::ostringstream m;
    m << "V-E+F = " << euler;
    a.Add("structure.euler", euler == 2, m.str());
  }
  if (mesh.base_face < 0 || mesh.base_face >= mesh.F()) {
    a.Add("base.plane", false, "mesh has no base face");
    rep.passed = false;
    return rep;
  }
  rep.n_base = static_cast<int>(mesh.faces[mesh.base_face].size());

  // Base sits in z=0 with outward normal -z.
  {
    bool flat = true;
    for (int v : mesh.faces[mesh.base_face])
      flat &= std::fabs(mesh.vertices[v].z) <= tol.verify;
    Vec3 bn = FaceNormal(mesh, mesh.base_face);
    bool down = (bn + Vec3{0, 0, 1}).Norm() <= tol.verify;
    a.Add("base.plane", flat && down,
          flat ? (down ? "base in z=0, normal -z" : "base normal not -z")
               : "base vertex off the z=0 plane");
    if (!(flat && down)) {
      rep.passed = false;
      return rep;
    }
  }

  // Face geometry: planar, convex, integer edges.
  {
    bool planar = true, convex = true;
    std::string pmsg = "all faces planar", cmsg = "all faces convex";
    for (int f = 0; f < mesh.F(); ++f) {
      auto pts = mesh.FacePoints(f);
      Vec3 n = PolygonNormal(pts);
      for (const Vec3& p : pts)
        if (std::fabs((p - pts[0]).Dot(n)) > tol.verify) {
          planar = false;
          pmsg = "face " + std::to_string(f) + " not planar";
        }
      size_t m = pts.size();
      for (size_t i = 0; i < m; ++i) {
        Vec3 e1 = pts[(i + 1) % m] - pts[i];
        Vec3 e2 = pts[(i + 2) % m] - pts[(i + 1) % m];
        if (e1.Cross(e2).Dot(n) < -tol.verify) {
          convex = false;
          cmsg = "face " + std::to_string(f) + " has a reflex corner";
        }
      }
    }
    a.Add("faces.planar", planar, pmsg);
    a.Add("faces.convex", convex, cmsg);
  }
  {
    bool ok = true;
    std::string msg = "all edge lengths integers";
    for (const EdgeUse& e : topo.edges) {
      double len = (mesh.vertices[e.b] - mesh.vertices[e.a]).Norm();
      long long li;
      if (!NearestInt(len, tol.verify, &li) || li < 1) {
        ok = false;
        std::ostringstream m;
        m << "edge (" << e.a << "," << e.b << ") has length " << len;
        msg = m.str();
      }
    }
    a.Add("faces.integer_edges", ok, msg);
  }

  // Dome faces are convex lattice polygons made of unit triangles; areas
  // must survive the decomposition exactly.
  {
    bool ok = true;
    std::string msg;
    double area_faces = 0;
    long long units = 0;
    for (int f = 0; f < mesh.F() && ok; ++f) {
      if (f == mesh.base_face) continue;
      try {
        units += static_cast<long long>(DecomposeFaceUnits(mesh, f, tol).size());
        area_faces += FaceArea(mesh, f);
      } catch (const Error& e) {
        ok = false;
        msg = "face " + std::to_string(f) + ": " + e.what();
      }
    }
    rep.unit_triangles = units;
    if (ok) {
      std::ostringstream m;
      m << units << " unit triangles";
      msg = m.str();
      double expect = units * std::sqrt(3.0) / 4.0;
      bool area_ok =
          std::fabs(area_faces - expect) <= tol.verify * std::max(1.0, expect);
      a.Add("faces.polyiamond", true, msg);
      a.Add("faces.area_conservation", area_ok,
            area_ok ? "dome area equals unit count times sqrt(3)/4"
                    : "dome area drifts from the unit count");
    } else {
      a.Add("faces.polyiamond", false, msg);
    }
  }

  // Global convexity three ways: local dihedrals, supporting halfspaces,
  // and the dome staying strictly above the base plane.
  {
    bool ok = true;
    std::string msg = "all dihedrals within 180";
    for (int e = 0; e < topo.E(); ++e) {
      double d = EdgeDihedralDeg(mesh, topo, e);
      if (d > 180.0 + tol.angle_deg) {
        ok = false;
        std::ostringstream m;
        m << "edge (" << topo.edges[e].a << "," << topo.edges[e].b
          << ") reflex: " << d;
        msg = m.str();
      }
    }
    a.Add("convexity.edge_dihedral", ok, msg);
  }
  {
    bool ok = true;
    std::string msg = "every vertex inside every face halfspace";
    for (int f = 0; f < mesh.F() && ok; ++f) {
      Vec3 n = FaceNormal(mesh, f);
      Vec3 anchor = mesh.vertices[mesh.faces[f][0]];
      for (const Vec3& p : mesh.vertices)
        if ((p - anchor).Dot(n) > tol.verify) {
          ok = false;
          msg = "vertex escapes the plane of face " + std::to_string(f);
        }
    }
    a.Add("convexity.halfspace", ok, msg);
  }
  {
    std::set<int> base_verts(mesh.faces[mesh.base_face].begin(),
                             mesh.faces[mesh.base_face].end());
    bool ok = true;
    int dome_count = 0;
    for (int v = 0; v < mesh.V(); ++v)
      if (!base_verts.count(v)) {
        ++dome_count;
        if (mesh.vertices[v].z <= tol.verify) ok = false;
      }
    // A doubly covered polygon has no dome vertex at all; reject it here.
    ok = ok && dome_count > 0;
    a.Add("convexity.dome_above_base", ok,
          ok ? "dome vertices strictly above the base"
             : "no dome vertex strictly above the base plane");
  }

  // Base boundary against the requested polygon. Polygon level facts use
  // the corner loop; subdivision points on long edges carry no information.
  std::vector<int> boundary = BaseBoundary(mesh);
  size_t n = boundary.size();
  std::vector<size_t> corner = CornerPositions(mesh, boundary, tol);
  size_t nc = corner.size();
  if (nc < 3) {
    a.Add("base.polygon", false, "base boundary has fewer than 3 corners");
    rep.passed = false;
    return rep;
  }
  rep.n_base = static_cast<int>(nc);
  if (spec) {
    bool ok = false;
    std::vector<long long> lens;
    for (size_t i = 0; i < nc && lens.size() == i; ++i) {
      double len = (mesh.vertices[boundary[corner[(i + 1) % nc]]] -
                    mesh.vertices[boundary[corner[i]]])
                       .Norm();
      long long li;
      if (NearestInt(len, tol.verify, &li)) lens.push_back(li);
    }
    if (lens.size() == nc && spec->edges.size() == nc) {
      auto cyclic_match = [&](const std::vector<long long>& w) {
        for (size_t r = 0; r < nc; ++r) {
          bool m = true;
          for (size_t i = 0; i < nc; ++i) m &= (w[(i + r) % nc] == lens[i]);
          if (m) return true;
        }
        return false;
      };
      std::vector<long long> fwd = spec->edges;
      std::vector<long long> bwd(fwd.rbegin(), fwd.rend());
      ok = cyclic_match(fwd) || cyclic_match(bwd);
    }
    a.Add("base.matches_spec", ok,
          ok ? "base boundary equals the polygon's edge word"
             : "base boundary differs from the polygon");
  }

  // Curvature accounting.
  rep.curvature = AuditCurvature(mesh, tol);
  rep.normals = ClassifyNormals(mesh, tol);
  bool hyp = rep.curvature.base_hypothesis_k3;
  bool beta120 = rep.normals.all_base_angles_ge_120;
  {
    bool ok = true;
    std::vector<int> boundary2 = boundary;
    for (size_t i = 0; i < n; ++i) {
      double beta = InteriorAngleAt(mesh, boundary2, i);
      if (beta < 120.0 - tol.angle_deg) continue;  // hypothesis not met here
      double sum = 0;
      for (int f = 0; f < mesh.F(); ++f) {
        if (f == mesh.base_face) continue;
        const auto& face = mesh.faces[f];
        for (size_t j = 0; j < face.size(); ++j)
          if (face[j] == boundary2[i]) sum += InteriorAngleAt(mesh, face, j);
      }
      long long k;
      if (!NearestInt(sum / 60.0, 1e-5 + tol.angle_deg, &k) || k != 3)
        ok = false;
    }
    a.Add("curvature.base_vertex_degree", ok,
          ok ? "three unit angles at every wide base vertex"
             : "a base vertex with angle >= 120 does not meet 3 unit angles");
  }
  {
    std::ostringstream m;
    m << "base defect sum " << rep.curvature.base_sum_deg << " deg";
    a.Add("curvature.base_sum",
          NearlyEq(rep.curvature.base_sum_deg, 360.0, 1e-4 + 100 * tol.angle_deg),
          hyp, m.str());
    double vid = rep.curvature.dome_v3 + rep.curvature.dome_v4 * 2.0 / 3.0 +
                 rep.curvature.dome_v5 / 3.0;
    std::ostringstream m2;
    m2 << "V3 + 2/3 V4 + 1/3 V5 = " << vid;
    a.Add("curvature.v_identity", NearlyEq(vid, 2.0, 1e-9), hyp, m2.str());
    std::ostringstream m3;
    m3 << "total defect " << rep.curvature.total_deg << " deg";
    a.Add("curvature.total",
          NearlyEq(rep.curvature.total_deg, 720.0, 1e-4 + 100 * tol.angle_deg),
          true, m3.str());
  }

  // Downward faces along the base.
  {
    std::ostringstream m;
    m << "d = " << rep.normals.d << ", n = " << nc;
    a.Add("normals.d_ge_half_n", rep.normals.d * 2 >= static_cast<int>(nc),
          beta120, m.str());
    a.Add("normals.d_le_6", rep.normals.d <= 6, beta120, m.str());
  }
  {
    // Downward faces meet their base edge at 60 degree corners, and their
    // dome vertices are private to the face.
    bool angles_ok = true;
    bool private_ok = true;
    std::set<int> base_verts(boundary.begin(), boundary.end());
    std::set<int> seen;
    for (int f : rep.normals.down_face_ids) {
      const auto& face = mesh.faces[f];
      for (size_t j = 0; j < face.size(); ++j) {
        int v = face[j];
        if (base_verts.count(v)) {
          double angl = InteriorAngleAt(mesh, face, j);
          if (!NearlyEq(angl, 60.0, 1e-5 + tol.angle_deg)) angles_ok = false;
        } else {
          if (seen.count(v)) private_ok = false;
          seen.insert(v);
        }
      }
    }
    a.Add("normals.down_face_angles", angles_ok, beta120,
          angles_ok ? "downward faces meet the base at 60 degrees"
                    : "a downward face has a non 60 degree base corner");
    a.Add("normals.private_dome_vertices", private_ok, beta120,
          private_ok ? "downward faces share no dome vertices"
                     : "two downward faces share a dome vertex");
  }

  // Dihedral classes over an equiangular base: all equal for odd n,
  // alternating classes equal for even n. Every boundary segment of a
  // polygon edge must agree with its class representative.
  rep.base_dihedrals_deg.resize(nc);
  {
    std::vector<double> seg(n);
    for (size_t i = 0; i < n; ++i) {
      auto key = std::minmax(boundary[i], boundary[(i + 1) % n]);
      seg[i] = EdgeDihedralDeg(mesh, topo, topo.index.at(key));
    }
    std::vector<size_t> owner(n);
    for (size_t e = 0; e < nc; ++e) {
      size_t lo = corner[e];
      size_t hi = e + 1 < nc ? corner[e + 1] : corner[0] + n;
      for (size_t p = lo; p < hi; ++p) owner[p % n] = e;
      rep.base_dihedrals_deg[e] = seg[lo];
    }
    bool equiangular = true;
    double b0 = InteriorAngleAt(mesh, boundary, corner[0]);
    for (size_t i = 1; i < nc; ++i)
      equiangular &= NearlyEq(InteriorAngleAt(mesh, boundary, corner[i]), b0,
                              1e-5 + tol.angle_deg);
    bool ok = true;
    double eps = 1e-5 + 100 * tol.angle_deg;
    for (size_t i = 0; i < n; ++i) {
      size_t cls = nc % 2 == 0 ? owner[i] % 2 : 0;
      ok &= NearlyEq(seg[i], rep.base_dihedrals_deg[cls], eps);
    }
    a.Add("dihedrals.class_equality", ok, equiangular,
          ok ? "base dihedrals constant on each alternating class"
             : "base dihedral classes differ");
  }

  rep.passed = true;
  for (const auto& c : rep.checks) rep.passed &= (c.passed || !c.enforced);
  return rep;
}

}  // namespace deltadome
