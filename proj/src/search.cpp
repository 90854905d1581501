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

#include "search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "lm.hpp"
#include "verifier.hpp"

namespace deltadome {

namespace {

constexpr double kEmbedEps = 1e-10;
constexpr int kEmbedIterations = 600;

// Rim vertex of a region still to be filled, with the number of triangles
// it must still receive inside that region.
struct CycleEntry {
  int v = 0;
  int rem = 0;
};

using Cycle = std::vector<CycleEntry>;

struct ZipperState {
  std::vector<Cycle> regions;
  std::vector<std::array<int, 3>> triangles;
  std::map<std::pair<int, int>, int> edge_use;
  int next_vertex = 0;
  int nonflat = 0;
  int flat = 0;
  int curvature_left = 0;  // sum of 6 - degree still owed by new vertices
};

// Depth-first walk over the triangulated disks that fill the base boundary
// with the prescribed per-vertex triangle counts. The triangle on the
// canonical edge of the top region is branched over its third vertex: the
// left rim neighbor when that neighbor's last slot forces it, a fresh
// interior vertex of chosen degree, or a far vertex of the same cycle,
// which splits the region in two and distributes that vertex's remaining
// slots over both sides. Any completed disk determines the branch taken at
// every step, so the walk reaches each labeled template exactly once.
class Zipper {
 public:
  Zipper(int perimeter, const std::vector<int>& boundary_rem,
         int curvature_target, const SearchBudget& budget,
         std::chrono::steady_clock::time_point deadline, const TemplateFn& fn)
      : perimeter_(perimeter), budget_(budget), deadline_(deadline), fn_(fn) {
    root_.next_vertex = perimeter;
    root_.curvature_left = curvature_target;
    Cycle cycle;
    for (int i = 0; i < perimeter; ++i)
      cycle.push_back({i, boundary_rem[i]});
    root_.regions.push_back(std::move(cycle));
  }

  void Run() { Rec(root_); }

  bool deadline_hit() const { return deadline_hit_; }

 private:
  static bool AddTriangle(ZipperState& s, int a, int b, int c) {
    const std::array<std::pair<int, int>, 3> edges = {
        std::minmax(a, b), std::minmax(b, c), std::minmax(c, a)};
    for (const auto& e : edges)
      if (s.edge_use[e] >= 2) return false;
    for (const auto& e : edges) ++s.edge_use[e];
    s.triangles.push_back({a, b, c});
    return true;
  }

  void Rec(const ZipperState& s) {
    if (stop_) return;
    if ((++nodes_ & 0xFFF) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      deadline_hit_ = true;
      stop_ = true;
      return;
    }
    if (s.curvature_left < 0 ||
        s.curvature_left > 3 * (budget_.max_dome_vertices - s.nonflat))
      return;
    if (s.regions.empty()) {
      if (s.curvature_left != 0) return;
      DomeTemplate t;
      t.boundary = perimeter_;
      t.interior = s.next_vertex - perimeter_;
      t.triangles = s.triangles;
      if (!fn_(t)) stop_ = true;
      return;
    }
    const Cycle& cycle = s.regions.back();
    const int m = static_cast<int>(cycle.size());
    // a disk over this region places nonnegative curvature inside, which
    // needs at least 3(m - 2) triangle slots on its rim
    int rem_sum = 0;
    for (const CycleEntry& e : cycle) rem_sum += e.rem;
    if (rem_sum < 3 * (m - 2)) return;
    int ai = 0;
    for (int i = 1; i < m; ++i) {
      if (cycle[i].rem < cycle[ai].rem ||
          (cycle[i].rem == cycle[ai].rem && cycle[i].v < cycle[ai].v))
        ai = i;
    }
    const int bi = (ai + 1) % m;
    const int pi = (ai + m - 1) % m;
    const CycleEntry a = cycle[ai], b = cycle[bi], p = cycle[pi];
    if (m == 3) {
      if (a.rem == 1) {
        if (p.rem == 1 && b.rem == 1) {
          ZipperState child = s;
          child.regions.pop_back();
          if (AddTriangle(child, p.v, a.v, b.v)) Rec(child);
        }
        return;  // leftover slots on a closing region are unconsumable
      }
      TryNewVertex(s, ai);
      return;
    }
    if (a.rem == 1) {
      // the lone triangle left at a must take both of its rim edges
      if (p.rem < 2 || b.rem < 2) return;
      ZipperState child = s;
      Cycle& c = child.regions.back();
      c[pi].rem -= 1;
      c[bi].rem -= 1;
      c.erase(c.begin() + ai);
      if (AddTriangle(child, p.v, a.v, b.v)) Rec(child);
      return;
    }
    TryNewVertex(s, ai);
    const int qi = (bi + 1) % m;
    if (m >= 5) {
      for (int wi = 0; wi < m; ++wi) {
        if (wi == ai || wi == bi || wi == pi || wi == qi) continue;
        TrySplit(s, ai, wi);
      }
    }
  }

  void TryNewVertex(const ZipperState& s, int ai) {
    const Cycle& cycle = s.regions.back();
    const int m = static_cast<int>(cycle.size());
    const int bi = (ai + 1) % m;
    if (cycle[ai].rem < 2 || cycle[bi].rem < 2) return;
    const int va = cycle[ai].v, vb = cycle[bi].v;
    for (int k = 3; k <= 6; ++k) {
      if (k == 6) {
        if (s.flat >= budget_.max_flat_vertices) continue;
      } else {
        if (s.nonflat >= budget_.max_dome_vertices ||
            6 - k > s.curvature_left)
          continue;
      }
      ZipperState child = s;
      const int x = child.next_vertex++;
      (k == 6 ? child.flat : child.nonflat) += 1;
      child.curvature_left -= 6 - k;
      Cycle& c = child.regions.back();
      c[ai].rem -= 1;
      c[bi].rem -= 1;
      c.insert(c.begin() + ai + 1, CycleEntry{x, k - 1});
      if (AddTriangle(child, va, vb, x)) Rec(child);
    }
  }

  void TrySplit(const ZipperState& s, int ai, int wi) {
    const Cycle& cycle = s.regions.back();
    const int m = static_cast<int>(cycle.size());
    const int bi = (ai + 1) % m;
    const CycleEntry a = cycle[ai], b = cycle[bi], w = cycle[wi];
    if (a.rem < 2 || b.rem < 2 || w.rem < 3) return;
    // the chord triangle takes one slot at w; the rest go r1 to the left
    // side and the remainder to the right, at least one each
    for (int r1 = 1; r1 <= w.rem - 2; ++r1) {
      ZipperState child = s;
      const Cycle parent = child.regions.back();
      child.regions.pop_back();
      Cycle right;  // w .. a, closed by the chord (a, w)
      for (int i = wi;; i = (i + 1) % m) {
        right.push_back(parent[i]);
        if (i == ai) break;
      }
      right.front().rem = w.rem - 1 - r1;
      right.back().rem -= 1;
      Cycle left;  // b .. w, closed by the chord (w, b)
      for (int i = bi;; i = (i + 1) % m) {
        left.push_back(parent[i]);
        if (i == wi) break;
      }
      left.front().rem -= 1;
      left.back().rem = r1;
      child.regions.push_back(std::move(right));
      child.regions.push_back(std::move(left));
      if (AddTriangle(child, a.v, b.v, w.v)) Rec(child);
    }
  }

  const int perimeter_;
  const SearchBudget& budget_;
  const std::chrono::steady_clock::time_point deadline_;
  const TemplateFn& fn_;
  ZipperState root_;
  long long nodes_ = 0;
  bool stop_ = false;
  bool deadline_hit_ = false;
};

std::chrono::steady_clock::time_point Deadline(double seconds) {
  return std::chrono::steady_clock::now() +
         std::chrono::duration_cast<std::chrono::steady_clock::duration>(
             std::chrono::duration<double>(seconds));
}

}  // namespace

std::vector<Vec3> BoundaryPoints(const PolygonSpec& spec) {
  const EmbeddedPolygon poly = Embed(spec, Tolerances::Default());
  const int n = poly.n();
  std::vector<Vec3> pts;
  for (int c = 0; c < n; ++c) {
    const Vec3 a = poly.vertices[c];
    const Vec3 b = poly.vertices[(c + 1) % n];
    const long long len = spec.edges[c];
    pts.push_back(a);
    for (long long k = 1; k < len; ++k)
      pts.push_back(a + (b - a) * (static_cast<double>(k) /
                                   static_cast<double>(len)));
  }
  return pts;
}

long long EnumerateTemplates(const PolygonSpec& spec,
                             const SearchBudget& budget,
                             const Tolerances& tol, const TemplateFn& fn,
                             bool* budget_exceeded) {
  if (budget_exceeded) *budget_exceeded = false;
  if (spec.n() < 3)
    throw Error(Code::kInvalidArgument, "polygon needs at least three sides");
  for (long long e : spec.edges)
    if (e < 1)
      throw Error(Code::kInvalidArgument, "edge lengths must be positive");
  if (!tol.Valid()) throw Error(Code::kInvalidArgument, "invalid tolerances");
  if (budget.max_dome_vertices < 1 || budget.max_flat_vertices < 0 ||
      budget.max_templates < 1 || budget.restarts < 1 ||
      budget.wall_clock_seconds <= 0)
    throw Error(Code::kInvalidArgument, "invalid search budget");
  if (!ClosesExactly(spec))
    throw Error(Code::kNotClosed, "polygon edge word does not close");

  const int n = spec.n();
  long long perimeter64 = 0;
  for (long long e : spec.edges) perimeter64 += e;
  if (perimeter64 > 512)
    throw Error(Code::kOutOfRange, "perimeter too large to search");
  const int perimeter = static_cast<int>(perimeter64);

  std::vector<int> corner_offset(n);
  int off = 0;
  for (int c = 0; c < n; ++c) {
    corner_offset[c] = off;
    off += static_cast<int>(spec.edges[c]);
  }

  // Corners of 120 degrees or more take exactly three triangles, as do the
  // flat subdivision points. Sharper corners fit two to four, so each such
  // assignment gets its own walk.
  const bool relaxed = InteriorAngleDeg(n) < 120.0 - 1e-9;
  const auto deadline = Deadline(budget.wall_clock_seconds);

  long long total = 0;
  bool stop = false;
  bool hit = false;
  std::vector<int> corner_t(n, relaxed ? 2 : 3);
  for (;;) {
    int target = 6;
    for (int t : corner_t) target -= 3 - t;
    if (target >= 0 && target <= 3 * budget.max_dome_vertices) {
      std::vector<int> rem(perimeter, 3);
      for (int c = 0; c < n; ++c) rem[corner_offset[c]] = corner_t[c];
      const TemplateFn inner = [&](const DomeTemplate& t) {
        ++total;
        if (!fn(t)) {
          stop = true;
          return false;
        }
        if (total >= budget.max_templates) {
          hit = true;
          return false;
        }
        return true;
      };
      Zipper zip(perimeter, rem, target, budget, deadline, inner);
      zip.Run();
      if (zip.deadline_hit()) hit = true;
      if (stop || hit) break;
    }
    if (!relaxed) break;
    int c = n - 1;
    while (c >= 0 && corner_t[c] == 4) corner_t[c--] = 2;
    if (c < 0) break;
    ++corner_t[c];
  }
  if (budget_exceeded) *budget_exceeded = hit;
  return total;
}

std::optional<Mesh> EmbedTemplate(const DomeTemplate& tmpl,
                                  const PolygonSpec& spec,
                                  const SearchBudget& budget,
                                  const Tolerances& tol,
                                  long long template_index,
                                  long long* attempts) {
  const std::vector<Vec3> boundary = BoundaryPoints(spec);
  const int perimeter = static_cast<int>(boundary.size());
  if (tmpl.boundary != perimeter || tmpl.interior < 0)
    throw Error(Code::kInvalidArgument,
                "template does not fit the polygon boundary");
  const int total = perimeter + tmpl.interior;
  std::set<std::pair<int, int>> edges;
  for (const auto& t : tmpl.triangles) {
    for (int i = 0; i < 3; ++i) {
      const int u = t[i], v = t[(i + 1) % 3];
      if (u < 0 || u >= total || v < 0 || v >= total || u == v)
        throw Error(Code::kInvalidArgument, "template triangle out of range");
      edges.insert(std::minmax(u, v));
    }
  }
  std::vector<LengthConstraint> constraints;
  for (const auto& [u, v] : edges) {
    if (u < perimeter && v < perimeter) {
      // both ends pinned to the base: the chord is unit or nothing can move
      if (std::fabs((boundary[u] - boundary[v]).Norm() - 1.0) > tol.verify)
        return std::nullopt;
    } else {
      constraints.push_back({u, v, 1.0});
    }
  }
  std::vector<char> fixed(total, 0);
  for (int i = 0; i < perimeter; ++i) fixed[i] = 1;

  Vec3 centroid{};
  for (const Vec3& p : boundary) centroid += p;
  centroid = centroid / perimeter;
  double radius = 0;
  for (const Vec3& p : boundary)
    radius = std::max(radius, (p - centroid).Norm());

  // Convex combination layout of the disk: with the rim pinned to the
  // convex base, averaging interior vertices over their neighbors gives a
  // crossing-free plan of the template. Lifted onto a spherical cap it
  // seeds the solver inside the convex basin; plain random seeds nearly
  // always relax into ruffled non-convex minima.
  std::vector<std::vector<int>> nbr(total);
  for (const auto& [u, v] : edges) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  std::vector<Vec3> plan(total);
  for (int i = 0; i < perimeter; ++i) plan[i] = boundary[i];
  for (int i = perimeter; i < total; ++i) plan[i] = centroid;
  for (int pass = 0; pass < 400; ++pass) {
    for (int i = perimeter; i < total; ++i) {
      if (nbr[i].empty()) continue;
      Vec3 acc{};
      for (int j : nbr[i]) acc += plan[j];
      plan[i] = acc / static_cast<double>(nbr[i].size());
    }
  }

  std::vector<int> base_loop(perimeter);
  for (int i = 0; i < perimeter; ++i) base_loop[i] = perimeter - 1 - i;

  std::vector<int> degree(total, 0);
  for (const auto& t : tmpl.triangles)
    for (int v : t) degree[v] += 1;

  // A degree 6 interior vertex carries no curvature, so every convex
  // realization keeps it coplanar with its neighbors. The length residuals
  // leave it a soft popping mode of order sqrt(eps); snapping onto the
  // neighbor plane and re-polishing removes the pop so coplanar faces
  // merge cleanly.
  const auto flatten = [&](std::vector<Vec3> pos) -> std::vector<Vec3> {
    for (int round = 0; round < 4; ++round) {
      double moved = 0;
      for (int i = perimeter; i < total; ++i) {
        if (degree[i] != 6) continue;
        Vec3 c{};
        for (int j : nbr[i]) c += pos[j];
        c = c / static_cast<double>(nbr[i].size());
        Vec3 n{}, ref{};
        const int k = static_cast<int>(nbr[i].size());
        for (int a = 0; a < k; ++a) {
          for (int b = a + 1; b < k; ++b) {
            const Vec3 cr =
                (pos[nbr[i][a]] - c).Cross(pos[nbr[i][b]] - c);
            if (ref.Norm2() < 1e-18) ref = cr;
            n += cr.Dot(ref) >= 0 ? cr : -cr;
          }
        }
        if (n.Norm2() < 1e-18) continue;
        n = n.Normalized();
        const double d = (pos[i] - c).Dot(n);
        pos[i] += n * -d;
        moved = std::max(moved, std::fabs(d));
      }
      if (moved < 1e-13) break;
      const SolveReport polish =
          SolveLengths(pos, fixed, constraints, kEmbedEps, kEmbedIterations);
      if (!polish.converged) break;
      pos = polish.positions;
    }
    return pos;
  };

  for (int restart = 0; restart < std::max(1, budget.restarts); ++restart) {
    if (attempts) ++*attempts;
    std::uint64_t h = 0x9E3779B97F4A7C15ull * (budget.seed + 1ull);
    h ^= 0xBF58476D1CE4E5B9ull * static_cast<std::uint64_t>(template_index + 1);
    h ^= 0x94D049BB133111EBull * static_cast<std::uint64_t>(restart + 1);
    std::mt19937_64 rng(h);
    const auto uniform = [&rng] { return (rng() >> 11) * 0x1.0p-53; };
    std::vector<Vec3> seed = boundary;
    seed.resize(total);
    const double cap_h = 0.15 + 1.3 * uniform();
    const double rho = (radius * radius + cap_h * cap_h) / (2 * cap_h);
    const double jitter =
        0.3 * uniform() * restart / std::max(1, budget.restarts - 1);
    for (int i = perimeter; i < total; ++i) {
      Vec3 p = plan[i];
      p.x += jitter * (uniform() - 0.5);
      p.y += jitter * (uniform() - 0.5);
      const double r2 = (p - centroid).Norm2();
      double z = 0.05;
      if (r2 < rho * rho)
        z = std::max(0.05, std::sqrt(rho * rho - r2) - (rho - cap_h));
      p.z = z * (0.8 + 0.4 * uniform());
      seed[i] = p;
    }
    const SolveReport rep =
        SolveLengths(seed, fixed, constraints, kEmbedEps, kEmbedIterations);
    if (!rep.converged) continue;
    const std::vector<Vec3> polished = flatten(rep.positions);
    double zsum = 0;
    for (int i = perimeter; i < total; ++i) zsum += polished[i].z;
    const bool flip = zsum < 0;
    Mesh mesh;
    mesh.vertices = polished;
    if (flip)
      for (int i = perimeter; i < total; ++i)
        mesh.vertices[i].z = -mesh.vertices[i].z;
    for (const auto& t : tmpl.triangles)
      mesh.faces.push_back(flip ? std::vector<int>{t[0], t[2], t[1]}
                                : std::vector<int>{t[0], t[1], t[2]});
    mesh.faces.push_back(base_loop);
    mesh.base_face = static_cast<int>(mesh.faces.size()) - 1;
    try {
      const Mesh merged = MergeCoplanarFaces(mesh, tol);
      const AuditReport audit = VerifyFull(merged, &spec, tol);
      if (audit.passed) return merged;
    } catch (const Error&) {
      // fold-overs and degenerate embeddings fail verification, not search
    }
  }
  return std::nullopt;
}

SearchOutcome SearchDome(const PolygonSpec& spec, const SearchBudget& budget,
                         const Tolerances& tol) {
  SearchOutcome out;
  const auto deadline = Deadline(budget.wall_clock_seconds);
  bool clock_out = false;
  const TemplateFn fn = [&](const DomeTemplate& t) {
    if (std::chrono::steady_clock::now() > deadline) {
      clock_out = true;
      return false;
    }
    std::optional<Mesh> found =
        EmbedTemplate(t, spec, budget, tol, out.templates_tried,
                      &out.embeddings_attempted);
    ++out.templates_tried;
    if (found) {
      out.found = std::move(*found);
      return false;
    }
    return true;
  };
  bool hit = false;
  EnumerateTemplates(spec, budget, tol, fn, &hit);
  out.budget_exceeded = (hit || clock_out) && !out.found;
  out.certified = false;
  if (out.found)
    out.detail = "dome found after " + std::to_string(out.templates_tried) +
                 " templates";
  else if (out.budget_exceeded)
    out.detail = "budget exhausted before the template walk finished";
  else
    out.detail = "template walk exhausted without a verified embedding";
  return out;
}

}  // namespace deltadome
