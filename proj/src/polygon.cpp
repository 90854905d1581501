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

#include "polygon.hpp"

#include <array>
#include <sstream>

namespace deltadome {

namespace {

using Wide = __int128;
using Poly = std::vector<Wide>;  // coefficient of x^i at index i

// Divides a by monic b in place, leaving the remainder in a.
void RemMonic(Poly& a, const Poly& b) {
  int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    Wide lead = a[i];
    if (lead == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= lead * b[j];
  }
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

// Exact division a / b of polynomials over Z, b monic, remainder known zero.
Poly DivMonic(Poly a, const Poly& b) {
  int db = static_cast<int>(b.size()) - 1;
  int dq = static_cast<int>(a.size()) - 1 - db;
  Poly q(dq + 1, 0);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    Wide lead = a[i];
    if (lead == 0) continue;
    q[i - db] = lead;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= lead * b[j];
  }
  return q;
}

// n-th cyclotomic polynomial via Phi_n = (x^n - 1) / prod of Phi_d over
// proper divisors d.
Poly Cyclotomic(int n) {
  Poly acc(n + 1, 0);
  acc[0] = -1;
  acc[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    acc = DivMonic(std::move(acc), Cyclotomic(d));
  }
  return acc;
}

// Directions on the triangular lattice as Eisenstein integer pairs (a, b)
// for a + b*w, w = exp(i*pi/3). Multiples of 60 degrees.
constexpr std::array<std::array<int, 2>, 6> kSixth = {
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

}  // namespace

double InteriorAngleDeg(int n) {
  return 180.0 * (n - 2) / n;
}

bool ClosesExactly(const PolygonSpec& spec) {
  int n = spec.n();
  if (n < 3 || n > 64)
    throw Error(Code::kInvalidArgument, "polygon must have 3 to 64 sides");
  for (long long e : spec.edges)
    if (e < 1) throw Error(Code::kInvalidArgument, "edge lengths must be >= 1");
  Poly p(spec.edges.begin(), spec.edges.end());
  RemMonic(p, Cyclotomic(n));
  for (Wide c : p)
    if (c != 0) return false;
  return true;
}

ConditionReport CheckConditions(const PolygonSpec& spec) {
  ConditionReport r;
  r.n = spec.n();
  r.closes = ClosesExactly(spec);
  static const std::array<int, 7> kAdmissible = {3, 4, 5, 6, 8, 10, 12};
  for (int m : kAdmissible) r.n_admissible |= (m == r.n);

  std::ostringstream why;
  if (!r.closes) why << "edge word does not close; ";
  if (!r.n_admissible) why << "no dome exists for n=" << r.n << "; ";

  if (r.n >= 8 && r.n_admissible) {
    for (int parity = 0; parity < 2 && !r.odd_class_equal; ++parity) {
      bool eq = true;
      for (int k = parity + 2; k < r.n; k += 2)
        eq &= (spec.edges[k] == spec.edges[parity]);
      if (eq) {
        r.odd_class_equal = true;
        r.parity = parity;
      }
    }
    if (!r.odd_class_equal)
      why << "no alternating edge class is constant; ";
  } else {
    // For n <= 6 closure already forces an equiangular polygon that the
    // constructions handle; there is no separate class condition.
    r.odd_class_equal = true;
  }

  r.domeable = r.closes && r.n_admissible && r.odd_class_equal;
  r.detail = r.domeable ? "domeable" : why.str();
  return r;
}

EmbeddedPolygon Embed(const PolygonSpec& spec, const Tolerances& tol) {
  if (!tol.Valid()) throw Error(Code::kInvalidArgument, "bad tolerances");
  if (!ClosesExactly(spec))
    throw Error(Code::kNotClosed, "edge word does not close");
  int n = spec.n();
  EmbeddedPolygon out;
  out.vertices.reserve(n);
  Vec3 p{0, 0, 0};
  double perim = 0;
  for (int k = 0; k < n; ++k) {
    out.vertices.push_back(p);
    double th = 2 * kPi * k / n;
    p += Vec3{std::cos(th), std::sin(th), 0} * double(spec.edges[k]);
    perim += double(spec.edges[k]);
  }
  if (p.Norm() > tol.construct * std::max(1.0, perim))
    throw Error(Code::kInternal, "closure drift exceeds tolerance");
  return out;
}

bool IsPolyiamondPolygon(const std::vector<long long>& edges,
                         const std::vector<double>& angles_deg,
                         const Tolerances& tol) {
  size_t n = edges.size();
  if (n < 3 || n > 6 || angles_deg.size() != n) return false;
  long long a = 0, b = 0;  // running Eisenstein sum
  int dir = 0;
  long long turn_total = 0;
  for (size_t k = 0; k < n; ++k) {
    if (edges[k] < 1) return false;
    a += edges[k] * kSixth[dir][0];
    b += edges[k] * kSixth[dir][1];
    // Exterior turn is 180 - interior; only 60 and 120 interiors are lattice
    // angles for a convex corner.
    int turn;
    if (NearlyEq(angles_deg[k == n - 1 ? 0 : k + 1], 60, tol.angle_deg))
      turn = 2;
    else if (NearlyEq(angles_deg[k == n - 1 ? 0 : k + 1], 120, tol.angle_deg))
      turn = 1;
    else
      return false;
    turn_total += turn;
    dir = (dir + turn) % 6;
  }
  return a == 0 && b == 0 && turn_total == 6;
}

}  // namespace deltadome
