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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geom.hpp"

namespace deltadome {

// Equiangular polygon with integer side lengths, listed in traversal order.
// Side k runs in direction 2*pi*k/n from the end of side k-1.
struct PolygonSpec {
  std::vector<long long> edges;
  int n() const { return static_cast<int>(edges.size()); }
};

// Planar embedding: vertices in counterclockwise order, first vertex at the
// origin, first edge along +x, z identically zero.
struct EmbeddedPolygon {
  std::vector<Vec3> vertices;
  int n() const { return static_cast<int>(vertices.size()); }
};

// Interior angle of an equiangular n-gon, degrees.
double InteriorAngleDeg(int n);

// Exact test that the edge word returns to its start: sum of e_k x^k must
// vanish modulo the n-th cyclotomic polynomial. Integer arithmetic, no
// floating point. n up to 64.
bool ClosesExactly(const PolygonSpec& spec);

// Kinds of edge classes for even n: edges at odd positions vs even
// positions. parity selects which class counts as "odd" (0: sides 0,2,...;
// 1: sides 1,3,...).
struct ConditionReport {
  int n = 0;
  bool closes = false;
  bool n_admissible = false;      // n in {3,4,5,6,8,10,12}
  bool odd_class_equal = false;   // n >= 8: the alternating class is constant
  int parity = 0;                 // class offset that made odd_class_equal true
  bool domeable = false;
  std::string detail;
};

// Decision procedure for whether a deltahedral dome exists over the polygon.
// For n in {3,4,5,6} closure suffices; for n in {8,10,12} one alternating
// edge class must additionally be constant (both offsets are tried).
ConditionReport CheckConditions(const PolygonSpec& spec);

// Embed in the plane. Throws kNotClosed when the edge word does not close
// and kInvalidArgument on malformed input.
EmbeddedPolygon Embed(const PolygonSpec& spec, const Tolerances& tol);

// True when integer edges with the given interior angles (each 60 or 120
// within tol.angle_deg) close up on the triangular lattice. Convex by
// construction of the allowed angles.
bool IsPolyiamondPolygon(const std::vector<long long>& edges,
                         const std::vector<double>& angles_deg,
                         const Tolerances& tol);

}  // namespace deltadome
