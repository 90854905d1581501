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

#include "mesh.hpp"
#include "polygon.hpp"

namespace deltadome {

enum class PlanKind { kPyramid, kRoof, kTruncatedTetra, kAntiprism, kLayered };

const char* PlanKindName(PlanKind k);

// Which construction covers a given polygon, with its parameters.
struct DomePlan {
  PlanKind kind = PlanKind::kPyramid;
  PolygonSpec spec;
  int parity = 0;  // layered: offset of the constant alternating edge class
  std::string summary;
};

struct DecideOutcome {
  std::optional<DomePlan> plan;
  ConditionReport report;
};

// Chooses a construction for the polygon, or explains why none exists.
DecideOutcome Decide(const PolygonSpec& spec, const Tolerances& tol);

// Runs Decide and executes the plan. Throws kNotDomeable when no dome
// exists over the polygon.
Mesh BuildDome(const PolygonSpec& spec, const Tolerances& tol);

// Regular n-gon of the given side with a single apex. n in {3, 4, 5}; a
// hexagon pyramid would be flat and throws kApexDegenerate.
Mesh PyramidDome(int n, long long side, const Tolerances& tol);

// Rectangle a x b covered by two trapezoids over the long sides and two
// triangles over the short sides, ridge parallel to the longer side. Equal
// sides degenerate to the square pyramid.
Mesh RoofDome(long long a, long long b, const Tolerances& tol);

// Dome over a convex lattice polygon (3 to 6 sides, angles 60 or 120): a
// triangular pyramid with up to three corner tetrahedra sliced off.
Mesh TruncatedTetraDome(const std::vector<long long>& edges,
                        const std::vector<double>& angles_deg,
                        const Tolerances& tol);

// Regular hexagon covered by a twisted band of 12 triangles and a rotated
// hexagonal lid.
Mesh AntiprismDome(long long side, const Tolerances& tol);

// n in {8, 10, 12}: a band of triangles over the constant edge class and
// trapezoids over the other class, topped by a roof (n=8), a pyramid
// (n=10), or a flat hexagon (n=12). parity picks the constant class.
Mesh LayeredDome(const PolygonSpec& spec, int parity, const Tolerances& tol);

// Unit-height story under an equiangular lattice hexagon lid: one band
// face per lid edge plus one upward triangle per lid corner. The base
// polygon is determined by the lid.
Mesh OneStoryDome(const PolygonSpec& lid, const Tolerances& tol);

}  // namespace deltadome
