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

#include <vector>

#include "geom.hpp"

namespace deltadome {

// Three unit triangles t1, t2, t3 fanning from a base vertex whose base
// angle is beta, each with its 60 degree corner at the vertex. t1 and t3
// rest on the two base edges. The vertex sits at the origin, the first
// base edge runs along u, the second along w, and the base plane is z = 0.
struct VertexStar {
  double beta_deg = 0;
  Vec3 u, w;        // unit base edge directions from the vertex
  Vec3 r1, r2;      // unit fan rays bounding t2
  Vec3 n0, n1, n2, n3;  // outward normals; n0 = (0, 0, -1)

  // Interior dihedrals at the four hinges of the star, all in (0, 180).
  double delta1_deg = 0;   // base edge under t1 (the family parameter)
  double delta12_deg = 0;  // hinge r1 between t1 and t2
  double delta23_deg = 0;  // hinge r2 between t2 and t3
  double delta3_deg = 0;   // base edge under t3
};

// Spherical image of the star: the quadrilateral n0 n1 n2 n3 with its
// diagonal x from the south pole n0 to n2. Angles follow the convention
// that a_deg sits at n2 toward n3 and c_deg at n0 toward n3; when the raw
// configuration has a_deg < b_deg the two sides are relabeled (swapped set)
// so that a_deg >= b_deg always holds, and n1/y then refer to the b side.
struct GaussMapReport {
  double arc_x_deg = 0;  // n0 to n2, exceeds 90 exactly when n2 points up
  double arc_y_deg = 0;  // n0 to n1, below 90 exactly when n1 points down
  double a_deg = 0, b_deg = 0;  // split of the 120 degree angle at n2
  double c_deg = 0, d_deg = 0;  // split of the 180 - beta angle at n0
  bool swapped = false;
  bool n2_up = false;
  bool n1_down = false, n3_down = false;
  bool n1_or_n3_down = false;
  // Largest disagreement in degrees between quantities measured from the
  // 3D normals and the same quantities rebuilt from dihedrals alone via
  // the spherical cosine laws.
  double max_cross_error_deg = 0;
};

// Arc length |x| in degrees of the spherical triangle side opposite a 120
// degree angle whose adjacent angles are a_deg and c_deg:
// cos|x| = (-1/2 + cosA cosC) / (sinA sinC).
// Throws kOutOfRange when the quotient leaves [-1, 1] by more than eps.
double SolveArcDeg(double a_deg, double c_deg, double eps = 1e-9);

// Builds the member of the one parameter star family with the given base
// angle (in [120, 180)) and first base dihedral (in (0, 180)). gamma_sign
// in {+1, -1} picks the branch of the cone intersection placing r2.
// Throws kOutOfRange when the fan cannot close, a ray leaves the upper
// half space, or the vertex cone is not strictly convex.
VertexStar MakeVertexStar(double beta_deg, double delta1_deg, int gamma_sign,
                          const Tolerances& tol);

// Full spherical analysis with cross validation of the two routes.
// Throws kInternal if the star defeats the up/down classification, which
// a realizable star never does.
GaussMapReport AnalyzeVertexStar(const VertexStar& star,
                                 const Tolerances& tol);

// Deterministic rejection sampling of realizable stars across
// beta in [120, 180) and the full dihedral range, both branches. Margins
// keep the spherical quantities away from degenerate poles.
std::vector<VertexStar> SampleVertexStars(int count, unsigned seed,
                                          const Tolerances& tol);

struct GaussSweep {
  int samples = 0;
  int failures = 0;  // stars breaking any of the classification facts
  int swapped = 0;   // stars analyzed under the swapped labeling
  double max_cross_error_deg = 0;
};

// Samples count stars and checks each against the classification: n2 up,
// the labeled side down, arc to n2 past a quarter turn, arc to n1 short of
// one, the angle splits summing back, and the spherical reconstruction
// agreeing with the 3D normals.
GaussSweep RunGaussSweep(int count, unsigned seed, const Tolerances& tol);

}  // namespace deltadome
