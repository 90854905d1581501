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

#include "gaussmap.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace deltadome {

namespace {

double ArcDeg(const Vec3& p, const Vec3& q) {
  return RadToDeg(std::acos(std::clamp(p.Dot(q), -1.0, 1.0)));
}

// Spherical angle at p between the great circle arcs toward q and r.
double SphericalAngleDeg(const Vec3& p, const Vec3& q, const Vec3& r) {
  Vec3 tq = q - p * p.Dot(q);
  Vec3 tr = r - p * p.Dot(r);
  return RadToDeg(std::atan2(tq.Cross(tr).Norm(), tq.Dot(tr)));
}

// Side cosine law: triangle with sides p, q enclosing the angle gamma has
// opposite side of this length.
double OppositeSideDeg(double p_deg, double q_deg, double gamma_deg) {
  double p = DegToRad(p_deg), q = DegToRad(q_deg), g = DegToRad(gamma_deg);
  double c = std::cos(p) * std::cos(q) + std::sin(p) * std::sin(q) * std::cos(g);
  return RadToDeg(std::acos(std::clamp(c, -1.0, 1.0)));
}

// Angle opposite side p in a triangle with sides p, q, r.
double OppositeAngleDeg(double p_deg, double q_deg, double r_deg) {
  double p = DegToRad(p_deg), q = DegToRad(q_deg), r = DegToRad(r_deg);
  double c = (std::cos(p) - std::cos(q) * std::cos(r)) /
             (std::sin(q) * std::sin(r));
  return RadToDeg(std::acos(std::clamp(c, -1.0, 1.0)));
}

}  // namespace

double SolveArcDeg(double a_deg, double c_deg, double eps) {
  if (!(a_deg > 0 && a_deg < 180 && c_deg > 0 && c_deg < 180))
    throw Error(Code::kOutOfRange, "angles must lie in (0, 180)");
  double a = DegToRad(a_deg), c = DegToRad(c_deg);
  double rhs = (-0.5 + std::cos(a) * std::cos(c)) /
               (std::sin(a) * std::sin(c));
  if (rhs < -1 - eps || rhs > 1 + eps)
    throw Error(Code::kOutOfRange,
                "no spherical triangle has these two angles with 120");
  return RadToDeg(std::acos(std::clamp(rhs, -1.0, 1.0)));
}

VertexStar MakeVertexStar(double beta_deg, double delta1_deg, int gamma_sign,
                          const Tolerances& tol) {
  if (!tol.Valid()) throw Error(Code::kInvalidArgument, "bad tolerances");
  if (!(beta_deg >= 120 && beta_deg < 180))
    throw Error(Code::kInvalidArgument, "base angle must lie in [120, 180)");
  if (!(delta1_deg > 0 && delta1_deg < 180))
    throw Error(Code::kInvalidArgument, "dihedral must lie in (0, 180)");
  if (gamma_sign != 1 && gamma_sign != -1)
    throw Error(Code::kInvalidArgument, "gamma_sign must be +1 or -1");

  VertexStar s;
  s.beta_deg = beta_deg;
  s.delta1_deg = delta1_deg;
  double beta = DegToRad(beta_deg), d1 = DegToRad(delta1_deg);
  s.u = {1, 0, 0};
  s.w = {std::cos(beta), std::sin(beta), 0};
  // Tilt t1 about the first base edge; (0,1,0) is the inward base
  // direction at that hinge.
  double q = std::sqrt(3.0) / 2;
  s.r1 = s.u * 0.5 + Vec3{0, std::cos(d1), std::sin(d1)} * q;

  // r2 is 60 degrees from both r1 and w: the two cones meet where
  // r2 . r1 = r2 . w = 1/2.
  double c = s.r1.Dot(s.w);
  if (2 * (1 + c) <= 1)
    throw Error(Code::kOutOfRange, "fan cannot reach the second base edge");
  Vec3 axis = s.r1.Cross(s.w);
  if (axis.Norm() <= tol.construct)
    throw Error(Code::kOutOfRange, "fan collapses onto the second base edge");
  double alpha = 1 / (2 * (1 + c));
  double gamma = gamma_sign * std::sqrt(1 - alpha);
  s.r2 = (s.r1 + s.w) * alpha + axis.Normalized() * gamma;
  if (s.r2.z <= 0)
    throw Error(Code::kOutOfRange, "third ray leaves the upper half space");

  s.n0 = {0, 0, -1};
  s.n1 = s.u.Cross(s.r1).Normalized();
  s.n2 = s.r1.Cross(s.r2).Normalized();
  s.n3 = s.r2.Cross(s.w).Normalized();

  s.delta12_deg = OrientedDihedralDeg(s.n1, s.n2, -s.r1);
  s.delta23_deg = OrientedDihedralDeg(s.n2, s.n3, -s.r2);
  s.delta3_deg = OrientedDihedralDeg(s.n3, s.n0, -s.w);
  for (double d : {s.delta12_deg, s.delta23_deg, s.delta3_deg})
    if (!(d > 0 && d < 180))
      throw Error(Code::kOutOfRange, "vertex cone is not strictly convex");
  return s;
}

GaussMapReport AnalyzeVertexStar(const VertexStar& star,
                                 const Tolerances& tol) {
  if (!tol.Valid()) throw Error(Code::kInvalidArgument, "bad tolerances");
  GaussMapReport r;

  double x = ArcDeg(star.n0, star.n2);
  double a = SphericalAngleDeg(star.n2, star.n3, star.n0);
  double b = SphericalAngleDeg(star.n2, star.n1, star.n0);
  double cc = SphericalAngleDeg(star.n0, star.n3, star.n2);
  double dd = SphericalAngleDeg(star.n0, star.n1, star.n2);

  // Labeled sides: index 0 carries B and D, index 1 carries A and C. The
  // raw n1 side is 0; swap when the angle at n2 is larger there.
  Vec3 nb = star.n1, na = star.n3;
  double base_b = star.delta1_deg, base_a = star.delta3_deg;
  double fan_b = star.delta12_deg, fan_a = star.delta23_deg;
  r.swapped = a < b;
  if (r.swapped) {
    std::swap(a, b);
    std::swap(cc, dd);
    std::swap(na, nb);
    std::swap(base_a, base_b);
    std::swap(fan_a, fan_b);
  }
  r.arc_x_deg = x;
  r.arc_y_deg = ArcDeg(star.n0, nb);
  r.a_deg = a, r.b_deg = b, r.c_deg = cc, r.d_deg = dd;

  // Second route: rebuild the quadrilateral from dihedrals alone. Each
  // hinge maps to an arc of 180 minus its dihedral, and the fan corners
  // map to 120 degree spherical angles.
  double yb = 180 - base_b, sb = 180 - fan_b;
  double ya = 180 - base_a, sa = 180 - fan_a;
  double xb = OppositeSideDeg(yb, sb, 120);
  double xa = OppositeSideDeg(ya, sa, 120);
  double bi = OppositeAngleDeg(yb, sb, xb);
  double di = OppositeAngleDeg(sb, yb, xb);
  double ai = OppositeAngleDeg(ya, sa, xa);
  double ci = OppositeAngleDeg(sa, ya, xa);

  double err = 0;
  for (double e : {xb - x, xa - x, ai - a, bi - b, ci - cc, di - dd,
                   (a + b) - 120, (cc + dd) - (180 - star.beta_deg),
                   SolveArcDeg(a, cc) - x, ArcDeg(star.n0, na) - ya,
                   r.arc_y_deg - yb, ArcDeg(star.n1, star.n2) -
                       (180 - star.delta12_deg),
                   ArcDeg(star.n2, star.n3) - (180 - star.delta23_deg)})
    err = std::max(err, std::fabs(e));
  r.max_cross_error_deg = err;

  r.n2_up = star.n2.z > 0;
  r.n1_down = nb.z < 0;
  r.n3_down = na.z < 0;
  r.n1_or_n3_down = r.n1_down || r.n3_down;
  if (!r.n2_up)
    throw Error(Code::kInternal, "middle normal failed to point up");
  if (!r.n1_or_n3_down)
    throw Error(Code::kInternal, "no side normal points down");
  return r;
}

std::vector<VertexStar> SampleVertexStars(int count, unsigned seed,
                                          const Tolerances& tol) {
  if (count < 0) throw Error(Code::kInvalidArgument, "count must be >= 0");
  std::mt19937 rng(seed);
  // Margins keep arcs and angles clear of the degenerate configurations
  // where the spherical triangles lose a vertex.
  const double kMargin = 0.5;
  std::uniform_real_distribution<double> beta(120.0, 180.0 - kMargin);
  std::uniform_real_distribution<double> d1(kMargin, 180.0 - kMargin);
  std::uniform_int_distribution<int> branch(0, 1);

  std::vector<VertexStar> out;
  out.reserve(count);
  long long attempts = 0, cap = 20000LL * (count + 1);
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > cap)
      throw Error(Code::kInternal, "star sampling failed to converge");
    try {
      VertexStar s =
          MakeVertexStar(beta(rng), d1(rng), branch(rng) ? 1 : -1, tol);
      bool clear = s.n2.z < 1 - 1e-6;
      for (double d : {s.delta1_deg, s.delta12_deg, s.delta23_deg,
                       s.delta3_deg})
        clear &= (d > kMargin && d < 180 - kMargin);
      if (clear) out.push_back(s);
    } catch (const Error& e) {
      if (e.code() != Code::kOutOfRange) throw;
    }
  }
  return out;
}

GaussSweep RunGaussSweep(int count, unsigned seed, const Tolerances& tol) {
  if (count < 1)
    throw Error(Code::kInvalidArgument, "sample count must be positive");
  GaussSweep sweep;
  for (const VertexStar& s : SampleVertexStars(count, seed, tol)) {
    const GaussMapReport r = AnalyzeVertexStar(s, tol);
    sweep.samples += 1;
    sweep.swapped += r.swapped ? 1 : 0;
    sweep.max_cross_error_deg =
        std::max(sweep.max_cross_error_deg, r.max_cross_error_deg);
    bool ok = r.n2_up && r.n1_down && r.n1_or_n3_down && r.arc_x_deg > 90 &&
              r.arc_y_deg < 90 && r.a_deg >= r.b_deg &&
              std::fabs(r.a_deg + r.b_deg - 120) <= tol.angle_deg &&
              std::fabs(r.c_deg + r.d_deg - (180 - s.beta_deg)) <=
                  tol.angle_deg &&
              r.max_cross_error_deg <= tol.angle_deg;
    // the sign rule alone must already decide which way n2 points
    try {
      ok = ok && (SolveArcDeg(r.a_deg, r.c_deg) > 90) == (s.n2.z > 0);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) sweep.failures += 1;
  }
  return sweep;
}

}  // namespace deltadome
