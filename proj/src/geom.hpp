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

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltadome {

inline constexpr double kPi = 3.14159265358979323846;

inline double DegToRad(double d) { return d * (kPi / 180.0); }
inline double RadToDeg(double r) { return r * (180.0 / kPi); }

// Error codes shared with the C API; Error carries one across internal
// boundaries until it is either printed or translated.
enum class Code {
  kOk = 0,
  kInvalidArgument,
  kNotClosed,
  kNotDomeable,
  kApexDegenerate,
  kNotPolyiamond,
  kBandMismatch,
  kDegenerateMesh,
  kParse,
  kOutOfRange,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(Code code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  double Dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 Cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double Norm2() const { return Dot(*this); }
  double Norm() const { return std::sqrt(Norm2()); }
  Vec3 Normalized() const;
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// construct bounds residuals of exact constructions, verify bounds metric
// checks on finished meshes, angle_deg bounds comparisons in degrees.
// Valid only when 0 < construct <= verify.
struct Tolerances {
  double construct = 1e-9;
  double verify = 1e-6;
  double angle_deg = 1e-6;

  bool Valid() const {
    return construct > 0 && verify > 0 && angle_deg > 0 && construct <= verify;
  }
  static Tolerances Default() { return Tolerances{}; }
};

// Angle at apex v between rays toward a and b, in [0, 180] degrees.
double AngleDegAt(const Vec3& v, const Vec3& a, const Vec3& b);

// Dihedral along the hinge (p, q) between the half plane through a and the
// half plane through b, in (0, 180] degrees. 180 means a and b lie in one
// plane on opposite sides of the hinge.
double DihedralDeg(const Vec3& p, const Vec3& q, const Vec3& a, const Vec3& b);

// Interior dihedral between two consistently oriented faces meeting along a
// shared edge. na, nb are the outward unit normals; edge_in_a is the unit
// direction of the shared edge as face a traverses it. Returns degrees in
// (0, 360): < 180 convex, 180 flat, > 180 reflex.
double OrientedDihedralDeg(const Vec3& na, const Vec3& nb,
                           const Vec3& edge_in_a);

// Unit normal of a planar polygon by Newell's method, right hand rule.
// Reversing the vertex order negates the result exactly.
Vec3 PolygonNormal(const std::vector<Vec3>& pts);

// Area of a planar polygon in 3-space.
double PolygonArea(const std::vector<Vec3>& pts);

inline bool NearlyEq(double a, double b, double eps) {
  return std::fabs(a - b) <= eps;
}

// True when x is within eps of an integer; the integer lands in *out.
bool NearestInt(double x, double eps, long long* out);

}  // namespace deltadome
