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

#include "lm.hpp"

#include <Eigen/Dense>

namespace deltadome {

SolveReport SolveLengths(const std::vector<Vec3>& seed,
                         const std::vector<char>& fixed,
                         const std::vector<LengthConstraint>& constraints,
                         double eps, int max_iterations) {
  int n = static_cast<int>(seed.size());
  if (fixed.size() != seed.size())
    throw Error(Code::kInvalidArgument, "fixed mask size mismatch");
  if (!(eps > 0) || max_iterations < 1)
    throw Error(Code::kInvalidArgument, "bad solver parameters");
  for (const LengthConstraint& c : constraints)
    if (c.a < 0 || c.a >= n || c.b < 0 || c.b >= n || c.a == c.b ||
        !(c.length > 0))
      throw Error(Code::kInvalidArgument, "bad length constraint");

  std::vector<int> slot(n, -1);
  int nf = 0;
  for (int v = 0; v < n; ++v)
    if (!fixed[v]) slot[v] = nf++;

  SolveReport rep;
  rep.positions = seed;
  int m = static_cast<int>(constraints.size());

  auto residuals = [&](const std::vector<Vec3>& pos, Eigen::VectorXd& r,
                       Eigen::MatrixXd* jac) {
    for (int i = 0; i < m; ++i) {
      const LengthConstraint& c = constraints[i];
      Vec3 d = pos[c.a] - pos[c.b];
      double len = d.Norm();
      // A coincident pair still has to separate; push along a fixed axis.
      Vec3 dir = len > 1e-12 ? d / len : Vec3{1, 0, 0};
      r(i) = len - c.length;
      if (!jac) continue;
      if (slot[c.a] >= 0) {
        (*jac)(i, 3 * slot[c.a] + 0) = dir.x;
        (*jac)(i, 3 * slot[c.a] + 1) = dir.y;
        (*jac)(i, 3 * slot[c.a] + 2) = dir.z;
      }
      if (slot[c.b] >= 0) {
        (*jac)(i, 3 * slot[c.b] + 0) = -dir.x;
        (*jac)(i, 3 * slot[c.b] + 1) = -dir.y;
        (*jac)(i, 3 * slot[c.b] + 2) = -dir.z;
      }
    }
  };

  Eigen::VectorXd r(m);
  residuals(rep.positions, r, nullptr);
  rep.max_residual = m ? r.cwiseAbs().maxCoeff() : 0;
  if (m == 0 || nf == 0 || rep.max_residual <= eps) {
    rep.converged = rep.max_residual <= eps;
    return rep;
  }

  Eigen::MatrixXd jac(m, 3 * nf);
  double lambda = 1e-3;
  double cost = r.squaredNorm();
  for (int it = 0; it < max_iterations; ++it) {
    rep.iterations = it + 1;
    jac.setZero();
    residuals(rep.positions, r, &jac);
    rep.max_residual = r.cwiseAbs().maxCoeff();
    if (rep.max_residual <= eps) {
      rep.converged = true;
      return rep;
    }
    cost = r.squaredNorm();
    Eigen::MatrixXd jtj = jac.transpose() * jac;
    Eigen::VectorXd g = jac.transpose() * r;

    bool stepped = false;
    while (lambda <= 1e14) {
      Eigen::MatrixXd damped = jtj;
      damped.diagonal().array() += lambda;
      Eigen::VectorXd dx = damped.ldlt().solve(-g);
      std::vector<Vec3> trial = rep.positions;
      for (int v = 0; v < n; ++v)
        if (slot[v] >= 0) {
          trial[v].x += dx(3 * slot[v] + 0);
          trial[v].y += dx(3 * slot[v] + 1);
          trial[v].z += dx(3 * slot[v] + 2);
        }
      Eigen::VectorXd rt(m);
      residuals(trial, rt, nullptr);
      if (rt.squaredNorm() < cost) {
        rep.positions = std::move(trial);
        lambda = std::max(lambda * 0.3, 1e-12);
        stepped = true;
        break;
      }
      lambda *= 10;
    }
    if (!stepped) break;  // damping saturated, stuck in a local minimum
  }
  residuals(rep.positions, r, nullptr);
  rep.max_residual = r.cwiseAbs().maxCoeff();
  rep.converged = rep.max_residual <= eps;
  return rep;
}

}  // namespace deltadome
