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

// Edge that must come out at the given length.
struct LengthConstraint {
  int a = 0, b = 0;
  double length = 1;
};

struct SolveReport {
  std::vector<Vec3> positions;
  double max_residual = 0;  // largest | |pa - pb| - length |
  int iterations = 0;
  bool converged = false;
};

// Levenberg-Marquardt on the stacked length residuals. Vertices flagged in
// fixed keep their seed coordinates; rigid-motion gauge freedom is absorbed
// by the damping. Converged means the largest residual reached eps.
SolveReport SolveLengths(const std::vector<Vec3>& seed,
                         const std::vector<char>& fixed,
                         const std::vector<LengthConstraint>& constraints,
                         double eps, int max_iterations = 300);

}  // namespace deltadome
