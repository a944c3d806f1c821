// Copyright 2026 The capgaps authors
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

#ifndef CAPGAPS_OPTIMIZE_HPP_
#define CAPGAPS_OPTIMIZE_HPP_

#include <functional>
#include <vector>

namespace capgaps {

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;  // minimized objective at x
  int iterations = 0;
  bool converged = false;  // f-spread reached tol before the iteration cap
};

// Nelder-Mead minimization over R^n starting from x0 with an axis-aligned
// initial simplex of the given step.  Stops when the simplex f-spread
// drops to tol or after max_iters iterations.
SimplexResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, double step, int max_iters, double tol);

}  // namespace capgaps

#endif  // CAPGAPS_OPTIMIZE_HPP_
