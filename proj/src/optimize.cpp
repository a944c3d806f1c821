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

#include "capgaps/optimize.hpp"

#include <algorithm>
#include <numeric>

namespace capgaps {

SimplexResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& x0, double step, int max_iters, double tol) {
  const int n = static_cast<int>(x0.size());
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (int i = 0; i < n; ++i) pts[i + 1][i] += step;
  std::vector<double> vals(n + 1);
  for (int i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::vector<int> order(n + 1);
  SimplexResult result;
  for (; result.iterations < max_iters; ++result.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vals[a] < vals[b]; });
    if (vals[order[n]] - vals[order[0]] <= tol) {
      result.converged = true;
      break;
    }
    std::vector<double> centroid(n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) centroid[k] += pts[order[i]][k];
    for (int k = 0; k < n; ++k) centroid[k] /= n;

    auto blend = [&](double coeff) {
      std::vector<double> p(n);
      for (int k = 0; k < n; ++k)
        p[k] = centroid[k] + coeff * (pts[order[n]][k] - centroid[k]);
      return p;
    };

    std::vector<double> reflected = blend(-1.0);
    double fr = f(reflected);
    if (fr < vals[order[0]]) {
      std::vector<double> expanded = blend(-2.0);
      double fe = f(expanded);
      if (fe < fr) {
        pts[order[n]] = std::move(expanded);
        vals[order[n]] = fe;
      } else {
        pts[order[n]] = std::move(reflected);
        vals[order[n]] = fr;
      }
      continue;
    }
    if (fr < vals[order[n - 1]]) {
      pts[order[n]] = std::move(reflected);
      vals[order[n]] = fr;
      continue;
    }
    std::vector<double> contracted = blend(fr < vals[order[n]] ? -0.5 : 0.5);
    double fc = f(contracted);
    if (fc < std::min(fr, vals[order[n]])) {
      pts[order[n]] = std::move(contracted);
      vals[order[n]] = fc;
      continue;
    }
    for (int i = 1; i <= n; ++i) {
      for (int k = 0; k < n; ++k)
        pts[order[i]][k] = 0.5 * (pts[order[i]][k] + pts[order[0]][k]);
      vals[order[i]] = f(pts[order[i]]);
    }
  }
  int best = 0;
  for (int i = 1; i <= n; ++i)
    if (vals[i] < vals[best]) best = i;
  result.x = pts[best];
  result.value = vals[best];
  return result;
}

}  // namespace capgaps
