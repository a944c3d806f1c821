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

#ifndef CAPGAPS_DECOMPOSE_HPP_
#define CAPGAPS_DECOMPOSE_HPP_

#include <array>

#include "capgaps/capacity.hpp"
#include "capgaps/channel.hpp"

namespace capgaps {

// A generalized extreme qubit channel: the canonical two-Kraus pair
// K1 = diag(cos v, cos u), K2 = offdiag(sin u; sin v) conjugated by SU(2)
// rotations on both sides.  Choi rank is at most 2 for all parameters.
struct GenExtremeParams {
  double u = 0.0;  // [0, pi/2]
  double v = 0.0;  // [0, pi/2]
  std::array<double, 3> pre{};   // input-side SU(2) Euler angles (z-y-z)
  std::array<double, 3> post{};  // output-side SU(2) Euler angles
};

struct DecompositionResult {
  bool success = false;  // residual within the 1e-3 acceptance threshold
  double p = 1.0;
  GenExtremeParams ge1;
  GenExtremeParams ge2;
  double residual = 0.0;  // Choi Frobenius distance of the reconstruction
  double bound = 0.0;     // p q(ge1) + (1-p) q(ge2), penalty removed
  int restarts_used = 0;
  int successes = 0;  // restarts that met the residual threshold
};

QChannel gen_extreme_channel(const GenExtremeParams& params);

// Capacity of a rank <= 2 qubit channel: max(0, one-shot coherent
// information).  Rank-2 qubit channels are degradable or anti-degradable;
// in the first case the capacity equals the one-shot value and in the
// second it is zero along with the one-shot value, so the floored maximum
// covers both.
double q_cap_rank2(const QChannel& ch, const OptimizerConfig& cfg);

// Closed-form version for a channel in canonical (u, v) position: on the
// z-axis the output and environment stay diagonal, giving
// I_c(q) = h2(q cos^2 v + (1-q) sin^2 u) - h2(q cos^2 v + (1-q) cos^2 u),
// and Z covariance plus the degradable/anti-degradable dichotomy put the
// maximum on that axis.  Pre/post unitaries never change the capacity, so
// this value is exact for every generalized extreme channel.
double q_cap_gen_extreme(double u, double v);

// Multi-start penalized search for a two-term convex decomposition of a
// qubit channel into generalized extreme channels.  The penalty weight on
// the Choi reconstruction residual ramps 10 -> 1e4 inside each restart;
// only results with residual <= 1e-3 count as successes and the reported
// bound excludes the penalty term.
DecompositionResult decompose_channel(const QChannel& ch,
                                      const OptimizerConfig& cfg);

// Best (smallest) successful decomposition bound, floored at zero.  Throws
// when no restart reached the residual threshold.
double q3_upper_bound(const QChannel& ch, const OptimizerConfig& cfg);

}  // namespace capgaps

#endif  // CAPGAPS_DECOMPOSE_HPP_
