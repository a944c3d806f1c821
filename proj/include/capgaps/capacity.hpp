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

#ifndef CAPGAPS_CAPACITY_HPP_
#define CAPGAPS_CAPACITY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "capgaps/channel.hpp"
#include "capgaps/linalg.hpp"

namespace capgaps {

struct OptimizerConfig {
  int restarts = 16;
  int max_iters = 2000;
  double tol = 1e-9;  // simplex f-spread
  std::uint64_t seed = 0;
};

// Outcome of a multi-start input-state search.
struct OptimizeResult {
  CMatrix argmax;
  double value = 0.0;
  int iterations = 0;    // summed over restarts
  int best_restart = 0;  // -1 when an analytic candidate state won
  bool converged = true;
  std::vector<double> restart_values;  // best value seen per restart
};

struct OptDiagnostics {
  int iterations = 0;
  int best_restart = 0;
  bool converged = true;
};

// Capacities and gaps for one channel.  The q3 fields stay empty until a
// convex-decomposition bound is attached (see the decompose module); gap
// columns always recompute from the capacity columns.
struct CapacityReport {
  int rank = 0;
  double t_norm = 0.0;
  double t_frob = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q5 = 0.0;
  double q4 = 0.0;
  std::optional<double> q3_ub;
  std::optional<double> decomposition_residual;
  double dq15 = 0.0;  // q5 - q1
  double dq25 = 0.0;  // q2 - q5
  double dq24 = 0.0;  // q4 - q2
  std::optional<double> dq23;  // q3_ub - q2
  std::optional<double> dq34;  // q4 - q3_ub
  OptDiagnostics q5_diag;
  OptDiagnostics q4_diag;
};

// Coherent information at the maximally mixed input; may be negative.
double q1_capacity(const QChannel& ch);

// max(0, q1); the value with capacity semantics.
double q1_capacity_floored(const QChannel& ch);

// (log2 d_in + q1) / 2.
double q2_capacity(const QChannel& ch);

// Multi-start maximization of the coherent information over inputs.
double q5_one_shot(const QChannel& ch, const OptimizerConfig& cfg);

// Half the maximal quantum mutual information (a concave objective).
double q4_capacity(const QChannel& ch, const OptimizerConfig& cfg);

// Entanglement-assisted classical capacities (c2, c4) = (2 q2, 2 q4).
std::pair<double, double> ea_classical(const QChannel& ch,
                                       const OptimizerConfig& cfg);

// Multi-start derivative-free simplex maximization of `objective` over
// d-dimensional density matrices.  The parametrization is unconstrained:
// for qubits a squashed Bloch-ball map (r = sin^2 x0 with angles x1, x2),
// in general rho = AA^dag / tr with A = 1 + X(params).  Restart 0 starts at
// the maximally mixed state and restart 1 near a pure state; both of those
// states are also evaluated directly as analytic candidates.  Deterministic
// given cfg.seed.
OptimizeResult optimize_input(
    const std::function<double(const CMatrix&)>& objective, int d,
    const OptimizerConfig& cfg);

// Full capacity set for one channel.  The q5/q4 searches feed each other's
// best inputs as extra candidates, which makes the reported values satisfy
// the ordering chain q5 >= max(0, q1), q4 >= q2, q4 <= (log2 d + q5)/2 up
// to floating-point error.
CapacityReport capacity_report(const QChannel& ch, const OptimizerConfig& cfg);

// Fills q3_ub and the residual on a report and recomputes dq23/dq34.
void attach_q3_bound(CapacityReport& report, double q3_ub, double residual);

}  // namespace capgaps

#endif  // CAPGAPS_CAPACITY_HPP_
