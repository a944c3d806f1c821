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

#ifndef CAPGAPS_EXPERIMENTS_HPP_
#define CAPGAPS_EXPERIMENTS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "capgaps/capacity.hpp"
#include "capgaps/channel.hpp"

namespace capgaps {

// Filesystem-level failure (cannot open, cannot write), as opposed to a
// validation failure of the data itself.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<int> ranks = {2, 3, 4};
  int count = 200;  // per rank
  std::uint64_t seed = 0;
  OptimizerConfig opt;
  int threads = 0;  // 0 picks the hardware concurrency
  bool with_decompose = false;
};

// One channel's worth of scatter data.  The q3 block stays empty when no
// decomposition was attempted; decompose_ok records failed attempts so the
// statistics stay honest.
struct ResultRow {
  int index = 0;
  int rank = 0;
  std::uint64_t seed = 0;
  double t_norm = 0.0;
  double t_frob = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double q5 = 0.0;
  double q4 = 0.0;
  std::optional<double> q3_ub;
  double dq15 = 0.0;
  double dq25 = 0.0;
  double dq24 = 0.0;
  std::optional<double> dq23;
  std::optional<double> dq34;
  std::optional<double> residual;
  bool q5_converged = true;
  bool q4_converged = true;
  std::optional<bool> decompose_ok;
};

// Samples `count` channels per rank and computes a row for each.  Work is
// spread over a bounded pool; rows come back ordered by (rank, index) and
// all per-channel randomness derives from (seed, rank, index), so the
// output is identical for any thread count.
std::vector<ResultRow> run_scatter(const RunConfig& cfg);

// Row for one already-sampled channel sitting at (rank, index) of a run
// seeded with `seed`; the unit of work behind run_scatter and the CLI.
ResultRow row_for_channel(const QChannel& ch, int rank, int index,
                          std::uint64_t seed, const OptimizerConfig& opt,
                          bool with_decompose);

// CSV persistence: fixed versioned header, numbers at 17 significant
// digits (lossless), blank cells for missing optionals.  Reading matches
// columns by header name and reports malformed lines by number.
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);
std::vector<ResultRow> read_csv(const std::string& path);

// Self-contained 800x600 scatter SVG; ranks colored red/blue/green.  Rows
// missing either field are skipped.
std::string plot_scatter(const std::vector<ResultRow>& rows,
                         const std::string& x_field,
                         const std::string& y_field,
                         bool group_by_rank = true);

// Named numeric field of a row; empty when the field has no value.
std::optional<double> row_field(const ResultRow& row,
                                const std::string& field);

// Median q5 of rank-2 rows with t_norm in [0, 0.4] minus the median over
// [0.6, 1]; the binned statistic behind the transition claim.
double transition_statistic(const std::vector<ResultRow>& rows);

// Over ranks 3 and 4 pooled: (fraction of dq34 > 0, fraction of dq23 < 0)
// among rows with a decomposition bound.
std::pair<double, double> sign_statistics(const std::vector<ResultRow>& rows);

}  // namespace capgaps

#endif  // CAPGAPS_EXPERIMENTS_HPP_
