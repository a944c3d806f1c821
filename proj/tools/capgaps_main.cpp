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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "capgaps/capacity.hpp"
#include "capgaps/channel.hpp"
#include "capgaps/coding.hpp"
#include "capgaps/decompose.hpp"
#include "capgaps/experiments.hpp"
#include "capgaps/sampling.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw capgaps::IoError("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw capgaps::IoError("read failed: " + path);
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw capgaps::IoError("cannot open for writing: " + path);
  out << text;
  if (!out) throw capgaps::IoError("write failed: " + path);
}

// Applies fn(i) to every index on a bounded pool; results land by index so
// the output order never depends on scheduling.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
  int n = threads > 0 ? threads
                      : static_cast<int>(std::thread::hardware_concurrency());
  n = std::max(1, std::min<int>(n, count));
  if (n == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capgaps: quantum channel capacities, gaps, and codings"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  int threads = 0;
  CLI::Option* seed_opt =
      app.add_option("--seed", seed, "global RNG seed (default 0)");
  app.add_option("--threads", threads,
                 "worker threads (default: hardware concurrency)");

  // sample
  auto* sample = app.add_subcommand("sample", "draw random qubit channels");
  int rank = 2, count = 200;
  std::string sample_out;
  sample->add_option("--rank", rank, "Choi rank (1..4)")->required();
  sample->add_option("--count", count, "channels to draw");
  sample->add_option("--out", sample_out, "output JSON path")->required();

  // capacities
  auto* capacities =
      app.add_subcommand("capacities", "compute capacity rows for a batch");
  std::string cap_in, cap_out;
  int restarts = 16;
  capacities->add_option("--in", cap_in, "channel batch JSON")->required();
  capacities->add_option("--out", cap_out, "output CSV path")->required();
  capacities->add_option("--restarts", restarts, "optimizer restarts");

  // decompose
  auto* decompose = app.add_subcommand(
      "decompose", "add convex-decomposition bounds to capacity rows");
  std::string dec_in, dec_csv;
  int dec_restarts = 16;
  decompose->add_option("--in", dec_in, "channel batch JSON")->required();
  decompose->add_option("--append", dec_csv, "CSV to fill in place")
      ->required();
  decompose->add_option("--restarts", dec_restarts, "optimizer restarts");

  // figure
  auto* figure = app.add_subcommand("figure", "scatter plot from a CSV");
  std::string fig_in, fig_out, fig_x = "t_norm", fig_y = "dq24";
  figure->add_option("--in", fig_in, "results CSV")->required();
  figure->add_option("--x", fig_x, "x-axis field");
  figure->add_option("--y", fig_y, "y-axis field");
  figure->add_option("--out", fig_out, "output SVG path")->required();

  // code-check
  auto* code_check =
      app.add_subcommand("code-check", "run a builtin code against noise");
  std::string code_name, noise_name;
  code_check->add_option("--code", code_name, "builtin code name")->required();
  code_check->add_option("--noise", noise_name, "noise family, family:param")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*sample) {
      capgaps::SampleSpec spec{rank, count, seed};
      capgaps::SampleBatch batch = capgaps::sample_channels(spec);
      write_file(sample_out, capgaps::batch_to_json(batch));
      std::cout << "wrote " << batch.channels.size() << " rank-" << rank
                << " channels to " << sample_out
                << " (rejected " << batch.rejected << " degenerate draws)\n";
    } else if (*capacities) {
      capgaps::SampleBatch batch =
          capgaps::batch_from_json(read_file(cap_in));
      std::uint64_t run_seed = *seed_opt ? seed : batch.spec.seed;
      capgaps::OptimizerConfig opt;
      opt.restarts = restarts;
      std::vector<capgaps::ResultRow> rows(batch.channels.size());
      parallel_for(batch.channels.size(), threads, [&](std::size_t i) {
        rows[i] = capgaps::row_for_channel(
            batch.channels[i], batch.spec.rank, static_cast<int>(i), run_seed,
            opt, false);
      });
      capgaps::write_csv(rows, cap_out);
      std::cout << "wrote " << rows.size() << " rows to " << cap_out << "\n";
    } else if (*decompose) {
      capgaps::SampleBatch batch =
          capgaps::batch_from_json(read_file(dec_in));
      std::uint64_t run_seed = *seed_opt ? seed : batch.spec.seed;
      std::vector<capgaps::ResultRow> rows = capgaps::read_csv(dec_csv);
      capgaps::OptimizerConfig opt;
      opt.restarts = dec_restarts;
      std::vector<capgaps::ResultRow> updated(batch.channels.size());
      std::vector<int> row_of(batch.channels.size(), -1);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].rank == batch.spec.rank && rows[r].index >= 0 &&
            rows[r].index < static_cast<int>(batch.channels.size()))
          row_of[rows[r].index] = static_cast<int>(r);
      }
      parallel_for(batch.channels.size(), threads, [&](std::size_t i) {
        if (row_of[i] < 0) return;
        updated[i] = capgaps::row_for_channel(
            batch.channels[i], batch.spec.rank, static_cast<int>(i), run_seed,
            opt, true);
      });
      int filled = 0;
      for (std::size_t i = 0; i < batch.channels.size(); ++i) {
        if (row_of[i] < 0) continue;
        capgaps::ResultRow& row = rows[row_of[i]];
        const capgaps::ResultRow& u = updated[i];
        row.q3_ub = u.q3_ub;
        row.dq23 = u.dq23;
        row.dq34 = u.dq34;
        row.residual = u.residual;
        row.decompose_ok = u.decompose_ok;
        if (u.decompose_ok && *u.decompose_ok) ++filled;
      }
      capgaps::write_csv(rows, dec_csv);
      std::cout << "decomposed " << filled << " of " << batch.channels.size()
                << " channels into " << dec_csv << "\n";
    } else if (*figure) {
      std::vector<capgaps::ResultRow> rows = capgaps::read_csv(fig_in);
      write_file(fig_out, capgaps::plot_scatter(rows, fig_x, fig_y, true));
      std::cout << "wrote " << fig_out << "\n";
    } else if (*code_check) {
      capgaps::Coding coding = capgaps::builtin_coding(code_name);
      capgaps::StabCode code = capgaps::builtin_code(code_name);
      capgaps::QChannel noise = capgaps::channels::from_name(noise_name);
      double coded = capgaps::coding_error(coding, noise);
      double bare = capgaps::bare_error(noise, coding.k);
      std::vector<capgaps::CMatrix> errors = {
          capgaps::identity_matrix(1 << code.n)};
      for (int kind = 1; kind <= 3; ++kind)
        for (int site = 0; site < code.n; ++site) {
          capgaps::CMatrix op = capgaps::identity_matrix(1);
          for (int s = 0; s < code.n; ++s)
            op = capgaps::tensor(
                op, capgaps::pauli(s == site ? kind : 0));
          errors.push_back(op);
        }
      auto [satisfied, lambda] = capgaps::kl_check(code, errors, 1e-10);
      std::cout << "code: " << code.name << " (n=" << code.n
                << ", k=" << code.k << ")\n"
                << "noise: " << noise_name << "\n"
                << "coding_error: " << coded << "\n"
                << "bare_error: " << bare << "\n"
                << "works: " << (coded < bare ? "yes" : "no") << "\n"
                << "kl_check(single-site Paulis): "
                << (satisfied ? "satisfied" : "violated") << "\n";
    }
  } catch (const capgaps::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
