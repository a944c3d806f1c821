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

#include "capgaps/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "capgaps/decompose.hpp"
#include "capgaps/rng.hpp"
#include "capgaps/sampling.hpp"

namespace capgaps {

namespace {

const char* const kCsvHeader =
    "index,rank,seed,t_norm,t_frob,q1,q2,q5,q4,q3_ub,dq15,dq25,dq24,dq23,"
    "dq34,residual,q5_converged,q4_converged,decompose_ok";

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_opt(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::uint64_t channel_stream(int rank, int index) {
  return (static_cast<std::uint64_t>(rank) << 32) |
         static_cast<std::uint64_t>(index);
}

double median(std::vector<double> v) {
  if (v.empty()) throw std::invalid_argument("median of an empty set");
  std::sort(v.begin(), v.end());
  std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

double parse_double(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(where + ": malformed number '" + s + "'");
  }
}

}  // namespace

ResultRow row_for_channel(const QChannel& ch, int rank, int index,
                          std::uint64_t seed, const OptimizerConfig& opt,
                          bool with_decompose) {
  std::uint64_t stream = channel_stream(rank, index);
  OptimizerConfig per = opt;
  per.seed = substream_seed(substream_seed(seed, stream), 0xC0);
  CapacityReport report = capacity_report(ch, per);

  ResultRow row;
  row.index = index;
  row.rank = rank;
  row.seed = seed;
  row.t_norm = report.t_norm;
  row.t_frob = report.t_frob;
  row.q1 = report.q1;
  row.q2 = report.q2;
  row.q5 = report.q5;
  row.q4 = report.q4;
  row.dq15 = report.dq15;
  row.dq25 = report.dq25;
  row.dq24 = report.dq24;
  row.q5_converged = report.q5_diag.converged;
  row.q4_converged = report.q4_diag.converged;

  if (with_decompose) {
    OptimizerConfig dec = opt;
    dec.seed = substream_seed(substream_seed(seed, stream), 0xD0);
    DecompositionResult result = decompose_channel(ch, dec);
    row.decompose_ok = result.success;
    if (result.success) {
      double bound = std::max(0.0, result.bound);
      attach_q3_bound(report, bound, result.residual);
      row.q3_ub = bound;
      row.residual = result.residual;
      row.dq23 = *report.dq23;
      row.dq34 = *report.dq34;
    }
  }
  return row;
}

std::vector<ResultRow> run_scatter(const RunConfig& cfg) {
  if (cfg.count < 1)
    throw std::invalid_argument("run_scatter: count must be positive");
  std::vector<int> ranks = cfg.ranks;
  std::sort(ranks.begin(), ranks.end());

  struct Item {
    const QChannel* ch;
    int rank;
    int index;
  };
  std::vector<SampleBatch> batches;
  batches.reserve(ranks.size());
  for (int rank : ranks)
    batches.push_back(sample_channels({rank, cfg.count, cfg.seed}));
  std::vector<Item> items;
  items.reserve(ranks.size() * cfg.count);
  for (std::size_t b = 0; b < batches.size(); ++b)
    for (int i = 0; i < cfg.count; ++i)
      items.push_back({&batches[b].channels[i], ranks[b], i});

  std::vector<ResultRow> rows(items.size());
  int threads = cfg.threads > 0
                    ? cfg.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, items.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= items.size()) break;
      const Item& it = items[i];
      rows[i] = row_for_channel(*it.ch, it.rank, it.index, cfg.seed, cfg.opt,
                                cfg.with_decompose);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return rows;
}

void write_csv(const std::vector<ResultRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << kCsvHeader << "\n";
  for (const auto& r : rows) {
    out << r.index << ',' << r.rank << ',' << r.seed << ','
        << format_double(r.t_norm) << ',' << format_double(r.t_frob) << ','
        << format_double(r.q1) << ',' << format_double(r.q2) << ','
        << format_double(r.q5) << ',' << format_double(r.q4) << ','
        << format_opt(r.q3_ub) << ',' << format_double(r.dq15) << ','
        << format_double(r.dq25) << ',' << format_double(r.dq24) << ','
        << format_opt(r.dq23) << ',' << format_opt(r.dq34) << ','
        << format_opt(r.residual) << ',' << (r.q5_converged ? 1 : 0) << ','
        << (r.q4_converged ? 1 : 0) << ',';
    if (r.decompose_ok) out << (*r.decompose_ok ? 1 : 0);
    out << "\n";
  }
  if (!out) throw IoError("write failed: " + path);
}

std::vector<ResultRow> read_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument(path + ":1: missing header");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> names = split_line(line);
  std::map<std::string, int> col;
  for (std::size_t i = 0; i < names.size(); ++i)
    col[names[i]] = static_cast<int>(i);
  for (const char* required :
       {"index", "rank", "seed", "t_norm", "t_frob", "q1", "q2", "q5", "q4",
        "dq15", "dq25", "dq24"}) {
    if (!col.count(required))
      throw std::invalid_argument(path + ":1: missing column " +
                                  std::string(required));
  }

  std::vector<ResultRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells = split_line(line);
    if (cells.size() != names.size())
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": expected " + std::to_string(names.size()) +
                                  " cells, got " + std::to_string(cells.size()));
    auto cell = [&](const char* name) -> const std::string& {
      return cells[col.at(name)];
    };
    auto has = [&](const char* name) {
      auto it = col.find(name);
      return it != col.end() && !cells[it->second].empty();
    };
    std::string where = path + ":" + std::to_string(line_no);
    ResultRow r;
    r.index = static_cast<int>(parse_double(cell("index"), where));
    r.rank = static_cast<int>(parse_double(cell("rank"), where));
    r.seed = std::stoull(cell("seed"));
    r.t_norm = parse_double(cell("t_norm"), where);
    r.t_frob = parse_double(cell("t_frob"), where);
    r.q1 = parse_double(cell("q1"), where);
    r.q2 = parse_double(cell("q2"), where);
    r.q5 = parse_double(cell("q5"), where);
    r.q4 = parse_double(cell("q4"), where);
    r.dq15 = parse_double(cell("dq15"), where);
    r.dq25 = parse_double(cell("dq25"), where);
    r.dq24 = parse_double(cell("dq24"), where);
    if (has("q3_ub")) r.q3_ub = parse_double(cell("q3_ub"), where);
    if (has("dq23")) r.dq23 = parse_double(cell("dq23"), where);
    if (has("dq34")) r.dq34 = parse_double(cell("dq34"), where);
    if (has("residual")) r.residual = parse_double(cell("residual"), where);
    if (has("q5_converged"))
      r.q5_converged = parse_double(cell("q5_converged"), where) != 0.0;
    if (has("q4_converged"))
      r.q4_converged = parse_double(cell("q4_converged"), where) != 0.0;
    if (has("decompose_ok"))
      r.decompose_ok = parse_double(cell("decompose_ok"), where) != 0.0;
    rows.push_back(std::move(r));
  }
  return rows;
}

std::optional<double> row_field(const ResultRow& row,
                                const std::string& field) {
  if (field == "index") return static_cast<double>(row.index);
  if (field == "rank") return static_cast<double>(row.rank);
  if (field == "t_norm") return row.t_norm;
  if (field == "t_frob") return row.t_frob;
  if (field == "q1") return row.q1;
  if (field == "q2") return row.q2;
  if (field == "q5") return row.q5;
  if (field == "q4") return row.q4;
  if (field == "q3_ub") return row.q3_ub;
  if (field == "dq15") return row.dq15;
  if (field == "dq25") return row.dq25;
  if (field == "dq24") return row.dq24;
  if (field == "dq23") return row.dq23;
  if (field == "dq34") return row.dq34;
  if (field == "residual") return row.residual;
  throw std::invalid_argument("unknown field: " + field);
}

namespace {

std::string format_tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

const char* rank_color(int rank) {
  switch (rank) {
    case 2: return "#d62728";  // red
    case 3: return "#1f77b4";  // blue
    case 4: return "#2ca02c";  // green
    default: return "#7f7f7f";
  }
}

}  // namespace

std::string plot_scatter(const std::vector<ResultRow>& rows,
                         const std::string& x_field,
                         const std::string& y_field, bool group_by_rank) {
  struct Point {
    double x, y;
    int rank;
  };
  // Validate the field names even when there is nothing to plot.
  row_field(ResultRow{}, x_field);
  row_field(ResultRow{}, y_field);
  std::vector<Point> points;
  for (const auto& r : rows) {
    std::optional<double> x = row_field(r, x_field);
    std::optional<double> y = row_field(r, y_field);
    if (x && y) points.push_back({*x, *y, r.rank});
  }

  double x_lo = 0.0, x_hi = 1.0, y_lo = 0.0, y_hi = 1.0;
  if (!points.empty()) {
    x_lo = x_hi = points[0].x;
    y_lo = y_hi = points[0].y;
    for (const auto& p : points) {
      x_lo = std::min(x_lo, p.x);
      x_hi = std::max(x_hi, p.x);
      y_lo = std::min(y_lo, p.y);
      y_hi = std::max(y_hi, p.y);
    }
  }
  auto pad = [](double& lo, double& hi) {
    double span = hi - lo;
    if (span < 1e-12) {
      lo -= 0.5;
      hi += 0.5;
    } else {
      lo -= 0.05 * span;
      hi += 0.05 * span;
    }
  };
  pad(x_lo, x_hi);
  pad(y_lo, y_hi);

  const double width = 800, height = 600;
  const double ml = 70, mr = 20, mt = 20, mb = 55;
  auto sx = [&](double x) {
    return ml + (x - x_lo) / (x_hi - x_lo) * (width - ml - mr);
  };
  auto sy = [&](double y) {
    return height - mb - (y - y_lo) / (y_hi - y_lo) * (height - mt - mb);
  };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
         "height=\"600\" viewBox=\"0 0 800 600\">\n";
  svg << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << num(ml) << "\" y1=\"" << num(height - mb)
      << "\" x2=\"" << num(width - mr) << "\" y2=\"" << num(height - mb)
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << num(ml) << "\" y1=\"" << num(mt) << "\" x2=\""
      << num(ml) << "\" y2=\"" << num(height - mb)
      << "\" stroke=\"black\"/>\n";
  const int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    double fx = x_lo + (x_hi - x_lo) * i / kTicks;
    double px = sx(fx);
    svg << "<line x1=\"" << num(px) << "\" y1=\"" << num(height - mb)
        << "\" x2=\"" << num(px) << "\" y2=\"" << num(height - mb + 5)
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(px) << "\" y=\"" << num(height - mb + 20)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << format_tick(fx)
        << "</text>\n";
    double fy = y_lo + (y_hi - y_lo) * i / kTicks;
    double py = sy(fy);
    svg << "<line x1=\"" << num(ml - 5) << "\" y1=\"" << num(py) << "\" x2=\""
        << num(ml) << "\" y2=\"" << num(py) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(ml - 8) << "\" y=\"" << num(py + 4)
        << "\" font-size=\"12\" text-anchor=\"end\">" << format_tick(fy)
        << "</text>\n";
  }
  svg << "<text x=\"" << num(0.5 * (ml + width - mr)) << "\" y=\""
      << num(height - 15) << "\" font-size=\"14\" text-anchor=\"middle\">"
      << x_field << "</text>\n";
  svg << "<text x=\"18\" y=\"" << num(0.5 * (mt + height - mb))
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 "
         "18 "
      << num(0.5 * (mt + height - mb)) << ")\">" << y_field << "</text>\n";
  for (const auto& p : points) {
    const char* color = group_by_rank ? rank_color(p.rank) : "#1f77b4";
    svg << "<circle cx=\"" << num(sx(p.x)) << "\" cy=\"" << num(sy(p.y))
        << "\" r=\"3\" fill=\"" << color << "\" fill-opacity=\"0.7\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

double transition_statistic(const std::vector<ResultRow>& rows) {
  std::vector<double> low, high;
  for (const auto& r : rows) {
    if (r.rank != 2) continue;
    if (r.t_norm <= 0.4) low.push_back(r.q5);
    if (r.t_norm >= 0.6 && r.t_norm <= 1.0) high.push_back(r.q5);
  }
  return median(std::move(low)) - median(std::move(high));
}

std::pair<double, double> sign_statistics(const std::vector<ResultRow>& rows) {
  int total = 0, pos34 = 0, neg23 = 0;
  for (const auto& r : rows) {
    if ((r.rank != 3 && r.rank != 4) || !r.dq34 || !r.dq23) continue;
    ++total;
    if (*r.dq34 > 0.0) ++pos34;
    if (*r.dq23 < 0.0) ++neg23;
  }
  if (total == 0) return {0.0, 0.0};
  return {static_cast<double>(pos34) / total,
          static_cast<double>(neg23) / total};
}

}  // namespace capgaps
