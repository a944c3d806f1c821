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

#include "capgaps/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "capgaps/optimize.hpp"
#include "capgaps/rng.hpp"

namespace capgaps {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kResidualThreshold = 1e-3;

CMatrix su2(double a, double b, double c) {
  // z-y-z Euler rotation; the global phase is irrelevant for channels.
  double cb = std::cos(0.5 * b);
  double sb = std::sin(0.5 * b);
  Complex ea = std::polar(1.0, -0.5 * a);
  Complex ec = std::polar(1.0, -0.5 * c);
  CMatrix u(2, 2);
  u(0, 0) = ea * ec * cb;
  u(0, 1) = -ea * std::conj(ec) * sb;
  u(1, 0) = std::conj(ea) * ec * sb;
  u(1, 1) = std::conj(ea) * std::conj(ec) * cb;
  return u;
}

double h2(double p) {
  double q = 1.0 - p;
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (q > 0.0) h -= q * std::log2(q);
  return h;
}

// I_c on the z-axis input diag(q, 1-q) of the canonical (u, v) channel.
double z_axis_coherent(double u, double v, double q) {
  double cv = std::cos(v), cu = std::cos(u), su = std::sin(u);
  double a = q * cv * cv + (1.0 - q) * su * su;
  double b = q * cv * cv + (1.0 - q) * cu * cu;
  return h2(a) - h2(b);
}

// 17-parameter search vector: [p | u v pre(3) post(3) | u v pre(3) post(3)],
// with p and the angles squashed into their ranges through sin^2 maps.
struct SearchPoint {
  double p;
  GenExtremeParams ge1;
  GenExtremeParams ge2;
};

double squash01(double x) {
  double s = std::sin(x);
  return s * s;
}

SearchPoint decode(const std::vector<double>& x) {
  SearchPoint pt;
  pt.p = squash01(x[0]);
  auto part = [&](int base) {
    GenExtremeParams ge;
    ge.u = 0.5 * kPi * squash01(x[base]);
    ge.v = 0.5 * kPi * squash01(x[base + 1]);
    ge.pre = {x[base + 2], x[base + 3], x[base + 4]};
    ge.post = {x[base + 5], x[base + 6], x[base + 7]};
    return ge;
  };
  pt.ge1 = part(1);
  pt.ge2 = part(9);
  return pt;
}

CMatrix choi_of(const GenExtremeParams& ge) {
  return choi_from_kraus(gen_extreme_channel(ge)).matrix;
}

// Grid scan plus golden-section refinement of the z-axis coherent
// information; `grid` and `refine` trade precision for speed.
double canonical_cap(double u, double v, int grid, int refine) {
  double best_q = 0.0, best = 0.0;
  for (int i = 0; i <= grid; ++i) {
    double q = static_cast<double>(i) / grid;
    double val = z_axis_coherent(u, v, q);
    if (val > best) {
      best = val;
      best_q = q;
    }
  }
  double lo = std::max(0.0, best_q - 1.0 / grid);
  double hi = std::min(1.0, best_q + 1.0 / grid);
  const double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = z_axis_coherent(u, v, c);
  double fd = z_axis_coherent(u, v, d);
  for (int it = 0; it < refine && b - a > 1e-12; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = z_axis_coherent(u, v, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = z_axis_coherent(u, v, d);
    }
  }
  best = std::max(best, std::max(fc, fd));
  return std::max(0.0, best);
}

struct Objective {
  const CMatrix* target;
  double mu;

  // The linear residual penalty is exact: above a modest mu the penalized
  // minimum sits on the residual-zero manifold instead of trading residual
  // against a lower bound, so the ramp end reports honest bounds.  The
  // in-loop capacity uses a coarse scan; the reported bound is recomputed
  // with the precise one.
  double operator()(const std::vector<double>& x) const {
    SearchPoint pt = decode(x);
    CMatrix mix = pt.p * choi_of(pt.ge1) + (1.0 - pt.p) * choi_of(pt.ge2);
    double residual = (mix - *target).norm();
    double bound = pt.p * canonical_cap(pt.ge1.u, pt.ge1.v, 12, 28) +
                   (1.0 - pt.p) * canonical_cap(pt.ge2.u, pt.ge2.v, 12, 28);
    return bound + mu * residual;
  }
};

double recompute_residual(const CMatrix& target, const SearchPoint& pt) {
  CMatrix mix = pt.p * choi_of(pt.ge1) + (1.0 - pt.p) * choi_of(pt.ge2);
  return (mix - target).norm();
}

double bound_of(const SearchPoint& pt) {
  return pt.p * q_cap_gen_extreme(pt.ge1.u, pt.ge1.v) +
         (1.0 - pt.p) * q_cap_gen_extreme(pt.ge2.u, pt.ge2.v);
}

}  // namespace

QChannel gen_extreme_channel(const GenExtremeParams& params) {
  CMatrix k1 = CMatrix::Zero(2, 2);
  k1(0, 0) = std::cos(params.v);
  k1(1, 1) = std::cos(params.u);
  CMatrix k2 = CMatrix::Zero(2, 2);
  k2(0, 1) = std::sin(params.u);
  k2(1, 0) = std::sin(params.v);
  CMatrix pre = su2(params.pre[0], params.pre[1], params.pre[2]);
  CMatrix post = su2(params.post[0], params.post[1], params.post[2]);
  return QChannel(2, 2, {post * k1 * pre, post * k2 * pre});
}

double q_cap_gen_extreme(double u, double v) {
  return canonical_cap(u, v, 32, 80);
}

double q_cap_rank2(const QChannel& ch, const OptimizerConfig& cfg) {
  if (ch.d_in != 2 || ch.d_out != 2)
    throw std::invalid_argument("q_cap_rank2: qubit channels only");
  if (channel_rank(ch) > 2)
    throw std::invalid_argument("q_cap_rank2: channel rank exceeds 2");
  return std::max(0.0, q5_one_shot(ch, cfg));
}

DecompositionResult decompose_channel(const QChannel& ch,
                                      const OptimizerConfig& cfg) {
  if (ch.d_in != 2 || ch.d_out != 2)
    throw std::invalid_argument("decompose_channel: qubit channels only");
  const CMatrix target = choi_from_kraus(ch).matrix;
  const int kParams = 17;
  const double mu_ramp[] = {10.0, 1e2, 1e3, 1e4};

  DecompositionResult best;
  double best_fail_residual = 1e300;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::vector<double> x(kParams);
    if (restart == 0) {
      // Balanced mid-range start; all later restarts are random.
      x.assign(kParams, 0.0);
      x[0] = 0.25 * kPi;
      x[1] = x[2] = x[9] = x[10] = 0.6;
    } else {
      Rng rng(substream_seed(cfg.seed, 0xD3C0 + restart));
      x[0] = rng.uniform(0.3, 1.27);
      for (int base : {1, 9}) {
        x[base] = rng.uniform(0.15, 1.42);
        x[base + 1] = rng.uniform(0.15, 1.42);
        for (int k = 2; k < 8; ++k)
          x[base + k] = rng.uniform(0.0, 2.0 * kPi);
      }
    }

    // Feasibility seeding: pull the start onto the decomposition manifold
    // before the penalized stages, which keeps the success rate of random
    // restarts high.
    auto residual_only = [&](const std::vector<double>& p) {
      return recompute_residual(target, decode(p));
    };
    const int seed_iters = std::min(cfg.max_iters, 1200);
    const int stage_iters = std::max(300, (2 * cfg.max_iters) / 5);
    const int polish_iters = std::max(500, (3 * cfg.max_iters) / 4);
    SimplexResult seeded = nelder_mead(residual_only, x, 0.4, seed_iters, 1e-12);
    x = seeded.x;

    for (double mu : mu_ramp) {
      Objective obj{&target, mu};
      SimplexResult stage = nelder_mead(
          [&](const std::vector<double>& p) { return obj(p); }, x, 0.25,
          stage_iters, cfg.tol);
      x = stage.x;
    }
    Objective final_obj{&target, 1e4};
    SimplexResult polish = nelder_mead(
        [&](const std::vector<double>& p) { return final_obj(p); }, x, 0.02,
        polish_iters, cfg.tol);
    x = polish.x;

    SearchPoint pt = decode(x);
    double residual = recompute_residual(target, pt);
    double bound = bound_of(pt);
    if (residual <= kResidualThreshold) {
      if (!best.success || bound < best.bound) {
        best.success = true;
        best.p = pt.p;
        best.ge1 = pt.ge1;
        best.ge2 = pt.ge2;
        best.residual = residual;
        best.bound = bound;
      }
      ++best.successes;
    } else if (!best.success && residual < best_fail_residual) {
      best_fail_residual = residual;
      best.p = pt.p;
      best.ge1 = pt.ge1;
      best.ge2 = pt.ge2;
      best.residual = residual;
      best.bound = bound;
    }
  }
  best.restarts_used = cfg.restarts;

  // Canonicalize single-factor winners: when both factors coincide, or one
  // factor carries essentially all the weight and alone still meets the
  // residual threshold, report the degenerate p = 1 decomposition.
  if (best.success) {
    if (best.p < 0.5) {
      std::swap(best.ge1, best.ge2);
      best.p = 1.0 - best.p;
    }
    {
      // Try the degenerate representation regardless of the mixture shape:
      // targets inside the family often come back as a blend of two nearby
      // factors.  Re-polish the dominant factor against the target; the
      // dropped partner was compensating for part of its misfit.
      auto enc = [](const GenExtremeParams& g) {
        auto inv = [](double val) {
          double r = std::clamp(val / (0.5 * kPi), 0.0, 1.0);
          return std::asin(std::sqrt(r));
        };
        return std::vector<double>{inv(g.u),   inv(g.v),   g.pre[0],
                                   g.pre[1],   g.pre[2],   g.post[0],
                                   g.post[1],  g.post[2]};
      };
      auto dec = [](const std::vector<double>& x) {
        GenExtremeParams g;
        g.u = 0.5 * kPi * squash01(x[0]);
        g.v = 0.5 * kPi * squash01(x[1]);
        g.pre = {x[2], x[3], x[4]};
        g.post = {x[5], x[6], x[7]};
        return g;
      };
      auto fres = [&](const std::vector<double>& x) {
        return frobenius_distance(choi_of(dec(x)), target);
      };
      GenExtremeParams ge = best.ge1;
      SimplexResult ref = nelder_mead(fres, enc(ge), 0.01, 600, 1e-14);
      if (ref.value < frobenius_distance(choi_of(ge), target))
        ge = dec(ref.x);
      double residual = frobenius_distance(choi_of(ge), target);
      // Adopt the collapse only when the lone factor fits as tightly as the
      // mixture did; a looser fit would weaken the certified bound.
      if (residual <= std::max(best.residual, 1e-6)) {
        best.p = 1.0;
        best.ge1 = ge;
        best.ge2 = ge;
        best.residual = residual;
        best.bound = q_cap_gen_extreme(ge.u, ge.v);
      }
    }
  }
  return best;
}

double q3_upper_bound(const QChannel& ch, const OptimizerConfig& cfg) {
  DecompositionResult result = decompose_channel(ch, cfg);
  if (!result.success)
    throw std::runtime_error(
        "q3_upper_bound: no decomposition reached the residual threshold");
  return std::max(0.0, result.bound);
}

}  // namespace capgaps
