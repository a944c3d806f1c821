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

#include <capgaps/decompose.hpp>
#include <capgaps/entropic.hpp>
#include <capgaps/rng.hpp>
#include <capgaps/sampling.hpp>

#include <cmath>
#include <stdexcept>

#include <doctest.h>

using namespace capgaps;

namespace {

OptimizerConfig quick_cfg(std::uint64_t seed, int restarts = 8) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

double choi_distance(const QChannel& a, const QChannel& b) {
  return frobenius_distance(choi_from_kraus(a).matrix,
                            choi_from_kraus(b).matrix);
}

CMatrix mixture_choi(const DecompositionResult& r) {
  CMatrix c1 = choi_from_kraus(gen_extreme_channel(r.ge1)).matrix;
  CMatrix c2 = choi_from_kraus(gen_extreme_channel(r.ge2)).matrix;
  return r.p * c1 + (1.0 - r.p) * c2;
}

}  // namespace

TEST_CASE("gen_extreme_channel canonical corners") {
  GenExtremeParams id_params;  // u = v = 0, trivial rotations
  CHECK(choi_distance(gen_extreme_channel(id_params),
                      channels::identity(2)) < 1e-14);

  GenExtremeParams flip;  // u = v = pi/2 kills K1 and leaves K2 = X
  flip.u = flip.v = std::asin(1.0);
  QChannel ch = gen_extreme_channel(flip);
  CHECK(channel_rank(ch) == 1);
  CHECK(choi_distance(ch, channels::bit_flip(1.0)) < 1e-12);
}

TEST_CASE("gen_extreme_channel reproduces amplitude damping") {
  for (double gamma : {0.1, 0.4, 0.75}) {
    GenExtremeParams params;
    params.u = std::asin(std::sqrt(gamma));
    params.v = 0.0;
    CHECK(choi_distance(gen_extreme_channel(params),
                        channels::amplitude_damping(gamma)) < 1e-12);
  }
}

TEST_CASE("gen_extreme_channel always has rank at most two") {
  Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    GenExtremeParams params;
    params.u = rng.uniform(0.0, std::asin(1.0));
    params.v = rng.uniform(0.0, std::asin(1.0));
    for (int k = 0; k < 3; ++k) {
      params.pre[k] = rng.uniform(0.0, 6.28);
      params.post[k] = rng.uniform(0.0, 6.28);
    }
    QChannel ch = gen_extreme_channel(params);
    CHECK(channel_rank(ch) <= 2);
    CMatrix sum = CMatrix::Zero(2, 2);
    for (const auto& k : ch.kraus) sum += dagger(k) * k;
    CHECK(frobenius_distance(sum, identity_matrix(2)) < 1e-12);
  }
}

TEST_CASE("q_cap_gen_extreme closed-form endpoints") {
  CHECK(q_cap_gen_extreme(0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-9));
  // u = pi/2, v = 0 replaces every input with |1><1| up to phases: zero.
  CHECK(q_cap_gen_extreme(std::asin(1.0), 0.0) ==
        doctest::Approx(0.0).epsilon(1e-9));
  // Symmetric u = v point is unitary-like only at 0; at pi/4 the canonical
  // pair gives the completely dephasing-type behavior with zero one-shot
  // coherent information on the z axis.
  CHECK(q_cap_gen_extreme(std::asin(1.0) / 2.0, std::asin(1.0) / 2.0) ==
        doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("q_cap_gen_extreme agrees with the generic rank-2 optimizer") {
  // Dual route: the closed-form z-axis value against the full multi-start
  // density-matrix search on the same channel.
  auto cfg = quick_cfg(52);
  Rng rng(53);
  for (int trial = 0; trial < 6; ++trial) {
    double u = rng.uniform(0.0, std::asin(1.0));
    double v = rng.uniform(0.0, std::asin(1.0));
    GenExtremeParams params;
    params.u = u;
    params.v = v;
    for (int k = 0; k < 3; ++k) {
      params.pre[k] = rng.uniform(0.0, 6.28);
      params.post[k] = rng.uniform(0.0, 6.28);
    }
    double fast = q_cap_gen_extreme(u, v);
    double generic = q_cap_rank2(gen_extreme_channel(params), cfg);
    CHECK(fast == doctest::Approx(generic).epsilon(2e-5));
  }
}

TEST_CASE("q_cap_gen_extreme matches the amplitude damping closed form") {
  // For damping gamma < 1/2 the capacity is max over p of
  // h2((1-gamma) p) - h2(gamma p).
  for (double gamma : {0.15, 0.3}) {
    double best = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      double p = static_cast<double>(i) / 2000.0;
      auto h2 = [](double x) {
        if (x <= 0.0 || x >= 1.0) return 0.0;
        return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
      };
      best = std::max(best, h2((1.0 - gamma) * p) - h2(gamma * p));
    }
    double fast = q_cap_gen_extreme(std::asin(std::sqrt(gamma)), 0.0);
    CHECK(fast == doctest::Approx(best).epsilon(1e-6));
  }
}

TEST_CASE("q_cap_rank2 closed forms and preconditions") {
  auto cfg = quick_cfg(54);
  CHECK(q_cap_rank2(channels::identity(2), cfg) ==
        doctest::Approx(1.0).epsilon(1e-8));
  // Anti-degradable side of amplitude damping: capacity zero.
  CHECK(q_cap_rank2(channels::amplitude_damping(0.75), cfg) ==
        doctest::Approx(0.0).epsilon(1e-6));
  CHECK(q_cap_rank2(channels::amplitude_damping(0.25), cfg) > 0.1);
  CHECK_THROWS_AS(q_cap_rank2(channels::depolarizing(0.9), cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(q_cap_rank2(channels::identity(3), cfg),
                  std::invalid_argument);
}

TEST_CASE("decompose_channel recovers a unitary target exactly") {
  auto cfg = quick_cfg(55, 12);
  DecompositionResult res = decompose_channel(channels::identity(2), cfg);
  CHECK(res.success);
  CHECK(res.residual <= 1e-6);
  CHECK(res.p == 1.0);
  CHECK(res.bound == doctest::Approx(1.0).epsilon(1e-3));
  // Reported residual is consistent with the returned parameters.
  double recomputed = frobenius_distance(
      mixture_choi(res), choi_from_kraus(channels::identity(2)).matrix);
  CHECK(recomputed == doctest::Approx(res.residual).epsilon(1e-10));
}

TEST_CASE("decompose_channel on a channel already in the family") {
  auto cfg = quick_cfg(56, 12);
  QChannel ad = channels::amplitude_damping(0.3);
  DecompositionResult res = decompose_channel(ad, cfg);
  CHECK(res.success);
  CHECK(res.residual <= 1e-3);
  double direct = q_cap_rank2(ad, quick_cfg(57));
  CHECK(res.bound >= direct - 1e-4);
  CHECK(res.bound <= direct + 5e-3);
}

TEST_CASE("decompose_channel handles rank 3 and 4 targets") {
  auto cfg = quick_cfg(58, 12);
  SampleBatch r3 = sample_channels({3, 2, 59});
  SampleBatch r4 = sample_channels({4, 2, 60});
  std::vector<QChannel> targets = r3.channels;
  for (const auto& ch : r4.channels) targets.push_back(ch);
  for (const auto& ch : targets) {
    DecompositionResult res = decompose_channel(ch, cfg);
    CHECK(res.success);
    CHECK(res.residual <= 1e-3);
    CHECK(res.bound >= -1e-12);
    CHECK(res.bound <= 1.0 + 1e-9);
    double recomputed = frobenius_distance(mixture_choi(res),
                                           choi_from_kraus(ch).matrix);
    CHECK(recomputed == doctest::Approx(res.residual).epsilon(1e-10));
    CHECK(res.successes >= 1);
    CHECK(res.restarts_used == 12);
  }
}

TEST_CASE("decompose_channel is deterministic in the seed") {
  auto cfg = quick_cfg(61, 6);
  QChannel ch = sample_channels({3, 1, 62}).channels[0];
  DecompositionResult a = decompose_channel(ch, cfg);
  DecompositionResult b = decompose_channel(ch, cfg);
  CHECK(a.bound == b.bound);
  CHECK(a.residual == b.residual);
  CHECK(a.p == b.p);
}

TEST_CASE("q3_upper_bound on the completely depolarizing channel is zero") {
  auto cfg = quick_cfg(63, 12);
  double bound = q3_upper_bound(channels::depolarizing(1.0), cfg);
  CHECK(bound >= 0.0);
  CHECK(bound <= 2e-3);
}

TEST_CASE("q3_upper_bound respects capacity ordering on samples") {
  auto cfg = quick_cfg(64, 10);
  SampleBatch batch = sample_channels({3, 4, 65});
  for (const auto& ch : batch.channels) {
    double bound = q3_upper_bound(ch, cfg);
    double q5 = q5_one_shot(ch, quick_cfg(66));
    CHECK(bound >= std::max(0.0, q5) - 1e-4);
    CHECK(bound <= 1.0 + 1e-9);
  }
}
