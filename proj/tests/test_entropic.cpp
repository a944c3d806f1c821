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

#include <capgaps/entropic.hpp>
#include <capgaps/rng.hpp>
#include <capgaps/sampling.hpp>

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "test_util.hpp"

using namespace capgaps;
using testutil::random_density;
using testutil::random_pure_density;
using testutil::random_unitary;

namespace {

CMatrix diag2(double a, double b) {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

// Independent route to the coherent information: purify rho, send the system
// half through the channel, and take H(output) - H(joint).  Uses only
// primitives from the linear-algebra layer.
double coherent_information_via_purification(const CMatrix& rho,
                                             const QChannel& ch) {
  auto spec = hermitian_eig(rho);
  int d = static_cast<int>(rho.rows());
  // |phi> = sum_r sqrt(lambda_r) |v_r>_in (x) |r>_ref, input index major.
  CVector phi = CVector::Zero(d * d);
  for (int r = 0; r < d; ++r) {
    double lam = std::max(spec.eigenvalues(r), 0.0);
    if (lam <= 0.0) continue;
    for (int i = 0; i < d; ++i)
      phi(i * d + r) += std::sqrt(lam) * spec.eigenvectors(i, r);
  }
  CMatrix joint = CMatrix::Zero(ch.d_out * d, ch.d_out * d);
  for (const auto& k : ch.kraus) {
    CVector moved = tensor(k, identity_matrix(d)) * phi;
    joint += moved * moved.adjoint();
  }
  CMatrix out = apply_unchecked(ch, rho);
  return entropy_unchecked(out) - entropy_unchecked(joint);
}

}  // namespace

TEST_CASE("entropy closed forms") {
  CHECK(entropy(maximally_mixed(2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entropy(maximally_mixed(4)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(entropy(diag2(1.0, 0.0)) == doctest::Approx(0.0).epsilon(1e-12));
  // H(diag(3/4, 1/4)) = 2 - (3/4) log2 3.
  double expect = 2.0 - 0.75 * std::log2(3.0);
  CHECK(entropy(diag2(0.75, 0.25)) ==
        doctest::Approx(expect).epsilon(1e-12));
  CHECK(entropy(diag2(0.75, 0.25)) == doctest::Approx(0.8112781245).epsilon(1e-9));
}

TEST_CASE("entropy is basis independent and bounded") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    int d = 2 + static_cast<int>(rng.uniform() * 4);
    CMatrix rho = random_density(d, rng);
    CMatrix u = random_unitary(d, rng);
    double h = entropy(rho);
    CHECK(h >= 0.0);
    CHECK(h <= std::log2(static_cast<double>(d)) + 1e-10);
    CHECK(entropy(u * rho * u.adjoint()) == doctest::Approx(h).epsilon(1e-9));
  }
}

TEST_CASE("entropy validates; entropy_unchecked tolerates drift") {
  CHECK_THROWS_AS(entropy(2.0 * maximally_mixed(2)), std::invalid_argument);
  CMatrix drifted = (1.0 + 1e-9) * maximally_mixed(2);
  CHECK(entropy_unchecked(drifted) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("relative entropy identities") {
  Rng rng(32);
  CMatrix rho = random_density(3, rng);
  auto self = relative_entropy(rho, rho);
  CHECK_FALSE(self.infinite);
  CHECK(std::abs(self.value) < 1e-10);

  // H(rho) = log2 d - R(rho || pi_d).
  auto rel = relative_entropy(rho, maximally_mixed(3));
  CHECK_FALSE(rel.infinite);
  CHECK(entropy(rho) ==
        doctest::Approx(std::log2(3.0) - rel.value).epsilon(1e-10));

  // Nonnegative on random pairs (Klein inequality).
  for (int trial = 0; trial < 20; ++trial) {
    CMatrix a = random_density(2, rng);
    CMatrix b = random_density(2, rng);
    auto r = relative_entropy(a, b);
    CHECK_FALSE(r.infinite);
    CHECK(r.value > -1e-10);
  }
}

TEST_CASE("relative entropy flags support violations as infinite") {
  CHECK(relative_entropy(diag2(1.0, 0.0), diag2(0.0, 1.0)).infinite);
  CHECK(relative_entropy(maximally_mixed(2), diag2(1.0, 0.0)).infinite);
  CHECK_FALSE(relative_entropy(diag2(1.0, 0.0), maximally_mixed(2)).infinite);
}

TEST_CASE("coherent information closed forms") {
  QChannel id = channels::identity(2);
  CHECK(coherent_information(maximally_mixed(2), id) ==
        doctest::Approx(1.0).epsilon(1e-10));
  QChannel rep = channels::replacement(maximally_mixed(2));
  CHECK(coherent_information(maximally_mixed(2), rep) ==
        doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("coherent information vanishes on pure inputs") {
  Rng rng(33);
  std::vector<QChannel> chans = {channels::amplitude_damping(0.3),
                                 channels::depolarizing(0.6),
                                 channels::phase_flip(0.2)};
  for (const auto& ch : chans) {
    for (int trial = 0; trial < 5; ++trial) {
      CMatrix psi = random_pure_density(2, rng);
      CHECK(std::abs(coherent_information(psi, ch)) < 1e-8);
    }
  }
}

TEST_CASE("coherent information agrees with the purification route") {
  // Dual-route check: complementary-channel form against an independent
  // purification computation, over a broad random ensemble.
  std::uint64_t seed = 777;
  int checked = 0;
  for (int rank = 1; rank <= 4; ++rank) {
    SampleBatch batch = sample_channels({rank, 42, seed + rank});
    Rng rng(substream_seed(seed, 9000 + rank));
    for (const auto& ch : batch.channels) {
      CMatrix rho = (checked % 3 == 0) ? random_pure_density(2, rng)
                                       : random_density(2, rng);
      double via_comp = coherent_information(rho, ch);
      double via_pur = coherent_information_via_purification(rho, ch);
      CHECK(via_comp == doctest::Approx(via_pur).epsilon(1e-8));
      ++checked;
    }
  }
  CHECK(checked == 168);
}

TEST_CASE("mutual information closed forms and positivity") {
  QChannel id = channels::identity(2);
  CHECK(mutual_information(maximally_mixed(2), id) ==
        doctest::Approx(2.0).epsilon(1e-10));
  Rng rng(34);
  QChannel rep = channels::replacement(random_density(2, rng));
  for (int trial = 0; trial < 5; ++trial) {
    CMatrix rho = random_density(2, rng);
    CHECK(std::abs(mutual_information(rho, rep)) < 1e-8);
  }
  // Completely dephasing at the maximally mixed input: classical bit.
  CHECK(mutual_information(maximally_mixed(2), channels::phase_flip(0.5)) ==
        doctest::Approx(1.0).epsilon(1e-10));
  // J >= 0 on random pairs.
  SampleBatch batch = sample_channels({3, 20, 35});
  for (const auto& ch : batch.channels) {
    CMatrix rho = random_density(2, rng);
    CHECK(mutual_information(rho, ch) > -1e-8);
  }
}

TEST_CASE("i_of_channel closed forms") {
  CHECK(i_of_channel(channels::identity(2)) ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(i_of_channel(channels::phase_flip(0.5)) ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(i_of_channel(channels::replacement(maximally_mixed(2))) ==
        doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("state fidelity basics") {
  Rng rng(36);
  for (int trial = 0; trial < 10; ++trial) {
    CMatrix rho = random_density(3, rng);
    CMatrix sigma = random_density(3, rng);
    double f = state_fidelity(rho, sigma);
    CHECK(f > 0.0);
    CHECK(f < 1.0 + 1e-12);
    CHECK(state_fidelity(rho, rho) == doctest::Approx(1.0).epsilon(1e-10));
    // Symmetry.
    CHECK(state_fidelity(sigma, rho) == doctest::Approx(f).epsilon(1e-9));
  }
  // Orthogonal pure states.
  CHECK(state_fidelity(diag2(1.0, 0.0), diag2(0.0, 1.0)) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // Pure vs mixed: F(|0><0|, diag(a, 1-a)) = a.
  CHECK(state_fidelity(diag2(1.0, 0.0), diag2(0.7, 0.3)) ==
        doctest::Approx(0.7).epsilon(1e-10));
}

TEST_CASE("entanglement fidelity of identity against dephasing is 1 - p") {
  for (double p : {0.0, 0.1, 0.25, 0.5, 0.9, 1.0}) {
    double f = entanglement_fidelity(channels::identity(2),
                                     channels::phase_flip(p));
    CHECK(f == doctest::Approx(1.0 - p).epsilon(1e-10));
  }
}

TEST_CASE("entanglement fidelity closed forms and symmetry") {
  CHECK(entanglement_fidelity(channels::identity(2),
                              channels::replacement(maximally_mixed(2))) ==
        doctest::Approx(0.25).epsilon(1e-10));
  SampleBatch batch = sample_channels({2, 6, 37});
  for (const auto& ch : batch.channels) {
    CHECK(entanglement_fidelity(ch, ch) == doctest::Approx(1.0).epsilon(1e-9));
    double ab = entanglement_fidelity(ch, channels::identity(2));
    double ba = entanglement_fidelity(channels::identity(2), ch);
    CHECK(ab == doctest::Approx(ba).epsilon(1e-9));
    CHECK(ab < 1.0 + 1e-12);
  }
  // Distinct channels give fidelity strictly below one.
  CHECK(entanglement_fidelity(channels::identity(2),
                              channels::bit_flip(0.05)) < 1.0 - 1e-3);
}
