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

#include <capgaps/coding.hpp>
#include <capgaps/entropic.hpp>
#include <capgaps/rng.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "test_util.hpp"

using namespace capgaps;

namespace {

// Independent Pauli-string builder used to cross-check the code
// constructions (site 0 is the most significant factor).
CMatrix test_pauli_string(const std::string& s) {
  CMatrix op(1, 1);
  op(0, 0) = 1.0;
  for (char c : s) {
    int k = c == 'I' ? 0 : c == 'X' ? 1 : c == 'Y' ? 2 : 3;
    op = tensor(op, pauli(k));
  }
  return op;
}

// Brute-force oracle for the repetition code under independent X flips:
// enumerate all flip patterns, decode by majority vote, and accumulate the
// probability that the net logical action is the identity.
double majority_failure_probability(double p) {
  double fail = 0.0;
  for (int mask = 0; mask < 8; ++mask) {
    int flips = ((mask >> 0) & 1) + ((mask >> 1) & 1) + ((mask >> 2) & 1);
    double weight = 1.0;
    for (int site = 0; site < 3; ++site)
      weight *= ((mask >> site) & 1) ? p : (1.0 - p);
    if (flips >= 2) fail += weight;  // majority vote flips the logical qubit
  }
  return fail;
}

std::vector<CMatrix> all_single_site_paulis(int n) {
  std::vector<CMatrix> errors;
  CMatrix id = identity_matrix(1 << n);
  errors.push_back(id);
  for (int kind = 1; kind <= 3; ++kind) {
    for (int site = 0; site < n; ++site) {
      std::string s(n, 'I');
      s[site] = kind == 1 ? 'X' : kind == 2 ? 'Y' : 'Z';
      errors.push_back(test_pauli_string(s));
    }
  }
  return errors;
}

double choi_distance(const QChannel& a, const QChannel& b) {
  return frobenius_distance(choi_from_kraus(a).matrix,
                            choi_from_kraus(b).matrix);
}

}  // namespace

TEST_CASE("builtin codes expose valid isometries") {
  for (const char* name :
       {"three_qubit_bitflip", "three_qubit_phaseflip", "five_qubit_perfect"}) {
    StabCode code = builtin_code(name);
    CHECK(code.k == 1);
    REQUIRE(code.isometry.cols() == 2);
    REQUIRE(code.isometry.rows() == (1 << code.n));
    CHECK(frobenius_distance(code.isometry.adjoint() * code.isometry,
                             identity_matrix(2)) < 1e-12);
  }
  CHECK_THROWS_AS(builtin_code("nine_qubit_shor"), std::invalid_argument);
}

TEST_CASE("repetition code maps the computational basis to GHZ-like words") {
  StabCode code = builtin_code("three_qubit_bitflip");
  CHECK(std::abs(code.isometry(0, 0) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(code.isometry(7, 1) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(code.isometry.cwiseAbs().sum() == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("phase flip code words live in the plus/minus basis") {
  StabCode code = builtin_code("three_qubit_phaseflip");
  double r = 1.0 / std::sqrt(8.0);
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(code.isometry(i, 0) - Complex(r, 0.0)) < 1e-12);
    int parity = ((i >> 0) & 1) ^ ((i >> 1) & 1) ^ ((i >> 2) & 1);
    double sign = parity ? -r : r;
    CHECK(std::abs(code.isometry(i, 1) - Complex(sign, 0.0)) < 1e-12);
  }
}

TEST_CASE("five qubit code words are fixed by the stabilizer generators") {
  StabCode code = builtin_code("five_qubit_perfect");
  for (const char* g : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}) {
    CMatrix gen = test_pauli_string(g);
    CHECK(frobenius_distance(gen * code.isometry, code.isometry) < 1e-12);
  }
  // The logical X is the transversal XXXXX and exchanges the code words.
  CMatrix lx = test_pauli_string("XXXXX");
  CHECK((lx * code.isometry.col(0) - code.isometry.col(1)).norm() < 1e-12);
}

TEST_CASE("coding constructor validates dimensions") {
  QChannel enc(2, 8, {builtin_code("three_qubit_bitflip").isometry});
  QChannel dec = channels::identity(2);
  CHECK_THROWS_AS(Coding(enc, dec, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(Coding(channels::identity(2), channels::identity(2), 1, 2),
                  std::invalid_argument);
  CHECK_NOTHROW(Coding(channels::identity(2), channels::identity(2), 1, 1));
}

TEST_CASE("trivial coding reproduces the channel") {
  Coding trivial(channels::identity(2), channels::identity(2), 1, 1);
  QChannel ch = channels::amplitude_damping(0.3);
  CHECK(choi_distance(coded_channel(trivial, ch), ch) < 1e-12);
  CHECK(coding_error(trivial, channels::bit_flip(0.1)) ==
        doctest::Approx(0.1).epsilon(1e-9));
}

TEST_CASE("coded_channel enforces the qubit cap") {
  // n = 7, k = 1 exceeds the 7-qubit fidelity cap.  Encoder appends six
  // |0> qubits; decoder traces them out.
  const int big = 128;
  CMatrix v = CMatrix::Zero(big, 2);
  v(0, 0) = 1.0;
  v(big / 2, 1) = 1.0;  // |1000000>
  QChannel encoder(2, big, {v});
  std::vector<CMatrix> dec_kraus;
  for (int j = 0; j < big / 2; ++j) {
    CMatrix k = CMatrix::Zero(2, big);
    k(0, j) = 1.0;
    k(1, big / 2 + j) = 1.0;
    dec_kraus.push_back(k);
  }
  QChannel decoder(big, 2, dec_kraus);
  Coding wide(encoder, decoder, 7, 1);
  CHECK_THROWS_AS(coded_channel(wide, channels::identity(2)),
                  std::invalid_argument);
}

TEST_CASE("noiseless channel gives zero coding error") {
  Coding coding = builtin_coding("three_qubit_bitflip");
  CHECK(coding_error(coding, channels::identity(2)) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("repetition code against X flips matches the enumeration oracle") {
  Coding coding = builtin_coding("three_qubit_bitflip");
  for (double p : {0.05, 0.1, 0.2, 0.37}) {
    double err = coding_error(coding, channels::bit_flip(p));
    CHECK(err == doctest::Approx(majority_failure_probability(p)).epsilon(1e-9));
  }
  // The headline point: p = 0.1 encodes to 0.028 and beats the bare qubit.
  double err = coding_error(coding, channels::bit_flip(0.1));
  CHECK(err == doctest::Approx(0.028).epsilon(1e-9));
  CHECK(bare_error(channels::bit_flip(0.1), 1) ==
        doctest::Approx(0.1).epsilon(1e-9));
  CHECK(err < 0.1);
}

TEST_CASE("phase flip code corrects Z noise and fails against X noise") {
  Coding coding = builtin_coding("three_qubit_phaseflip");
  double p = 0.1;
  CHECK(coding_error(coding, channels::phase_flip(p)) ==
        doctest::Approx(majority_failure_probability(p)).epsilon(1e-9));
  // Under X noise the syndromes stay silent and every odd flip pattern acts
  // as a logical Z: error = 3p(1-p)^2 + p^3, worse than the bare qubit.
  double odd = 3.0 * p * (1.0 - p) * (1.0 - p) + p * p * p;
  double err = coding_error(coding, channels::bit_flip(p));
  CHECK(err == doctest::Approx(odd).epsilon(1e-9));
  CHECK(err > bare_error(channels::bit_flip(p), 1));
}

TEST_CASE("five qubit code suppresses depolarizing noise") {
  Coding coding = builtin_coding("five_qubit_perfect");
  double p = 0.05;
  double coded = coding_error(coding, channels::depolarizing(p));
  double bare = bare_error(channels::depolarizing(p), 1);
  CHECK(bare == doctest::Approx(0.75 * p).epsilon(1e-9));
  CHECK(coded < bare);
  // All 15 single-site Paulis are corrected, so the coded error is governed
  // by the multi-error mass 1 - q^5 - 15(p/4)q^4 = 0.01306 with q = 1-3p/4,
  // minus the small share of two-error products that land in the stabilizer.
  CHECK(coded > 0.010);
  CHECK(coded < 0.015);
}

TEST_CASE("bare_error closed forms and cap") {
  CHECK(bare_error(channels::identity(2), 1) ==
        doctest::Approx(0.0).epsilon(1e-12));
  for (double p : {0.1, 0.3}) {
    CHECK(bare_error(channels::phase_flip(p), 1) ==
          doctest::Approx(p).epsilon(1e-9));
    CHECK(bare_error(channels::bit_flip(p), 2) ==
          doctest::Approx(2.0 * p - p * p).epsilon(1e-9));
  }
  CHECK_THROWS_AS(bare_error(channels::identity(2), 4),
                  std::invalid_argument);
}

TEST_CASE("kl_check passes for the five qubit code on single-site paulis") {
  StabCode code = builtin_code("five_qubit_perfect");
  auto errors = all_single_site_paulis(5);
  REQUIRE(errors.size() == 16);
  auto [ok, lambda] = kl_check(code, errors, 1e-10);
  CHECK(ok);
  REQUIRE(lambda.rows() == 16);
  CHECK(hermiticity_defect(lambda) < 1e-10);
  // Non-degenerate code: lambda is the identity on this error set.
  CHECK(frobenius_distance(lambda, identity_matrix(16)) < 1e-9);
}

TEST_CASE("kl_check flags uncorrectable error sets") {
  StabCode rep = builtin_code("three_qubit_bitflip");
  // Z on the first qubit acts as a logical Z inside the code space.
  auto [ok_z, lambda_z] =
      kl_check(rep, {identity_matrix(8), test_pauli_string("ZII")});
  CHECK_FALSE(ok_z);
  // The designed error set of the repetition code passes.
  auto [ok_x, lambda_x] = kl_check(
      rep, {identity_matrix(8), test_pauli_string("XII"),
            test_pauli_string("IXI"), test_pauli_string("IIX")});
  CHECK(ok_x);
  // Unitary errors always give lambda_ii = 1, and distinct syndromes kill
  // the off-diagonal entries, so lambda is the identity here too.
  CHECK(frobenius_distance(lambda_x, identity_matrix(4)) < 1e-9);
  // A logical operator of the five qubit code violates the condition.
  StabCode five = builtin_code("five_qubit_perfect");
  auto [ok_l, lambda_l] =
      kl_check(five, {identity_matrix(32), test_pauli_string("ZZZZZ")});
  CHECK_FALSE(ok_l);
}

TEST_CASE("kl_check validates inputs and handles the singleton set") {
  StabCode code = builtin_code("three_qubit_bitflip");
  CHECK_THROWS_AS(kl_check(code, {}), std::invalid_argument);
  CHECK_THROWS_AS(kl_check(code, {identity_matrix(4)}),
                  std::invalid_argument);
  auto [ok, lambda] = kl_check(code, {identity_matrix(8)});
  CHECK(ok);
  REQUIRE(lambda.rows() == 1);
  CHECK(std::abs(lambda(0, 0) - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("kl_check is invariant under a global unitary frame change") {
  StabCode code = builtin_code("five_qubit_perfect");
  auto errors = all_single_site_paulis(5);
  Rng rng(71);
  CMatrix u = testutil::random_unitary(32, rng);
  StabCode rotated = code;
  rotated.isometry = u * code.isometry;
  std::vector<CMatrix> rotated_errors;
  for (const auto& e : errors) rotated_errors.push_back(u * e * u.adjoint());
  auto [ok, lambda] = kl_check(rotated, rotated_errors, 1e-8);
  CHECK(ok);
}

TEST_CASE("entanglement_entropy on product, bell, ghz and w states") {
  CVector product = CVector::Zero(4);
  product(0) = 1.0;
  CHECK(entanglement_entropy(product, {2, 2}, {0}) ==
        doctest::Approx(0.0).epsilon(1e-12));

  CVector bell = CVector::Zero(4);
  bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
  CHECK(entanglement_entropy(bell, {2, 2}, {0}) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entanglement_entropy(bell, {2, 2}, {1}) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CVector ghz = CVector::Zero(8);
  ghz(0) = ghz(7) = 1.0 / std::sqrt(2.0);
  CHECK(entanglement_entropy(ghz, {2, 2, 2}, {1}) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CVector w = CVector::Zero(8);
  w(1) = w(2) = w(4) = 1.0 / std::sqrt(3.0);
  double h2_third = -std::log2(1.0 / 3.0) / 3.0 -
                    (2.0 / 3.0) * std::log2(2.0 / 3.0);
  CHECK(entanglement_entropy(w, {2, 2, 2}, {2}) ==
        doctest::Approx(h2_third).epsilon(1e-10));
}

TEST_CASE("entanglement_entropy validates inputs") {
  CVector v = CVector::Zero(4);
  v(0) = 1.0;
  CHECK_THROWS_AS(entanglement_entropy(v, {2, 3}, {0}),
                  std::invalid_argument);
  CVector unnormalized = CVector::Ones(4);
  CHECK_THROWS_AS(entanglement_entropy(unnormalized, {2, 2}, {0}),
                  std::invalid_argument);
}
