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

#ifndef CAPGAPS_CODING_HPP_
#define CAPGAPS_CODING_HPP_

#include <string>
#include <utility>
#include <vector>

#include "capgaps/channel.hpp"
#include "capgaps/linalg.hpp"

namespace capgaps {

// Encoder/decoder pair acting around n uses of a qubit channel.  The
// model_tag records which resource model the coding was designed for; it
// is metadata only.
struct Coding {
  QChannel encoder;  // 2^k -> 2^n
  QChannel decoder;  // 2^n -> 2^k
  int n = 1;
  int k = 1;
  std::string model_tag = "I";

  Coding(QChannel enc, QChannel dec, int n_qubits, int k_qubits,
         std::string tag = "I");
};

// Stabilizer-style code held as its encoding isometry (2^n x 2^k).
struct StabCode {
  std::string name;
  int n = 1;
  int k = 1;
  CMatrix isometry;
};

// decoder after tensor_pow(ch, n) after encoder.  The total qubit count
// n + k is capped at 7 so the fidelity computation stays desk-sized.
QChannel coded_channel(const Coding& c, const QChannel& ch);

// 1 - F_E(identity on 2^k, coded channel).
double coding_error(const Coding& c, const QChannel& ch);

// 1 - F_E(ch^tensor_k, identity^tensor_k); what a working coding must beat.
double bare_error(const QChannel& ch, int k);

// Knill-Laflamme condition P E_i^dag E_j P = lambda_ij P with P = V V^dag.
// `satisfied` holds iff the maximal entry deviation is at most tol; the
// returned lambda matrix is Hermitian.
std::pair<bool, CMatrix> kl_check(const StabCode& code,
                                  const std::vector<CMatrix>& errors,
                                  double tol = 1e-10);

// Builtin codes: three_qubit_bitflip, three_qubit_phaseflip,
// five_qubit_perfect.
StabCode builtin_code(const std::string& name);

// Coding with syndrome-conditioned recovery for a builtin code.
Coding builtin_coding(const std::string& name);

// Entropy (bits) of the reduced state of `psi` on the `subset` subsystems.
double entanglement_entropy(const CVector& psi, const std::vector<int>& dims,
                            const std::vector<int>& subset);

}  // namespace capgaps

#endif  // CAPGAPS_CODING_HPP_
