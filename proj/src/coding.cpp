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

#include "capgaps/coding.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "capgaps/entropic.hpp"

namespace capgaps {

namespace {

constexpr int kQubitCap = 7;  // total qubits in a fidelity computation

int pow2(int n) { return 1 << n; }

// sigma_k on one site of an n-qubit register (site 0 is the leftmost, i.e.
// most significant, tensor factor).
CMatrix pauli_on(int n, int site, int k) {
  CMatrix op = site == 0 ? pauli(k) : identity_matrix(2);
  for (int s = 1; s < n; ++s)
    op = tensor(op, s == site ? pauli(k) : identity_matrix(2));
  return op;
}

// Tensor product of single-qubit Paulis given as a string over IXYZ.
CMatrix pauli_string(const std::string& s) {
  auto factor = [](char c) -> const CMatrix& {
    switch (c) {
      case 'I': return pauli(0);
      case 'X': return pauli(1);
      case 'Y': return pauli(2);
      case 'Z': return pauli(3);
      default: throw std::invalid_argument("pauli_string: bad character");
    }
  };
  CMatrix op = factor(s[0]);
  for (std::size_t i = 1; i < s.size(); ++i) op = tensor(op, factor(s[i]));
  return op;
}

CMatrix hadamard_n(int n) {
  CMatrix h(2, 2);
  double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  CMatrix op = h;
  for (int s = 1; s < n; ++s) op = tensor(op, h);
  return op;
}

void check_isometry(const CMatrix& v) {
  const int k = static_cast<int>(v.cols());
  double defect =
      (v.adjoint() * v - identity_matrix(k)).cwiseAbs().maxCoeff();
  if (defect > 1e-12)
    throw std::invalid_argument("encoding isometry violates V^dag V = 1");
}

CMatrix repetition_isometry() {
  CMatrix v = CMatrix::Zero(8, 2);
  v(0, 0) = 1.0;  // |000>
  v(7, 1) = 1.0;  // |111>
  return v;
}

CMatrix five_qubit_isometry() {
  const char* generators[] = {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};
  CMatrix proj = identity_matrix(32);
  for (const char* g : generators)
    proj = proj * 0.5 * (identity_matrix(32) + pauli_string(g));
  CVector zero_l = proj * CVector::Unit(32, 0);
  zero_l.normalize();
  CVector one_l = pauli_string("XXXXX") * zero_l;
  CMatrix v(32, 2);
  v.col(0) = zero_l;
  v.col(1) = one_l;
  return v;
}

// Syndrome-conditioned recovery: Kraus operators V^dag E_s over the
// correctable set {E_s}, which partitions the space into orthogonal
// deflections of the code space.
QChannel recovery_channel(const CMatrix& v,
                          const std::vector<CMatrix>& correctable) {
  std::vector<CMatrix> kraus;
  kraus.reserve(correctable.size());
  for (const auto& e : correctable) kraus.push_back(v.adjoint() * e.adjoint());
  return QChannel(static_cast<int>(v.rows()), static_cast<int>(v.cols()),
                  std::move(kraus));
}

std::vector<CMatrix> single_site_paulis(int n, int kind) {
  std::vector<CMatrix> ops = {identity_matrix(pow2(n))};
  for (int site = 0; site < n; ++site) ops.push_back(pauli_on(n, site, kind));
  return ops;
}

}  // namespace

Coding::Coding(QChannel enc, QChannel dec, int n_qubits, int k_qubits,
               std::string tag)
    : encoder(std::move(enc)),
      decoder(std::move(dec)),
      n(n_qubits),
      k(k_qubits),
      model_tag(std::move(tag)) {
  if (k < 1 || n < k) throw std::invalid_argument("coding needs 1 <= k <= n");
  if (encoder.d_in != pow2(k) || encoder.d_out != pow2(n))
    throw std::invalid_argument("encoder dimensions do not match (n, k)");
  if (decoder.d_in != pow2(n) || decoder.d_out != pow2(k))
    throw std::invalid_argument("decoder dimensions do not match (n, k)");
}

QChannel coded_channel(const Coding& c, const QChannel& ch) {
  if (ch.d_in != 2 || ch.d_out != 2)
    throw std::invalid_argument("coded_channel: qubit channels only");
  if (c.n + c.k > kQubitCap)
    throw std::invalid_argument("coded_channel: qubit cap exceeded");
  return compose(c.decoder, compose(tensor_pow(ch, c.n), c.encoder));
}

double coding_error(const Coding& c, const QChannel& ch) {
  QChannel coded = coded_channel(c, ch);
  return 1.0 - entanglement_fidelity(channels::identity(pow2(c.k)), coded);
}

double bare_error(const QChannel& ch, int k) {
  if (ch.d_in != 2 || ch.d_out != 2)
    throw std::invalid_argument("bare_error: qubit channels only");
  if (k < 1 || 2 * k > kQubitCap)
    throw std::invalid_argument("bare_error: qubit cap exceeded");
  return 1.0 -
         entanglement_fidelity(tensor_pow(ch, k), channels::identity(pow2(k)));
}

std::pair<bool, CMatrix> kl_check(const StabCode& code,
                                  const std::vector<CMatrix>& errors,
                                  double tol) {
  const int dim = pow2(code.n);
  const int k_dim = pow2(code.k);
  const int r = static_cast<int>(errors.size());
  if (r == 0) throw std::invalid_argument("kl_check: empty error list");
  for (const auto& e : errors)
    if (e.rows() != dim || e.cols() != dim)
      throw std::invalid_argument("kl_check: error operator dimension");
  CMatrix lambda(r, r);
  double deviation = 0.0;
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      // P E_i^dag E_j P = lambda_ij P reduces to V^dag E_i^dag E_j V being
      // a multiple of the identity on the logical space.
      CMatrix m = code.isometry.adjoint() * errors[i].adjoint() * errors[j] *
                  code.isometry;
      Complex l = m.trace() / static_cast<double>(k_dim);
      lambda(i, j) = l;
      deviation = std::max(
          deviation,
          (m - l * identity_matrix(k_dim)).cwiseAbs().maxCoeff());
    }
  }
  return {deviation <= tol, lambda};
}

StabCode builtin_code(const std::string& name) {
  StabCode code;
  code.name = name;
  if (name == "three_qubit_bitflip") {
    code.n = 3;
    code.k = 1;
    code.isometry = repetition_isometry();
  } else if (name == "three_qubit_phaseflip") {
    code.n = 3;
    code.k = 1;
    code.isometry = hadamard_n(3) * repetition_isometry();
  } else if (name == "five_qubit_perfect") {
    code.n = 5;
    code.k = 1;
    code.isometry = five_qubit_isometry();
  } else {
    throw std::invalid_argument("unknown builtin code: " + name);
  }
  check_isometry(code.isometry);
  return code;
}

Coding builtin_coding(const std::string& name) {
  StabCode code = builtin_code(name);
  std::vector<CMatrix> correctable;
  if (name == "three_qubit_bitflip") {
    correctable = single_site_paulis(3, 1);
  } else if (name == "three_qubit_phaseflip") {
    correctable = single_site_paulis(3, 3);
  } else {
    correctable = {identity_matrix(32)};
    for (int kind : {1, 2, 3})
      for (int site = 0; site < 5; ++site)
        correctable.push_back(pauli_on(5, site, kind));
  }
  QChannel encoder(pow2(code.k), pow2(code.n), {code.isometry});
  QChannel decoder = recovery_channel(code.isometry, correctable);
  return Coding(std::move(encoder), std::move(decoder), code.n, code.k, "I");
}

double entanglement_entropy(const CVector& psi, const std::vector<int>& dims,
                            const std::vector<int>& subset) {
  long total = 1;
  for (int d : dims) total *= d;
  if (psi.size() != total)
    throw std::invalid_argument("entanglement_entropy: dims mismatch");
  if (std::abs(psi.norm() - 1.0) > 1e-8)
    throw std::invalid_argument("entanglement_entropy: state not normalized");
  CMatrix rho = psi * psi.adjoint();
  return entropy_unchecked(partial_trace(rho, dims, subset));
}

}  // namespace capgaps
