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

#include "capgaps/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace capgaps {

namespace {

constexpr double kCptpTol = 1e-8;
constexpr double kRankCutoff = 1e-10;
constexpr double kJsonCompletenessTol = 1e-6;

CMatrix kraus_sum(const std::vector<CMatrix>& kraus, int d_in) {
  CMatrix m = CMatrix::Zero(d_in, d_in);
  for (const auto& k : kraus) m += k.adjoint() * k;
  return m;
}

void check_density(const CMatrix& rho, int d) {
  if (rho.rows() != d || rho.cols() != d)
    throw std::invalid_argument("density matrix has wrong dimension");
  if (hermiticity_defect(rho) > kCptpTol)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > kCptpTol ||
      std::abs(rho.trace().imag()) > kCptpTol)
    throw std::invalid_argument("density matrix trace is not 1");
  Eigen::VectorXd ev = hermitian_eigenvalues(rho);
  if (ev.minCoeff() < -kCptpTol)
    throw std::invalid_argument("density matrix is not positive semidefinite");
}

}  // namespace

QChannel::QChannel(int in_dim, int out_dim, std::vector<CMatrix> ops)
    : d_in(in_dim), d_out(out_dim), kraus(std::move(ops)) {
  if (d_in < 1 || d_out < 1)
    throw std::invalid_argument("channel dimensions must be positive");
  if (kraus.empty()) throw std::invalid_argument("channel needs Kraus operators");
  for (const auto& k : kraus) {
    if (k.rows() != d_out || k.cols() != d_in)
      throw std::invalid_argument("Kraus operator has wrong shape");
  }
  CMatrix m = kraus_sum(kraus, d_in);
  double defect = (m - identity_matrix(d_in)).cwiseAbs().maxCoeff();
  if (defect > kCptpTol)
    throw std::invalid_argument("Kraus operators are not trace preserving");
}

CMatrix detail::apply_checked(const QChannel& ch, const CMatrix& rho) {
  check_density(rho, ch.d_in);
  return apply_unchecked(ch, rho);
}

CMatrix apply_unchecked(const QChannel& ch, const CMatrix& rho) {
  CMatrix out = CMatrix::Zero(ch.d_out, ch.d_out);
  for (const auto& k : ch.kraus) out += k * rho * k.adjoint();
  return out;
}

ChoiMatrix choi_from_kraus(const QChannel& ch) {
  // omega[(a,i),(b,j)] = (1/d_in) sum_m K_m(a,i) conj(K_m(b,j)); each Kraus
  // operator contributes a rank-one term through its row-major vectorization.
  const int d = ch.d_in * ch.d_out;
  CMatrix omega = CMatrix::Zero(d, d);
  for (const auto& k : ch.kraus) {
    CVector v(d);
    for (int a = 0; a < ch.d_out; ++a)
      for (int i = 0; i < ch.d_in; ++i) v(a * ch.d_in + i) = k(a, i);
    omega += v * v.adjoint();
  }
  omega /= static_cast<double>(ch.d_in);
  return ChoiMatrix{ch.d_in, ch.d_out, std::move(omega)};
}

QChannel kraus_from_choi(const ChoiMatrix& c) {
  const int d = c.d_in * c.d_out;
  if (c.matrix.rows() != d || c.matrix.cols() != d)
    throw std::invalid_argument("Choi matrix has wrong dimension");
  HermitianSpectrum s = hermitian_eig(c.matrix);
  if (s.eigenvalues.minCoeff() < -kCptpTol)
    throw std::invalid_argument("Choi matrix is not positive semidefinite");
  CMatrix marginal =
      partial_trace(c.matrix, {c.d_out, c.d_in}, {1});  // trace out the output
  double drift =
      (marginal - maximally_mixed(c.d_in)).cwiseAbs().maxCoeff();
  if (drift > kCptpTol)
    throw std::invalid_argument("Choi input marginal is not maximally mixed");
  std::vector<CMatrix> kraus;
  for (int m = 0; m < d; ++m) {
    if (s.eigenvalues(m) <= kRankCutoff) continue;
    double scale = std::sqrt(s.eigenvalues(m) * c.d_in);
    CMatrix k(c.d_out, c.d_in);
    for (int a = 0; a < c.d_out; ++a)
      for (int i = 0; i < c.d_in; ++i)
        k(a, i) = scale * s.eigenvectors(a * c.d_in + i, m);
    kraus.push_back(std::move(k));
  }
  return QChannel(c.d_in, c.d_out, std::move(kraus));
}

int channel_rank(const QChannel& ch) {
  Eigen::VectorXd ev = hermitian_eigenvalues(choi_from_kraus(ch).matrix);
  int rank = 0;
  for (int i = 0; i < ev.size(); ++i)
    if (ev(i) > kRankCutoff) ++rank;
  return rank;
}

QChannel complementary(const QChannel& ch) {
  // Environment basis indexed by Kraus order: (Kc_a)[i, b] = K_i[a, b].
  const int r = static_cast<int>(ch.kraus.size());
  std::vector<CMatrix> comp;
  comp.reserve(ch.d_out);
  for (int a = 0; a < ch.d_out; ++a) {
    CMatrix k(r, ch.d_in);
    for (int i = 0; i < r; ++i)
      for (int b = 0; b < ch.d_in; ++b) k(i, b) = ch.kraus[i](a, b);
    comp.push_back(std::move(k));
  }
  return QChannel(ch.d_in, r, std::move(comp));
}

QChannel compose(const QChannel& a, const QChannel& b) {
  if (b.d_out != a.d_in)
    throw std::invalid_argument("compose: inner dimensions do not match");
  std::vector<CMatrix> kraus;
  kraus.reserve(a.kraus.size() * b.kraus.size());
  for (const auto& ka : a.kraus)
    for (const auto& kb : b.kraus) kraus.push_back(ka * kb);
  return QChannel(b.d_in, a.d_out, std::move(kraus));
}

QChannel tensor_pow(const QChannel& ch, int n) {
  if (n < 1) throw std::invalid_argument("tensor_pow: n must be positive");
  constexpr int kDimCap = 128;  // 2^7
  QChannel result = ch;
  for (int step = 1; step < n; ++step) {
    if (result.d_in * ch.d_in > kDimCap || result.d_out * ch.d_out > kDimCap)
      throw std::invalid_argument("tensor_pow: dimension cap exceeded");
    std::vector<CMatrix> kraus;
    kraus.reserve(result.kraus.size() * ch.kraus.size());
    for (const auto& ka : result.kraus)
      for (const auto& kb : ch.kraus) kraus.push_back(tensor(ka, kb));
    result = QChannel(result.d_in * ch.d_in, result.d_out * ch.d_out,
                      std::move(kraus));
  }
  return result;
}

AffineRep affine_from_channel(const QChannel& ch) {
  if (ch.d_in != 2 || ch.d_out != 2)
    throw std::invalid_argument("affine form requires a qubit channel");
  AffineRep rep;
  CMatrix out_mixed = apply_unchecked(ch, maximally_mixed(2));
  for (int k = 1; k <= 3; ++k) {
    rep.t(k - 1) = (pauli(k) * out_mixed).trace().real();
    for (int l = 1; l <= 3; ++l) {
      CMatrix out = apply_unchecked(ch, pauli(l));
      rep.T(k - 1, l - 1) = 0.5 * (pauli(k) * out).trace().real();
    }
  }
  return rep;
}

ChoiMatrix choi_of_identity(int d) {
  return choi_from_kraus(channels::identity(d));
}

namespace channels {

QChannel identity(int d) {
  return QChannel(d, d, {identity_matrix(d)});
}

QChannel unitary(const CMatrix& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("unitary: not square");
  double defect =
      (u.adjoint() * u - identity_matrix(static_cast<int>(u.rows())))
          .cwiseAbs()
          .maxCoeff();
  if (defect > kCptpTol) throw std::invalid_argument("unitary: U^dag U != 1");
  return QChannel(static_cast<int>(u.rows()), static_cast<int>(u.rows()), {u});
}

QChannel bit_flip(double p) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("bit_flip: p outside [0,1]");
  std::vector<CMatrix> kraus;
  if (p < 1.0) kraus.push_back(std::sqrt(1.0 - p) * pauli(0));
  if (p > 0.0) kraus.push_back(std::sqrt(p) * pauli(1));
  return QChannel(2, 2, std::move(kraus));
}

QChannel phase_flip(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("phase_flip: p outside [0,1]");
  std::vector<CMatrix> kraus;
  if (p < 1.0) kraus.push_back(std::sqrt(1.0 - p) * pauli(0));
  if (p > 0.0) kraus.push_back(std::sqrt(p) * pauli(3));
  return QChannel(2, 2, std::move(kraus));
}

QChannel depolarizing(double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("depolarizing: p outside [0,1]");
  std::vector<CMatrix> kraus;
  double w0 = 1.0 - 3.0 * p / 4.0;
  if (w0 > 0.0) kraus.push_back(std::sqrt(w0) * pauli(0));
  if (p > 0.0) {
    for (int k = 1; k <= 3; ++k) kraus.push_back(std::sqrt(p / 4.0) * pauli(k));
  }
  return QChannel(2, 2, std::move(kraus));
}

QChannel amplitude_damping(double gamma) {
  if (gamma < 0.0 || gamma > 1.0)
    throw std::invalid_argument("amplitude_damping: gamma outside [0,1]");
  CMatrix k0 = CMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  std::vector<CMatrix> kraus = {k0};
  if (gamma > 0.0) {
    CMatrix k1 = CMatrix::Zero(2, 2);
    k1(0, 1) = std::sqrt(gamma);
    kraus.push_back(k1);
  }
  return QChannel(2, 2, std::move(kraus));
}

QChannel replacement(const CMatrix& sigma) {
  check_density(sigma, static_cast<int>(sigma.rows()));
  const int d = static_cast<int>(sigma.rows());
  HermitianSpectrum s = hermitian_eig(sigma);
  // Kraus: sqrt(lambda_k) |v_k><i| over spectral index k and input basis i.
  std::vector<CMatrix> kraus;
  for (int k = 0; k < d; ++k) {
    if (s.eigenvalues(k) <= kRankCutoff) continue;
    double w = std::sqrt(s.eigenvalues(k));
    for (int i = 0; i < d; ++i) {
      CMatrix op = CMatrix::Zero(d, d);
      op.col(i) = w * s.eigenvectors.col(k);
      kraus.push_back(std::move(op));
    }
  }
  return QChannel(d, d, std::move(kraus));
}

QChannel from_name(const std::string& name) {
  auto colon = name.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("channel name must look like family:param");
  std::string family = name.substr(0, colon);
  double param = 0.0;
  try {
    param = std::stod(name.substr(colon + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("channel parameter is not a number");
  }
  if (family == "bitflip") return bit_flip(param);
  if (family == "dephasing") return phase_flip(param);
  if (family == "depolarizing") return depolarizing(param);
  if (family == "amplitude_damping") return amplitude_damping(param);
  throw std::invalid_argument("unknown channel family: " + family);
}

}  // namespace channels

std::string channel_to_json(const QChannel& ch) {
  nlohmann::json j;
  j["d_in"] = ch.d_in;
  j["d_out"] = ch.d_out;
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& k : ch.kraus) {
    nlohmann::json entries = nlohmann::json::array();
    for (int a = 0; a < k.rows(); ++a)
      for (int b = 0; b < k.cols(); ++b)
        entries.push_back({k(a, b).real(), k(a, b).imag()});
    ops.push_back(std::move(entries));
  }
  j["kraus"] = std::move(ops);
  return j.dump();
}

QChannel channel_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("channel JSON parse error: ") +
                                e.what());
  }
  if (!j.contains("d_in") || !j.contains("d_out") || !j.contains("kraus"))
    throw std::invalid_argument("channel JSON misses d_in/d_out/kraus");
  int d_in = j["d_in"].get<int>();
  int d_out = j["d_out"].get<int>();
  if (d_in < 1 || d_out < 1)
    throw std::invalid_argument("channel JSON has invalid dimensions");
  std::vector<CMatrix> kraus;
  for (const auto& entries : j["kraus"]) {
    if (static_cast<int>(entries.size()) != d_in * d_out)
      throw std::invalid_argument("channel JSON Kraus entry count mismatch");
    CMatrix k(d_out, d_in);
    int idx = 0;
    for (int a = 0; a < d_out; ++a)
      for (int b = 0; b < d_in; ++b) {
        const auto& pair = entries[idx++];
        if (pair.size() != 2)
          throw std::invalid_argument("channel JSON entries must be [re, im]");
        k(a, b) = Complex(pair[0].get<double>(), pair[1].get<double>());
      }
    kraus.push_back(std::move(k));
  }
  if (kraus.empty()) throw std::invalid_argument("channel JSON has no Kraus");
  CMatrix m = kraus_sum(kraus, d_in);
  double defect = (m - identity_matrix(d_in)).cwiseAbs().maxCoeff();
  if (defect > kJsonCompletenessTol)
    throw std::invalid_argument("channel JSON violates completeness");
  if (defect > kCptpTol) {
    // Small drift within the wire tolerance: renormalize K_i -> K_i M^{-1/2}.
    HermitianSpectrum s = hermitian_eig(m);
    CMatrix inv_sqrt = CMatrix::Zero(d_in, d_in);
    for (int i = 0; i < d_in; ++i) {
      inv_sqrt += (1.0 / std::sqrt(s.eigenvalues(i))) *
                  s.eigenvectors.col(i) * s.eigenvectors.col(i).adjoint();
    }
    for (auto& k : kraus) k = k * inv_sqrt;
  }
  return QChannel(d_in, d_out, std::move(kraus));
}

}  // namespace capgaps
