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

#include "capgaps/entropic.hpp"

#include <cmath>
#include <stdexcept>

namespace capgaps {

namespace {

constexpr double kDensityTol = 1e-8;
constexpr double kNullSupportTol = 1e-12;

void check_density(const CMatrix& rho) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("density matrix must be square");
  if (hermiticity_defect(rho) > kDensityTol)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(rho.trace().real() - 1.0) > kDensityTol ||
      std::abs(rho.trace().imag()) > kDensityTol)
    throw std::invalid_argument("density matrix trace is not 1");
  if (hermitian_eigenvalues(rho).minCoeff() < -kDensityTol)
    throw std::invalid_argument("density matrix is not positive semidefinite");
}

double entropy_of_eigenvalues(const Eigen::VectorXd& ev) {
  double total = 0.0;
  for (int i = 0; i < ev.size(); ++i) total += std::max(ev(i), 0.0);
  if (total <= 0.0) throw std::invalid_argument("state has no spectral weight");
  double h = 0.0;
  for (int i = 0; i < ev.size(); ++i) {
    double p = std::max(ev(i), 0.0) / total;
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

}  // namespace

double entropy(const CMatrix& rho) {
  check_density(rho);
  return entropy_of_eigenvalues(hermitian_eigenvalues(rho));
}

double entropy_unchecked(const CMatrix& rho) {
  return entropy_of_eigenvalues(hermitian_eigenvalues(rho));
}

RelativeEntropy relative_entropy(const CMatrix& rho, const CMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw std::invalid_argument("relative_entropy: dimension mismatch");
  check_density(rho);
  check_density(sigma);
  HermitianSpectrum s = hermitian_eig(sigma);
  RelativeEntropy result;
  double cross = 0.0;  // tr rho log2 sigma over the support of sigma
  for (int j = 0; j < s.eigenvalues.size(); ++j) {
    double q = s.eigenvalues(j);
    double w = (s.eigenvectors.col(j).adjoint() * rho * s.eigenvectors.col(j))
                   .value()
                   .real();
    if (q < kNullSupportTol) {
      if (w > kNullSupportTol) {
        result.infinite = true;
        return result;
      }
      continue;
    }
    cross += w * std::log2(q);
  }
  Eigen::VectorXd p = hermitian_eigenvalues(rho);
  double self = 0.0;  // tr rho log2 rho
  for (int i = 0; i < p.size(); ++i)
    if (p(i) > 0.0) self += p(i) * std::log2(p(i));
  result.value = self - cross;
  return result;
}

double coherent_information(const CMatrix& rho, const QChannel& ch) {
  if (rho.rows() != ch.d_in || rho.cols() != ch.d_in)
    throw std::invalid_argument("coherent_information: dimension mismatch");
  check_density(rho);
  QChannel comp = complementary(ch);
  return entropy_unchecked(apply_unchecked(ch, rho)) -
         entropy_unchecked(apply_unchecked(comp, rho));
}

double mutual_information(const CMatrix& rho, const QChannel& ch) {
  if (rho.rows() != ch.d_in || rho.cols() != ch.d_in)
    throw std::invalid_argument("mutual_information: dimension mismatch");
  check_density(rho);
  QChannel comp = complementary(ch);
  return entropy_unchecked(rho) +
         entropy_unchecked(apply_unchecked(ch, rho)) -
         entropy_unchecked(apply_unchecked(comp, rho));
}

double i_of_channel(const QChannel& ch) {
  return coherent_information(maximally_mixed(ch.d_in), ch);
}

double state_fidelity(const CMatrix& rho, const CMatrix& sigma) {
  if (rho.rows() != sigma.rows() || rho.cols() != sigma.cols())
    throw std::invalid_argument("state_fidelity: dimension mismatch");
  CMatrix root = sqrt_psd(rho);
  Eigen::VectorXd ev = hermitian_eigenvalues(root * sigma * root);
  // Eigenvalues that are exactly zero in exact arithmetic come back as
  // O(1e-16) noise; sqrt would amplify each to O(1e-8), so clip relative to
  // the largest eigenvalue before taking roots.
  double cut = ev.size() ? std::max(ev.maxCoeff(), 0.0) * 1e-13 : 0.0;
  double sum = 0.0;
  for (int i = 0; i < ev.size(); ++i)
    if (ev(i) > cut) sum += std::sqrt(ev(i));
  return sum * sum;
}

double entanglement_fidelity(const QChannel& a, const QChannel& b) {
  if (a.d_in != b.d_in || a.d_out != b.d_out)
    throw std::invalid_argument("entanglement_fidelity: dimension mismatch");
  return state_fidelity(choi_from_kraus(a).matrix, choi_from_kraus(b).matrix);
}

}  // namespace capgaps
