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

#include "capgaps/linalg.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace capgaps {

namespace {

constexpr double kHermitianTol = 1e-10;

void require_hermitian(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("hermitian_eig: matrix is not square");
  }
  if (hermiticity_defect(m) > kHermitianTol) {
    throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
  }
}

}  // namespace

HermitianSpectrum hermitian_eig(const CMatrix& m) {
  require_hermitian(m);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver((m + m.adjoint()) * 0.5);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  }
  const auto n = m.rows();
  HermitianSpectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  // Eigen sorts ascending; flip to descending and fix each column's phase.
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = n - 1 - k;
    out.eigenvalues(k) = solver.eigenvalues()(src);
    CVector col = solver.eigenvectors().col(src);
    Eigen::Index pivot = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double a = std::abs(col(i));
      if (a > best + 1e-14) {
        best = a;
        pivot = i;
      }
    }
    if (best > 0.0) {
      col *= std::conj(col(pivot)) / std::abs(col(pivot));
    }
    out.eigenvectors.col(k) = col;
  }
  return out;
}

Eigen::VectorXd hermitian_eigenvalues(const CMatrix& m) {
  require_hermitian(m);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver;
  solver.compute((m + m.adjoint()) * 0.5, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eigenvalues: solver failed");
  }
  return solver.eigenvalues().reverse();
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, const std::vector<int>& dims,
                      const std::vector<int>& keep) {
  const int n = static_cast<int>(dims.size());
  long total = 1;
  for (int d : dims) {
    if (d <= 0) throw std::invalid_argument("partial_trace: nonpositive dim");
    total *= d;
  }
  if (m.rows() != m.cols() || m.rows() != total) {
    throw std::invalid_argument("partial_trace: dims do not match matrix");
  }
  std::vector<char> kept(n, 0);
  for (int s : keep) {
    if (s < 0 || s >= n) {
      throw std::invalid_argument("partial_trace: keep index out of range");
    }
    kept[s] = 1;
  }

  // Row-major strides of the composite index.
  std::vector<long> stride(n, 1);
  for (int s = n - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  long keep_dim = 1, trace_dim = 1;
  std::vector<int> keep_sub, trace_sub;
  for (int s = 0; s < n; ++s) {
    if (kept[s]) {
      keep_dim *= dims[s];
      keep_sub.push_back(s);
    } else {
      trace_dim *= dims[s];
      trace_sub.push_back(s);
    }
  }

  // Offset tables: position of each reduced / traced multi-index inside the
  // full composite index.
  auto offsets = [&](const std::vector<int>& subs, long count) {
    std::vector<long> table(count, 0);
    for (long idx = 0; idx < count; ++idx) {
      long rem = idx;
      for (int s = static_cast<int>(subs.size()) - 1; s >= 0; --s) {
        const int sub = subs[s];
        table[idx] += (rem % dims[sub]) * stride[sub];
        rem /= dims[sub];
      }
    }
    return table;
  };
  const std::vector<long> keep_off = offsets(keep_sub, keep_dim);
  const std::vector<long> trace_off = offsets(trace_sub, trace_dim);

  CMatrix out = CMatrix::Zero(keep_dim, keep_dim);
  for (long a = 0; a < keep_dim; ++a) {
    for (long b = 0; b < keep_dim; ++b) {
      Complex acc(0.0, 0.0);
      for (long t = 0; t < trace_dim; ++t) {
        acc += m(keep_off[a] + trace_off[t], keep_off[b] + trace_off[t]);
      }
      out(a, b) = acc;
    }
  }
  return out;
}

CMatrix sqrt_psd(const CMatrix& m) {
  const HermitianSpectrum spec = hermitian_eig(m);
  const auto n = m.rows();
  CMatrix out = CMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double lambda = spec.eigenvalues(k);
    if (lambda < -1e-8) {
      throw std::invalid_argument("sqrt_psd: matrix is not PSD");
    }
    if (lambda <= 0.0) continue;
    out += std::sqrt(lambda) * spec.eigenvectors.col(k) *
           spec.eigenvectors.col(k).adjoint();
  }
  return out;
}

CMatrix identity_matrix(int d) { return CMatrix::Identity(d, d); }

const CMatrix& pauli(int k) {
  static const CMatrix table[4] = {
      (CMatrix(2, 2) << 1, 0, 0, 1).finished(),
      (CMatrix(2, 2) << 0, 1, 1, 0).finished(),
      (CMatrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished(),
      (CMatrix(2, 2) << 1, 0, 0, -1).finished(),
  };
  if (k < 0 || k > 3) throw std::invalid_argument("pauli: index must be 0..3");
  return table[k];
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  return (a - b).norm();
}

double hermiticity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

CMatrix maximally_mixed(int d) {
  return CMatrix::Identity(d, d) / static_cast<double>(d);
}

}  // namespace capgaps
