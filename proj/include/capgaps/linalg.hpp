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

#ifndef CAPGAPS_LINALG_HPP_
#define CAPGAPS_LINALG_HPP_

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace capgaps {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Index convention, fixed project-wide: matrices are addressed (row, col);
// flattened composite indices are row-major with the LEFT tensor factor as
// the major index.  tensor(a, b) therefore places a's indices on the major
// side, and all Choi/Kraus vec/unvec reshapes follow the same rule.

//=============================================================================
// Spectral data
//=============================================================================

// Eigenvalues sorted descending; eigenvectors are the matching orthonormal
// columns.  Each column's largest-magnitude entry is rotated to the positive
// real axis so the output is deterministic.
struct HermitianSpectrum {
  Eigen::VectorXd eigenvalues;
  CMatrix eigenvectors;
};

// Full eigendecomposition of a Hermitian matrix.
// Throws std::invalid_argument if m is not square or deviates from
// Hermiticity by more than 1e-10 (max-entry norm).
HermitianSpectrum hermitian_eig(const CMatrix& m);

// Eigenvalues only (descending), same preconditions as hermitian_eig.
Eigen::VectorXd hermitian_eigenvalues(const CMatrix& m);

//=============================================================================
// Tensor algebra
//=============================================================================

// Kronecker product with a's index major, b's minor.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

// Reduces m, living on the composite space with subsystem dimensions `dims`,
// to the subsystems listed in `keep` (0-based, kept in ascending order).
// Throws if the product of dims does not match the matrix dimension.
CMatrix partial_trace(const CMatrix& m, const std::vector<int>& dims,
                      const std::vector<int>& keep);

// PSD square root by spectral mapping.  Eigenvalues in [-1e-10, 0] are
// clipped to zero; anything below -1e-8 is rejected as not PSD.
CMatrix sqrt_psd(const CMatrix& m);

//=============================================================================
// Small helpers shared across modules
//=============================================================================

CMatrix identity_matrix(int d);

// Pauli matrices; index 0 is the identity, 1..3 are X, Y, Z.
const CMatrix& pauli(int k);

inline CMatrix dagger(const CMatrix& m) { return m.adjoint(); }

double frobenius_distance(const CMatrix& a, const CMatrix& b);

// Largest absolute deviation from Hermiticity, max-entry norm.
double hermiticity_defect(const CMatrix& m);

// Maximally mixed state of dimension d.
CMatrix maximally_mixed(int d);

}  // namespace capgaps

#endif  // CAPGAPS_LINALG_HPP_
