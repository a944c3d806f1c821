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

#ifndef CAPGAPS_ENTROPIC_HPP_
#define CAPGAPS_ENTROPIC_HPP_

#include "capgaps/channel.hpp"
#include "capgaps/linalg.hpp"

namespace capgaps {

// All entropic quantities are in bits (log base 2).

// Relative entropy with an explicit infinity flag; `value` is meaningful
// only when `infinite` is false.
struct RelativeEntropy {
  double value = 0.0;
  bool infinite = false;
};

// Von Neumann entropy of a density matrix (validated to 1e-8).  Eigenvalues
// are clipped at zero and renormalized, so the result stays within
// [0, log2 d + 1e-10] even for inputs with small trace drift.
double entropy(const CMatrix& rho);

// Entropy without the density validation; for hot loops whose inputs are
// channel outputs (valid by construction).
double entropy_unchecked(const CMatrix& rho);

// R(rho||sigma) = tr rho log rho - tr rho log sigma.  Flagged infinite when
// rho puts weight on the null support of sigma (eigenvalues below 1e-12).
RelativeEntropy relative_entropy(const CMatrix& rho, const CMatrix& sigma);

// I_c(rho, ch) = H(ch(rho)) - H(ch^c(rho)), the coherent information.
double coherent_information(const CMatrix& rho, const QChannel& ch);

// J(rho, ch) = H(rho) + I_c(rho, ch), the quantum mutual information.
double mutual_information(const CMatrix& rho, const QChannel& ch);

// I(ch) = I_c at the maximally mixed input.
double i_of_channel(const QChannel& ch);

// Uhlmann fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 between states.
double state_fidelity(const CMatrix& rho, const CMatrix& sigma);

// Fidelity between the Choi states of two channels.
double entanglement_fidelity(const QChannel& a, const QChannel& b);

}  // namespace capgaps

#endif  // CAPGAPS_ENTROPIC_HPP_
