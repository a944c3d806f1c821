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

#ifndef CAPGAPS_CHANNEL_HPP_
#define CAPGAPS_CHANNEL_HPP_

#include <concepts>
#include <string>
#include <type_traits>
#include <vector>

#include "capgaps/linalg.hpp"

namespace capgaps {

//=============================================================================
// Channel representations
//=============================================================================

// CPTP map held as Kraus operators.  Construction verifies trace
// preservation, sum_i K_i^dag K_i = 1, to 1e-8 (max-entry norm).
struct QChannel {
  int d_in = 0;
  int d_out = 0;
  std::vector<CMatrix> kraus;

  QChannel(int in_dim, int out_dim, std::vector<CMatrix> ops);
};

// Choi state of a channel, trace-one convention.  The composite index order
// is (out, in): row (a, i) refers to output basis a and input basis i.
struct ChoiMatrix {
  int d_in = 0;
  int d_out = 0;
  CMatrix matrix;
};

// Qubit channel in affine (Bloch) form: v -> T v + t.
struct AffineRep {
  Eigen::Vector3d t;
  Eigen::Matrix3d T;
};

//=============================================================================
// Operations
//=============================================================================

namespace detail {
CMatrix apply_checked(const QChannel& ch, const CMatrix& rho);
}  // namespace detail

// Applies the channel to a density matrix (validated to 1e-8).  Shaped as a
// constrained forwarding template so it outranks std::apply, which argument-
// dependent lookup drags in through Eigen's std::complex scalar type.
template <typename Ch, typename State>
  requires std::same_as<std::remove_cvref_t<Ch>, QChannel> &&
           std::convertible_to<State&&, CMatrix>
CMatrix apply(Ch&& ch, State&& rho) {
  return detail::apply_checked(ch, rho);
}

// Same action without the density-matrix validation; for optimizer loops
// where the input is trusted by construction.
CMatrix apply_unchecked(const QChannel& ch, const CMatrix& rho);

ChoiMatrix choi_from_kraus(const QChannel& ch);

// Spectral Kraus extraction; keeps eigenvalues above the 1e-10 cutoff, so
// the Kraus count equals the Choi rank.  Throws on a non-PSD matrix or a
// wrong input marginal.
QChannel kraus_from_choi(const ChoiMatrix& c);

// Number of Choi eigenvalues above 1e-10.
int channel_rank(const QChannel& ch);

// Complementary channel: input to the environment of a Stinespring
// dilation, with the environment basis indexed by Kraus order.
QChannel complementary(const QChannel& ch);

// compose(a, b) = a after b.
QChannel compose(const QChannel& a, const QChannel& b);

// n-fold tensor power; throws once either side exceeds dimension 2^7.
QChannel tensor_pow(const QChannel& ch, int n);

// Affine representation of a qubit channel.
AffineRep affine_from_channel(const QChannel& ch);

// Trace-one Choi of the identity channel restricted to the comparison
// dimension; convenience used by fidelity and coding error computations.
ChoiMatrix choi_of_identity(int d);

//=============================================================================
// Channel families
//=============================================================================

namespace channels {

QChannel identity(int d);
QChannel unitary(const CMatrix& u);
// (1-p) rho + p X rho X
QChannel bit_flip(double p);
// (1-p) rho + p Z rho Z; p = 1/2 is the completely dephasing channel.
QChannel phase_flip(double p);
// (1-p) rho + p pi_2; p = 1 is the completely depolarizing channel with
// uniform Pauli Kraus at weight 1/2.
QChannel depolarizing(double p);
QChannel amplitude_damping(double gamma);
// rho -> sigma for every input.
QChannel replacement(const CMatrix& sigma);

// Parses "family:param" names used by the CLI, e.g. "bitflip:0.1",
// "dephasing:0.2", "depolarizing:1", "amplitude_damping:0.4".
QChannel from_name(const std::string& name);

}  // namespace channels

//=============================================================================
// JSON wire format
//=============================================================================

// {"d_in": int, "d_out": int, "kraus": [[[re, im], ...row-major...], ...]}
// Reading validates completeness at 1e-6 and, when the drift is within that
// bound, renormalizes by the symmetric correction K_i -> K_i M^{-1/2}.
std::string channel_to_json(const QChannel& ch);
QChannel channel_from_json(const std::string& text);

}  // namespace capgaps

#endif  // CAPGAPS_CHANNEL_HPP_
