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

#ifndef CAPGAPS_SAMPLING_HPP_
#define CAPGAPS_SAMPLING_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "capgaps/channel.hpp"
#include "capgaps/rng.hpp"

namespace capgaps {

struct SampleSpec {
  int rank = 2;  // requested Choi rank, 1..4
  int count = 200;
  std::uint64_t seed = 0;
};

struct SampleBatch {
  SampleSpec spec;
  std::vector<QChannel> channels;
  int rejected = 0;  // degenerate draws discarded during sampling
};

// D x d column-isometry (V^dag V = 1_d), Haar-distributed via QR
// orthonormalization of a complex Gaussian matrix with a deterministic
// phase fix.
CMatrix haar_isometry(int d, int D, Rng& rng);

// Random qubit channels of exactly the requested Choi rank.  Channel i is
// drawn from the substream (seed, rank << 32 | i), so batches are
// reproducible independently of scheduling or batch splits.  Draws whose
// effective rank falls below the request (Choi eigenvalue under 1e-10) are
// rejected and redrawn from the same substream.
SampleBatch sample_channels(const SampleSpec& spec);

// Affine descriptors (|t|, ||T||_F) of a qubit channel.
struct Descriptors {
  double t_norm = 0.0;
  double t_frob = 0.0;
};
Descriptors descriptors(const QChannel& ch);

// Batch wire format: {"manifest": {tool, version, rank, count, seed,
// rejected}, "channels": [channel objects]} with each channel in the
// module-level JSON channel schema.
std::string batch_to_json(const SampleBatch& batch);
SampleBatch batch_from_json(const std::string& text);

}  // namespace capgaps

#endif  // CAPGAPS_SAMPLING_HPP_
