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

#include "capgaps/sampling.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace capgaps {

namespace {

constexpr double kRankCutoff = 1e-10;

const char* tool_version() {
#ifdef CAPGAPS_VERSION
  return CAPGAPS_VERSION;
#else
  return "unknown";
#endif
}

}  // namespace

CMatrix haar_isometry(int d, int D, Rng& rng) {
  if (d < 1 || D < d)
    throw std::invalid_argument("haar_isometry: need D >= d >= 1");
  CMatrix g(D, d);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < d; ++j)
      g(i, j) = Complex(rng.gaussian(), rng.gaussian()) / std::sqrt(2.0);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(D, d);
  CMatrix r = qr.matrixQR().topRows(d).triangularView<Eigen::Upper>();
  // Fixing the R diagonal to the positive real axis makes Q unique and the
  // distribution exactly Haar.
  for (int j = 0; j < d; ++j) {
    Complex rjj = r(j, j);
    double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return q;
}

SampleBatch sample_channels(const SampleSpec& spec) {
  if (spec.rank < 1 || spec.rank > 4)
    throw std::invalid_argument("sample_channels: rank must be 1..4");
  if (spec.count < 1)
    throw std::invalid_argument("sample_channels: count must be positive");
  SampleBatch batch;
  batch.spec = spec;
  batch.channels.reserve(spec.count);
  for (int index = 0; index < spec.count; ++index) {
    std::uint64_t stream =
        (static_cast<std::uint64_t>(spec.rank) << 32) |
        static_cast<std::uint64_t>(index);
    Rng rng(substream_seed(spec.seed, stream));
    for (;;) {
      CMatrix v = haar_isometry(2, 2 * spec.rank, rng);
      std::vector<CMatrix> kraus;
      kraus.reserve(spec.rank);
      // Row (o, a) of V holds output index o and environment index a.
      for (int a = 0; a < spec.rank; ++a) {
        CMatrix k(2, 2);
        for (int o = 0; o < 2; ++o)
          for (int i = 0; i < 2; ++i) k(o, i) = v(o * spec.rank + a, i);
        kraus.push_back(std::move(k));
      }
      QChannel ch(2, 2, std::move(kraus));
      Eigen::VectorXd ev = hermitian_eigenvalues(choi_from_kraus(ch).matrix);
      int rank = 0;
      for (int i = 0; i < ev.size(); ++i)
        if (ev(i) > kRankCutoff) ++rank;
      if (rank == spec.rank) {
        batch.channels.push_back(std::move(ch));
        break;
      }
      ++batch.rejected;
    }
  }
  return batch;
}

Descriptors descriptors(const QChannel& ch) {
  AffineRep rep = affine_from_channel(ch);
  return Descriptors{rep.t.norm(), rep.T.norm()};
}

std::string batch_to_json(const SampleBatch& batch) {
  nlohmann::json j;
  j["manifest"] = {{"tool", "capgaps"},
                   {"version", tool_version()},
                   {"rank", batch.spec.rank},
                   {"count", batch.spec.count},
                   {"seed", batch.spec.seed},
                   {"rejected", batch.rejected}};
  nlohmann::json channels = nlohmann::json::array();
  for (const auto& ch : batch.channels)
    channels.push_back(nlohmann::json::parse(channel_to_json(ch)));
  j["channels"] = std::move(channels);
  return j.dump(2) + "\n";
}

SampleBatch batch_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("batch JSON parse error: ") +
                                e.what());
  }
  if (!j.contains("manifest") || !j.contains("channels"))
    throw std::invalid_argument("batch JSON misses manifest/channels");
  SampleBatch batch;
  const auto& m = j["manifest"];
  batch.spec.rank = m.value("rank", 0);
  batch.spec.count = m.value("count", 0);
  batch.spec.seed = m.value("seed", std::uint64_t{0});
  batch.rejected = m.value("rejected", 0);
  for (const auto& entry : j["channels"])
    batch.channels.push_back(channel_from_json(entry.dump()));
  return batch;
}

}  // namespace capgaps
