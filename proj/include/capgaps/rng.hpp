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

#ifndef CAPGAPS_RNG_HPP_
#define CAPGAPS_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>

namespace capgaps {

// splitmix64 step; used both as a PRNG seeder and as a stream splitter.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives the seed of an independent substream from (root seed, stream id).
// Substreams derived from distinct ids are decorrelated, so work items can
// be processed in any scheduling order without changing their results.
inline std::uint64_t substream_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t s = root ^ (0xd1342543de82ef95ULL * (stream + 1));
  splitmix64(s);
  return splitmix64(s);
}

// Deterministic RNG.  The variate mappings are implemented here rather than
// with std::*_distribution so that identical seeds give identical bits on
// every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Standard normal via Box-Muller; one value per call, cached pair.
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

 private:
  std::mt19937_64 engine_;
  bool have_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace capgaps

#endif  // CAPGAPS_RNG_HPP_
