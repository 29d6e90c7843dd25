// Copyright 2026 The edrsim Authors
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

#ifndef EDRSIM_RNG_HPP
#define EDRSIM_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace edrsim {

/// splitmix64 finalizer; the building block of the subseed derivation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Subseed derivation: fold each index into the seed with one splitmix64
/// round per component. Subseeds depend only on the indices, never on the
/// execution schedule, so parallel and serial sweeps draw identical streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t state_index,
                                 std::uint64_t t_index, std::uint64_t trial,
                                 std::uint64_t stream) {
  std::uint64_t s = splitmix64(master ^ 0x6A09E667F3BCC909ULL);
  s = splitmix64(s ^ state_index);
  s = splitmix64(s ^ t_index);
  s = splitmix64(s ^ trial);
  s = splitmix64(s ^ stream);
  return s;
}

/// Deterministic standard-normal stream: mt19937_64 uniforms fed through
/// Box-Muller. The variate sequence is a pure function of the seed.
class NormalSampler {
 public:
  explicit NormalSampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in (0, 1), 53-bit resolution, endpoints excluded.
  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace edrsim

#endif  // EDRSIM_RNG_HPP
