// Copyright 2026 The ludus authors
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

#ifndef LUDUS_RNG_HPP
#define LUDUS_RNG_HPP

#include <cstdint>
#include <vector>

namespace ludus {

/// Seeded splitmix64 generator. std::uniform_* distributions are not
/// reproducible across standard libraries, so all sampling goes through
/// the helpers below to keep outputs byte-identical for a given seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n), n >= 1. Rejection-free modulo is fine here: the
  /// bias is < 2^-53 for desk-scale n and determinism is what matters.
  uint64_t next_below(uint64_t n) { return next_u64() % n; }

  int next_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_below(static_cast<uint64_t>(hi - lo + 1)));
  }

  /// Uniform double in [0, 1).
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Fisher-Yates permutation of {0,..,n-1}.
  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (int i = n - 1; i > 0; --i) {
      int j = static_cast<int>(next_below(static_cast<uint64_t>(i) + 1));
      std::swap(p[i], p[j]);
    }
    return p;
  }

  /// Random probability vector (normalized positive uniforms).
  std::vector<double> distribution(int n) {
    std::vector<double> p(n);
    double total = 0;
    for (int i = 0; i < n; ++i) {
      p[i] = next_double() + 1e-9;
      total += p[i];
    }
    for (int i = 0; i < n; ++i) p[i] /= total;
    return p;
  }

 private:
  uint64_t state_;
};

}  // namespace ludus

#endif  // LUDUS_RNG_HPP
