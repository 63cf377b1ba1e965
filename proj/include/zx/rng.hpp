// Copyright 2026 The zxcheck developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZXCHECK_RNG_HPP
#define ZXCHECK_RNG_HPP

#include <cstdint>
#include <numbers>
#include <random>
#include <string_view>

namespace zx {

/**
 * Deterministic random source. Maps mt19937_64 output to doubles and
 * ranges directly instead of going through std distributions, whose
 * results vary between standard-library implementations.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /** Uniform in [0, 1). */
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /** Uniform angle in [0, 2*pi). */
  double angle() { return uniform() * 2.0 * std::numbers::pi; }

  /** Uniform in {0, ..., n-1}; n must be positive. */
  std::size_t below(std::size_t n) { return gen_() % n; }

  /** Uniform in {lo, ..., hi} inclusive. */
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::size_t>(hi - lo + 1)));
  }

  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 gen_;
};

/** FNV-1a, used to derive per-rule seeds from rule names. */
inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace zx

#endif  // ZXCHECK_RNG_HPP
