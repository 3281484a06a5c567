/*
 * Copyright 2026 The judgekit Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Seedable, splittable random source for the simulation.
//
// Every stream is keyed by (master seed, stream id, phase) and seeded through
// a SplitMix64 mix, so streams are independent of the order and thread on
// which they are consumed.

#ifndef JUDGEKIT_RNG_H_
#define JUDGEKIT_RNG_H_

#include <cstdint>
#include <random>

namespace judgekit {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  using Engine = std::mt19937_64;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t phase = 0) {
    const std::uint64_t a = splitmix64(seed);
    const std::uint64_t b = splitmix64(a ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
    const std::uint64_t c = splitmix64(b ^ splitmix64(phase + 0x8cb92ba72f3d8dd7ULL));
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                      static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
    engine_.seed(seq);
  }

  // Independent child stream; does not advance this generator.
  Rng split(std::uint64_t stream, std::uint64_t phase = 0) const {
    return Rng(splitmix64(base_seed_marker()), stream, phase);
  }

  // Uniform on [lo, hi); returns lo when lo == hi.
  double uniform(double lo, double hi) {
    if (lo == hi) return lo;
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  std::int64_t binomial(std::int64_t trials, double p) {
    if (trials <= 0 || p <= 0.0) return 0;
    if (p >= 1.0) return trials;
    return std::binomial_distribution<std::int64_t>(trials, p)(engine_);
  }

  Engine& engine() { return engine_; }

 private:
  std::uint64_t base_seed_marker() const {
    Engine copy = engine_;
    return copy();
  }

  Engine engine_;
};

}  // namespace judgekit

#endif  // JUDGEKIT_RNG_H_
