// Copyright 2026 The quanfuzz developers
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

#ifndef QUANFUZZ_RNG_HPP
#define QUANFUZZ_RNG_HPP

#include <cstdint>
#include <random>

namespace quanfuzz {

/// Seeded random source with a fixed cross-platform draw sequence.
///
/// The uniform/normal conversions are implemented by hand instead of with
/// std::uniform_real_distribution / std::normal_distribution because the
/// standard leaves those unspecified, and identical seeds must replay the
/// identical experiment on any toolchain.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; pairs are cached.
    double normal();

    /// Uniform integer in [0, bound). bound must be nonzero.
    std::size_t below(std::size_t bound) {
        return static_cast<std::size_t>(engine_() % bound);
    }

    /// Stream splitting: an independent seed for substream `stream` of
    /// `seed`. Used to hand every trial/repeat its own generator so that
    /// parallel execution cannot change any result.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

  private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

} // namespace quanfuzz

#endif
