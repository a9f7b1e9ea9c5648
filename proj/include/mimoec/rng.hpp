// SPDX-License-Identifier: Apache-2.0
//
// mimoec — queueing-constrained throughput analysis for multi-antenna fading links
// Copyright (C) 2026 The mimoec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MIMOEC_RNG_HPP
#define MIMOEC_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace mimoec {

/// Counter-seeded random stream: a (master seed, stream index) pair fully
/// determines the sequence, so per-sample streams are reproducible no
/// matter how samples are distributed over workers. The stream index is
/// folded into the seed through splitmix64 and the draws come from
/// xoshiro256++.
class CounterRng {
  public:
    CounterRng(uint64_t seed, uint64_t stream)
    {
        uint64_t z = splitmix(seed ^ (splitmix(stream + 0x9E3779B97F4A7C15ULL)));
        for (auto &w : s_) {
            z = splitmix(z);
            w = z;
        }
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0)
            s_[0] = 0x9E3779B97F4A7C15ULL;
    }

    uint64_t next_u64()
    {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe under log().
    double uniform_pos() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    /// Standard real Gaussian N(0, 1) via Box-Muller.
    double gauss()
    {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
        const double a = 6.283185307179586476925286766559 * uniform();
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Circularly symmetric complex Gaussian with E|z|^2 = 1.
    std::complex<double> complex_gauss()
    {
        const double r = std::sqrt(-std::log(uniform_pos()));
        const double a = 6.283185307179586476925286766559 * uniform();
        return {r * std::cos(a), r * std::sin(a)};
    }

    static uint64_t splitmix(uint64_t x)
    {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t s_[4];
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace mimoec

#endif
