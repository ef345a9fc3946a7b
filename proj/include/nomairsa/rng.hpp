/*
   Copyright 2026 The noma-irsa Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>

namespace nomairsa {

/** @brief splitmix64 step; used for seeding and stream derivation. */
inline std::uint64_t splitmix64(std::uint64_t& state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/** @brief xoshiro256** generator with explicit, platform-independent draws.
 *
 * All sampling helpers are hand-rolled (no std::..._distribution) so that a
 * given seed produces the same sequence on every platform and compiler.
 */
class Xoshiro256ss
{
public:
    explicit Xoshiro256ss(std::uint64_t seed)
    {
        std::uint64_t sm = seed;
        for (auto& word : s_)
            word = splitmix64(sm);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0)
            s_[0] = 1;
    }

    /** @brief Independent stream for one Monte-Carlo frame.
     *
     * Streams are a pure function of (master seed, frame index), so results
     * do not depend on which worker processes the frame.
     */
    static Xoshiro256ss for_stream(std::uint64_t master_seed, std::uint64_t stream_index)
    {
        std::uint64_t mix = master_seed ^ (0xd1342543de82ef95ULL * (stream_index + 1));
        return Xoshiro256ss(splitmix64(mix));
    }

    std::uint64_t next()
    {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;

        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);

        return result;
    }

    /** @brief Uniform double in [0, 1) with 53 bits of randomness. */
    double uniform01()
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /** @brief Unbiased uniform integer in [0, bound). Requires bound >= 1. */
    std::uint32_t below(std::uint32_t bound)
    {
        if (bound <= 1)
            return 0;
        // Bitmask rejection keeps the draw exactly uniform.
        std::uint32_t mask = bound - 1;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        for (;;) {
            std::uint32_t candidate = static_cast<std::uint32_t>(next() >> 32) & mask;
            if (candidate < bound)
                return candidate;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k)
    {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

/** @brief Deterministic sub-seed for grid points, worker lanes, etc. */
inline std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index)
{
    std::uint64_t mix = master_seed ^ (0x2545f4914f6cdd1dULL * (index + 1));
    return splitmix64(mix);
}

} // namespace nomairsa
