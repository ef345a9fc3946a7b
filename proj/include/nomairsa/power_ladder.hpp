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

#include <span>
#include <vector>

namespace nomairsa {

/** @brief SINR of a replica against summed same-slot interference.
 *
 * Noise power is normalized to 1, so the ratio is
 * target_power / (1 + interference_sum).
 */
inline double sinr(double target_power, double interference_sum)
{
    return target_power / (1.0 + interference_sum);
}

/** @brief Same, over the multiset of interfering replica powers. */
inline double sinr(double target_power, std::span<const double> interferer_powers)
{
    double interference = 0.0;
    for (double power : interferer_powers)
        interference += power;
    return sinr(target_power, interference);
}

/** @brief The descending power levels p_1 > ... > p_L of a power-domain
 * non-orthogonal ladder.
 *
 * Levels satisfy p_k = gamma * (gamma + 1)^(L - k), equivalently
 * p_k = gamma * (1 + sum of all weaker levels). This guarantees that a slot
 * whose remaining replicas sit at pairwise-distinct levels can be resolved
 * top-down: after each cancellation the strongest survivor meets the
 * threshold with SINR exactly gamma.
 */
class PowerLadder
{
public:
    /** @brief Build from a threshold in dB and a level count L >= 1.
     *
     * gamma is converted to linear scale internally; L = 1 degenerates to a
     * single level p_1 = gamma (a plain collision channel, since equal
     * powers are never separable).
     */
    static PowerLadder from_db(double gamma_db, int level_count);

    /** @brief Linear SINR threshold. */
    double gamma() const { return gamma_; }

    int level_count() const { return static_cast<int>(levels_.size()); }

    /** @brief Received power of level k, k in [1, L], level 1 strongest. */
    double power(int level) const { return levels_[static_cast<std::size_t>(level) - 1]; }

    std::span<const double> levels() const { return levels_; }

    /** @brief True when a replica at target_power is decodable against the
     * given interference sum.
     *
     * Uses the threshold with a 1e-9 relative slack: the ladder is built so
     * that fully-loaded distinct-level slots sit exactly at the threshold,
     * and the slack absorbs floating-point rounding in that equality chain.
     */
    bool decodable(double target_power, double interference_sum) const
    {
        return sinr(target_power, interference_sum) >= decode_floor_;
    }

private:
    PowerLadder(double gamma, std::vector<double> levels);

    double gamma_ = 0.0;
    double decode_floor_ = 0.0;
    std::vector<double> levels_;
};

} // namespace nomairsa
