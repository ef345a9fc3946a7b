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

#include <stdexcept>

#include "nomairsa/degree_distribution.hpp"
#include "nomairsa/power_ladder.hpp"

namespace nomairsa {

/** @brief One frame-synchronous scenario: n slots, m active users, a degree
 * distribution and a power ladder. Immutable after construction.
 */
class SystemConfig
{
public:
    SystemConfig(int slots, int users, DegreeDistribution dist, PowerLadder ladder)
      : slots_(slots)
      , users_(users)
      , dist_(std::move(dist))
      , ladder_(std::move(ladder))
    {
        if (slots_ < 1)
            throw std::invalid_argument("system config: slot count must be >= 1");
        if (users_ < 0)
            throw std::invalid_argument("system config: user count must be >= 0");
        if (dist_.max_degree() > slots_)
            throw std::invalid_argument(
                "system config: max replica count exceeds slots per frame");
    }

    int slots() const { return slots_; }
    int users() const { return users_; }
    const DegreeDistribution& dist() const { return dist_; }
    const PowerLadder& ladder() const { return ladder_; }

    /** @brief Channel load G = m / n in packets per slot. */
    double load() const { return static_cast<double>(users_) / slots_; }

private:
    int slots_;
    int users_;
    DegreeDistribution dist_;
    PowerLadder ladder_;
};

} // namespace nomairsa
