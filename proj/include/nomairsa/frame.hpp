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

#include <vector>

#include "nomairsa/rng.hpp"
#include "nomairsa/system_config.hpp"

namespace nomairsa {

/** @brief One user's replicas: slot indices (sorted, distinct) and the
 * power-level index of the replica in each slot (parallel array, 1-based).
 */
struct UserTransmission
{
    int user_id = 0;
    std::vector<int> slots;
    std::vector<int> levels;

    int degree() const { return static_cast<int>(slots.size()); }
};

/** @brief All transmissions of one MAC frame. */
struct FrameInstance
{
    int slot_count = 0;
    std::vector<UserTransmission> users;
};

/** @brief Draw a random frame: each user samples its replica count from the
 * degree distribution, places the replicas on a uniformly random set of
 * distinct slots, and draws an independent uniform power level per replica.
 */
FrameInstance generate_frame(const SystemConfig& config, Xoshiro256ss& rng);

/** @brief Same draw into a reused frame object. The Monte-Carlo loops run
 * millions of frames; reusing the per-user vectors keeps them allocation-free
 * after warmup.
 */
void generate_frame_into(const SystemConfig& config, Xoshiro256ss& rng, FrameInstance& out);

} // namespace nomairsa
