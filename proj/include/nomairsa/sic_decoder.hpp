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

#include "nomairsa/frame.hpp"
#include "nomairsa/power_ladder.hpp"

namespace nomairsa {

/** @brief Result of running the intra-frame successive interference
 * cancellation decoder to its fixed point.
 *
 * decoded and residual partition the frame's user ids; iterations counts the
 * frame passes that made progress (bounded by the user count, since every
 * productive pass decodes at least one user).
 */
struct DecodeOutcome
{
    std::vector<int> decoded;  // sorted user ids
    std::vector<int> residual; // sorted user ids
    int iterations = 0;
};

/** @brief Peel a frame with power-domain SIC until no replica is decodable.
 *
 * Per slot, only the strongest remaining replica is tested: any weaker
 * replica in the same slot sees at least the stronger one as interference,
 * so its SINR is never higher. When the strongest replica meets the
 * threshold, its user is decoded and all of that user's replicas are removed
 * frame-wide; the slot is then retried, which realizes the top-down
 * intra-slot cancellation chain. Passes repeat until a full pass makes no
 * progress. The fixed point does not depend on the slot visiting order
 * (cancellation only removes interference, so decodability is monotone).
 *
 * Ties at the strongest power are broken toward the lowest user id; for
 * thresholds >= 1 (0 dB and up) tied replicas are never decodable anyway.
 */
DecodeOutcome sic_decode(const FrameInstance& frame, const PowerLadder& ladder);

/** @brief Number of users left undecoded; the loss-counting fast path
 * (same fixed point as sic_decode, no outcome materialization).
 */
int sic_residual_count(const FrameInstance& frame, const PowerLadder& ladder);

} // namespace nomairsa
