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

#include <array>
#include <cstdint>
#include <vector>

#include "nomairsa/error_floor.hpp"
#include "nomairsa/frame.hpp"
#include "nomairsa/system_config.hpp"

namespace nomairsa {

/** @brief Occurrence counts for one stopping-set shape in one frame.
 *
 * structural counts slot-topology matches alone; blocking additionally
 * requires every slot of the occurrence to carry the members' replicas at
 * one power level (the per-slot power-match event). blocking <= structural.
 */
struct SetCounts
{
    std::uint64_t structural = 0;
    std::uint64_t blocking = 0;
};

struct FrameCensus
{
    SetCounts s1;
    SetCounts s2;
    SetCounts s3;
};

/** @brief Count S1/S2/S3 occurrences in a frame.
 *
 * S1: unordered pairs of degree-2 users with identical slot sets.
 * S2: unordered triples of degree-2 users whose slot pairs form a 3-cycle
 *     over three distinct slots.
 * S3: unordered pairs of degree-3 users with identical slot sets.
 *
 * Counting is purely combinatorial over the transmitted frame (pre-SIC);
 * replicas of outside users sharing the same slots are ignored, matching the
 * independence approximation behind the expected counts.
 */
FrameCensus census(const FrameInstance& frame);

/** @brief census() plus the user ids involved in blocking occurrences,
 * sorted and deduplicated per set.
 */
struct CensusDetail
{
    FrameCensus counts;
    std::array<std::vector<int>, 3> blocking_users; // indexed by StoppingSetId
};

CensusDetail census_detail(const FrameInstance& frame);

/** @brief Expected per-frame occurrence counts for each catalog set.
 *
 * structural is the Poisson parameter beta_nu of the set's balls-into-bins
 * instance; blocking scales it by the power-match probability 1/L^mu.
 */
struct SetExpectation
{
    double structural = 0.0;
    double blocking = 0.0;
};

std::array<SetExpectation, 3> expected_counts(const SystemConfig& config);

} // namespace nomairsa
