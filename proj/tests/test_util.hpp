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

// Test-only oracles, written independently of the library code paths they
// check: a brute-force occupancy law, a naive order-following SIC sweep, and
// the classic single-power peeling decoder.

#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "nomairsa/frame.hpp"
#include "nomairsa/power_ladder.hpp"
#include "nomairsa/rng.hpp"

namespace nomairsa::testing {

// Distribution of Y_t by enumerating every bins^balls assignment.
inline std::vector<double> exhaustive_occupancy_pmf(int balls, int bins, int t)
{
    std::vector<double> pmf(static_cast<std::size_t>(balls / t) + 1, 0.0);
    std::vector<int> assignment(static_cast<std::size_t>(balls), 0);
    std::vector<int> occupancy(static_cast<std::size_t>(bins), 0);

    double total = 1.0;
    for (int b = 0; b < balls; ++b)
        total *= bins;

    for (;;) {
        std::fill(occupancy.begin(), occupancy.end(), 0);
        for (int bin : assignment)
            ++occupancy[static_cast<std::size_t>(bin)];
        int y = 0;
        for (int count : occupancy)
            if (count == t)
                ++y;
        pmf[static_cast<std::size_t>(y)] += 1.0 / total;

        int position = 0;
        while (position < balls) {
            if (++assignment[static_cast<std::size_t>(position)] < bins)
                break;
            assignment[static_cast<std::size_t>(position)] = 0;
            ++position;
        }
        if (position == balls)
            break;
    }
    return pmf;
}

// Reference SIC sweep that visits slots in the supplied order and recomputes
// everything from scratch at each step. Returns the sorted residual ids.
inline std::vector<int> ordered_sic_residual(const FrameInstance& frame,
                                             const PowerLadder& ladder,
                                             std::span<const int> order)
{
    std::vector<char> decoded(frame.users.size(), 0);
    const double threshold = ladder.gamma() * (1.0 - 1e-9);

    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (int slot : order) {
            for (;;) {
                int best_pos = -1;
                double best_power = 0.0;
                double total = 0.0;
                for (std::size_t pos = 0; pos < frame.users.size(); ++pos) {
                    if (decoded[pos])
                        continue;
                    const UserTransmission& user = frame.users[pos];
                    for (std::size_t i = 0; i < user.slots.size(); ++i) {
                        if (user.slots[i] != slot)
                            continue;
                        const double power = ladder.power(user.levels[i]);
                        total += power;
                        if (power > best_power) {
                            best_power = power;
                            best_pos = static_cast<int>(pos);
                        }
                    }
                }
                if (best_pos < 0)
                    break;
                if (best_power / (1.0 + total - best_power) < threshold)
                    break;
                decoded[static_cast<std::size_t>(best_pos)] = 1;
                progressed = true;
            }
        }
    }

    std::vector<int> residual;
    for (std::size_t pos = 0; pos < frame.users.size(); ++pos)
        if (!decoded[pos])
            residual.push_back(frame.users[pos].user_id);
    std::sort(residual.begin(), residual.end());
    return residual;
}

// Classic repetition-slotted-ALOHA peeling: decode any slot holding exactly
// one remaining replica, remove that user everywhere, repeat.
inline std::vector<int> peeling_residual(const FrameInstance& frame)
{
    std::vector<char> decoded(frame.users.size(), 0);
    std::vector<int> replicas(static_cast<std::size_t>(frame.slot_count), 0);

    bool progressed = true;
    while (progressed) {
        progressed = false;
        std::fill(replicas.begin(), replicas.end(), 0);
        for (std::size_t pos = 0; pos < frame.users.size(); ++pos)
            if (!decoded[pos])
                for (int slot : frame.users[pos].slots)
                    ++replicas[static_cast<std::size_t>(slot)];
        for (std::size_t pos = 0; pos < frame.users.size(); ++pos) {
            if (decoded[pos])
                continue;
            for (int slot : frame.users[pos].slots) {
                if (replicas[static_cast<std::size_t>(slot)] == 1) {
                    decoded[pos] = 1;
                    progressed = true;
                    break;
                }
            }
            if (progressed)
                break; // recompute counts after each decode
        }
    }

    std::vector<int> residual;
    for (std::size_t pos = 0; pos < frame.users.size(); ++pos)
        if (!decoded[pos])
            residual.push_back(frame.users[pos].user_id);
    std::sort(residual.begin(), residual.end());
    return residual;
}

inline UserTransmission make_user(int id, std::vector<int> slots, std::vector<int> levels)
{
    return UserTransmission{id, std::move(slots), std::move(levels)};
}

inline std::vector<int> identity_order(int slots)
{
    std::vector<int> order(static_cast<std::size_t>(slots));
    for (int i = 0; i < slots; ++i)
        order[static_cast<std::size_t>(i)] = i;
    return order;
}

inline void shuffle_order(std::vector<int>& order, Xoshiro256ss& rng)
{
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng.below(static_cast<std::uint32_t>(i))]);
}

} // namespace nomairsa::testing
