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

#include "nomairsa/sic_decoder.hpp"

#include <algorithm>

namespace nomairsa {

namespace {

struct Replica
{
    int user_pos; // index into frame.users
    int user_id;
    double power;
};

// Reused across calls on the same thread to keep the hot loop allocation-free.
struct Workspace
{
    std::vector<std::vector<Replica>> slots;
    std::vector<char> decoded;
};

thread_local Workspace workspace;

void remove_user_from_slot(std::vector<Replica>& slot, int user_pos)
{
    for (std::size_t i = 0; i < slot.size(); ++i) {
        if (slot[i].user_pos == user_pos) {
            slot[i] = slot.back();
            slot.pop_back();
            return;
        }
    }
}

} // namespace

// Runs the peel to its fixed point, leaving decoded flags in the workspace.
// Returns the number of productive passes.
int decode_core(const FrameInstance& frame, const PowerLadder& ladder, Workspace& ws)
{
    const std::size_t slot_count = static_cast<std::size_t>(frame.slot_count);
    if (ws.slots.size() < slot_count)
        ws.slots.resize(slot_count);
    for (std::size_t s = 0; s < slot_count; ++s)
        ws.slots[s].clear();
    ws.decoded.assign(frame.users.size(), 0);

    for (std::size_t pos = 0; pos < frame.users.size(); ++pos) {
        const UserTransmission& user = frame.users[pos];
        for (std::size_t i = 0; i < user.slots.size(); ++i)
            ws.slots[static_cast<std::size_t>(user.slots[i])].push_back(
                {static_cast<int>(pos), user.user_id, ladder.power(user.levels[i])});
    }

    int iterations = 0;
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (std::size_t s = 0; s < slot_count; ++s) {
            std::vector<Replica>& slot = ws.slots[s];
            while (!slot.empty()) {
                // Strongest remaining replica; ties toward the lowest user id.
                std::size_t best = 0;
                double total = slot[0].power;
                for (std::size_t i = 1; i < slot.size(); ++i) {
                    total += slot[i].power;
                    if (slot[i].power > slot[best].power ||
                        (slot[i].power == slot[best].power &&
                         slot[i].user_id < slot[best].user_id))
                        best = i;
                }
                const Replica top = slot[best];
                if (!ladder.decodable(top.power, total - top.power))
                    break;

                ws.decoded[static_cast<std::size_t>(top.user_pos)] = 1;
                for (int user_slot : frame.users[static_cast<std::size_t>(top.user_pos)].slots)
                    remove_user_from_slot(ws.slots[static_cast<std::size_t>(user_slot)],
                                          top.user_pos);
                progressed = true;
            }
        }
        if (progressed)
            ++iterations;
    }
    return iterations;
}

DecodeOutcome sic_decode(const FrameInstance& frame, const PowerLadder& ladder)
{
    Workspace& ws = workspace;
    DecodeOutcome outcome;
    outcome.iterations = decode_core(frame, ladder, ws);

    for (std::size_t pos = 0; pos < frame.users.size(); ++pos) {
        if (ws.decoded[pos])
            outcome.decoded.push_back(frame.users[pos].user_id);
        else
            outcome.residual.push_back(frame.users[pos].user_id);
    }
    std::sort(outcome.decoded.begin(), outcome.decoded.end());
    std::sort(outcome.residual.begin(), outcome.residual.end());
    return outcome;
}

int sic_residual_count(const FrameInstance& frame, const PowerLadder& ladder)
{
    Workspace& ws = workspace;
    decode_core(frame, ladder, ws);
    int residual = 0;
    for (char flag : ws.decoded)
        residual += flag == 0;
    return residual;
}

} // namespace nomairsa
