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

#include "nomairsa/frame.hpp"

#include <algorithm>

namespace nomairsa {

namespace {

// Floyd's subset sampling: uniform over the C(n, r) r-subsets of [0, n).
void sample_slots(int n, int r, Xoshiro256ss& rng, std::vector<int>& out)
{
    out.clear();
    for (int j = n - r; j < n; ++j) {
        const int pick = static_cast<int>(rng.below(static_cast<std::uint32_t>(j) + 1));
        if (std::find(out.begin(), out.end(), pick) != out.end())
            out.push_back(j);
        else
            out.push_back(pick);
    }
    std::sort(out.begin(), out.end());
}

} // namespace

FrameInstance generate_frame(const SystemConfig& config, Xoshiro256ss& rng)
{
    FrameInstance frame;
    generate_frame_into(config, rng, frame);
    return frame;
}

void generate_frame_into(const SystemConfig& config, Xoshiro256ss& rng, FrameInstance& out)
{
    out.slot_count = config.slots();
    out.users.resize(static_cast<std::size_t>(config.users()));

    const int level_count = config.ladder().level_count();
    for (int id = 0; id < config.users(); ++id) {
        UserTransmission& user = out.users[static_cast<std::size_t>(id)];
        user.user_id = id;
        const int degree = config.dist().sample(rng);
        sample_slots(config.slots(), degree, rng, user.slots);
        user.levels.resize(user.slots.size());
        for (auto& level : user.levels)
            level = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(level_count)));
    }
}

} // namespace nomairsa
