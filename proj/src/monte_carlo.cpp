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

#include "nomairsa/monte_carlo.hpp"

#include <cmath>

#include "nomairsa/sic_decoder.hpp"

namespace nomairsa {

Interval wilson_interval(std::uint64_t events, std::uint64_t trials, double z)
{
    if (trials == 0)
        return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(events) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    Interval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
    // The interval is exact at the extremes; keep it free of rounding dust.
    if (events == 0)
        ci.low = 0.0;
    if (events == trials)
        ci.high = 1.0;
    return ci;
}

namespace {

struct LossStats
{
    std::uint64_t losses = 0;

    LossStats& operator+=(const LossStats& other)
    {
        losses += other.losses;
        return *this;
    }

    std::uint64_t stop_events() const { return losses; }
};

} // namespace

PlrEstimate estimate_plr(const SystemConfig& config,
                         const StoppingRule& stop,
                         std::uint64_t master_seed,
                         int threads)
{
    auto [stats, frames] = run_frames<LossStats>(
        stop, master_seed, threads,
        [&config](std::uint64_t, Xoshiro256ss& rng, LossStats& out) {
            thread_local FrameInstance frame;
            generate_frame_into(config, rng, frame);
            out.losses +=
                static_cast<std::uint64_t>(sic_residual_count(frame, config.ladder()));
        });

    PlrEstimate estimate;
    estimate.frames = frames;
    estimate.users_total = frames * static_cast<std::uint64_t>(config.users());
    estimate.losses = stats.losses;
    estimate.plr = estimate.users_total > 0
                       ? static_cast<double>(estimate.losses) / static_cast<double>(estimate.users_total)
                       : 0.0;
    const Interval ci = wilson_interval(estimate.losses, estimate.users_total);
    estimate.ci_low = ci.low;
    estimate.ci_high = ci.high;
    estimate.seed = master_seed;
    return estimate;
}

} // namespace nomairsa
