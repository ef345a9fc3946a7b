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

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "nomairsa/rng.hpp"
#include "nomairsa/system_config.hpp"

namespace nomairsa {

/** @brief Stop after max_frames frames, or earlier once min_loss_events
 * losses have been observed (0 disables the early stop).
 */
struct StoppingRule
{
    std::uint64_t max_frames = 0;
    std::uint64_t min_loss_events = 0;
};

struct Interval
{
    double low = 0.0;
    double high = 0.0;
};

/** @brief Wilson score interval for a binomial proportion.
 *
 * Preferred over the normal approximation here because floor-region losses
 * are rare events.
 */
Interval wilson_interval(std::uint64_t events, std::uint64_t trials, double z = 1.959963984540054);

/** @brief Per-user packet loss rate estimate from simulated frames. */
struct PlrEstimate
{
    std::uint64_t frames = 0;
    std::uint64_t users_total = 0;
    std::uint64_t losses = 0;
    double plr = 0.0;
    double ci_low = 0.0;  // Wilson 95% bounds on the per-user loss proportion
    double ci_high = 0.0;
    std::uint64_t seed = 0;
};

namespace detail {

constexpr std::uint64_t kBlockFrames = 1024;

inline int resolve_threads(int threads)
{
    if (threads > 0)
        return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace detail

/** @brief Deterministic parallel frame loop.
 *
 * Frames are processed in fixed blocks; each frame's rng stream is derived
 * from (master_seed, frame index) alone, and block statistics are committed
 * in frame order until the stopping rule fires. The committed result is
 * therefore bit-identical for a given seed regardless of the worker count
 * (the rule may overshoot min_loss_events by up to one block, but always by
 * the same amount). Stats must be default-constructible and provide
 * operator+= and stop_events().
 *
 * per_frame is invoked as per_frame(frame_index, rng, stats) and must be
 * safe to call concurrently on distinct stats objects.
 */
template <class Stats, class FrameFn>
std::pair<Stats, std::uint64_t> run_frames(const StoppingRule& stop,
                                           std::uint64_t master_seed,
                                           int threads,
                                           FrameFn&& per_frame)
{
    if (stop.max_frames == 0)
        throw std::invalid_argument("monte carlo: at least one frame required");

    const int worker_count = detail::resolve_threads(threads);
    const std::uint64_t total_blocks =
        (stop.max_frames + detail::kBlockFrames - 1) / detail::kBlockFrames;
    const std::uint64_t wave_blocks =
        std::min<std::uint64_t>(total_blocks, static_cast<std::uint64_t>(worker_count) * 8);

    Stats committed{};
    std::uint64_t committed_frames = 0;
    std::uint64_t committed_events = 0;

    for (std::uint64_t wave_start = 0; wave_start < total_blocks; wave_start += wave_blocks) {
        const std::uint64_t wave_end = std::min(wave_start + wave_blocks, total_blocks);
        std::vector<Stats> block_stats(static_cast<std::size_t>(wave_end - wave_start));

        auto run_block = [&](std::uint64_t block) {
            const std::uint64_t first = block * detail::kBlockFrames;
            const std::uint64_t last = std::min(first + detail::kBlockFrames, stop.max_frames);
            Stats stats{};
            for (std::uint64_t frame = first; frame < last; ++frame) {
                Xoshiro256ss rng = Xoshiro256ss::for_stream(master_seed, frame);
                per_frame(frame, rng, stats);
            }
            block_stats[static_cast<std::size_t>(block - wave_start)] = stats;
        };

        if (worker_count == 1 || wave_end - wave_start == 1) {
            for (std::uint64_t block = wave_start; block < wave_end; ++block)
                run_block(block);
        } else {
            std::vector<std::thread> workers;
            workers.reserve(static_cast<std::size_t>(worker_count));
            for (int w = 0; w < worker_count; ++w) {
                workers.emplace_back([&, w]() {
                    for (std::uint64_t block = wave_start + static_cast<std::uint64_t>(w);
                         block < wave_end;
                         block += static_cast<std::uint64_t>(worker_count))
                        run_block(block);
                });
            }
            for (auto& worker : workers)
                worker.join();
        }

        bool done = false;
        for (std::uint64_t block = wave_start; block < wave_end; ++block) {
            const Stats& stats = block_stats[static_cast<std::size_t>(block - wave_start)];
            const std::uint64_t first = block * detail::kBlockFrames;
            const std::uint64_t last = std::min(first + detail::kBlockFrames, stop.max_frames);
            committed += stats;
            committed_frames += last - first;
            committed_events += stats.stop_events();
            if (stop.min_loss_events > 0 && committed_events >= stop.min_loss_events) {
                done = true;
                break;
            }
        }
        if (done)
            break;
    }
    return {committed, committed_frames};
}

/** @brief Simulate i.i.d. frames and estimate the packet loss rate.
 *
 * A loss is a user left undecoded by SIC at the end of its frame. Results
 * are reproducible: same config, rule and seed give the same estimate for
 * any thread count.
 */
PlrEstimate estimate_plr(const SystemConfig& config,
                         const StoppingRule& stop,
                         std::uint64_t master_seed,
                         int threads = 0);

} // namespace nomairsa
