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

#include "nomairsa/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "nomairsa/census.hpp"

namespace nomairsa {

namespace {

constexpr const char* kSweepHeader =
    "G,m,n,L,gamma_db,dist,plr_sim,ci_low,ci_high,plr_analytic,plr_s1only,"
    "frames,losses,seed";

constexpr const char* kCensusHeader =
    "G,m,n,L,gamma_db,dist,frames,"
    "s1_structural,s1_blocking,s1_beta,s1_beta_blocking,"
    "s2_structural,s2_blocking,s2_beta,s2_beta_blocking,"
    "s3_structural,s3_blocking,s3_beta,s3_beta_blocking,seed";

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path, std::ios::binary); // binary: byte-stable newlines
    if (!out)
        throw std::runtime_error("cannot open output file '" + path + "'");
    return out;
}

int users_for(double load, int slots)
{
    const long users = std::lround(load * slots);
    if (users < 1)
        throw std::invalid_argument("grid: load " + std::to_string(load) + " at n = " +
                                    std::to_string(slots) + " rounds to zero users");
    return static_cast<int>(users);
}

SystemConfig make_config(const SweepSpec& spec, const GridPoint& point)
{
    return SystemConfig(point.slots, point.users, DegreeDistribution::parse(spec.dist_text),
                        PowerLadder::from_db(spec.gamma_db, spec.levels));
}

struct CensusStats
{
    std::array<SetCounts, 3> sets{};

    CensusStats& operator+=(const CensusStats& other)
    {
        for (std::size_t i = 0; i < sets.size(); ++i) {
            sets[i].structural += other.sets[i].structural;
            sets[i].blocking += other.sets[i].blocking;
        }
        return *this;
    }

    std::uint64_t stop_events() const { return 0; } // census runs all frames
};

std::pair<CensusStats, std::uint64_t> census_frames(const SystemConfig& config,
                                                    std::uint64_t frames,
                                                    std::uint64_t seed,
                                                    int threads)
{
    StoppingRule rule{frames, 0};
    return run_frames<CensusStats>(
        rule, seed, threads, [&config](std::uint64_t, Xoshiro256ss& rng, CensusStats& out) {
            thread_local FrameInstance frame;
            generate_frame_into(config, rng, frame);
            const FrameCensus counts = census(frame);
            const std::array<const SetCounts*, 3> per_set = {&counts.s1, &counts.s2,
                                                             &counts.s3};
            for (std::size_t i = 0; i < per_set.size(); ++i) {
                out.sets[i].structural += per_set[i]->structural;
                out.sets[i].blocking += per_set[i]->blocking;
            }
        });
}

} // namespace

std::string format_csv_double(double value)
{
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

namespace {

// The distribution text contains commas, so the field is always quoted.
std::string csv_quote(const std::string& field)
{
    return '"' + field + '"';
}

} // namespace

std::vector<GridPoint> resolve_grid(const SweepSpec& spec)
{
    if (spec.loads.empty() == spec.slot_grid.empty())
        throw std::invalid_argument(
            "grid: exactly one of the load grid and the slot grid must be given");
    if (spec.max_frames == 0)
        throw std::invalid_argument("grid: max_frames must be >= 1");

    std::vector<GridPoint> points;
    if (!spec.loads.empty()) {
        if (spec.slots < 1)
            throw std::invalid_argument("grid: slot count must be >= 1");
        for (double load : spec.loads) {
            if (!(load > 0.0))
                throw std::invalid_argument("grid: loads must be positive");
            points.push_back({load, spec.slots, users_for(load, spec.slots)});
        }
    } else {
        if (!(spec.fixed_load > 0.0))
            throw std::invalid_argument("grid: a positive --load is required with a slot grid");
        for (int slots : spec.slot_grid) {
            if (slots < 1)
                throw std::invalid_argument("grid: slot counts must be >= 1");
            points.push_back({spec.fixed_load, slots, users_for(spec.fixed_load, slots)});
        }
    }
    return points;
}

void run_sweep(const SweepSpec& spec, std::ostream& log)
{
    const std::vector<GridPoint> grid = resolve_grid(spec);
    if (spec.out_path.empty())
        throw std::invalid_argument("sweep: an output path is required");
    const DegreeDistribution dist = DegreeDistribution::parse(spec.dist_text);
    const std::string dist_text = dist.to_string();

    std::ofstream out = open_output(spec.out_path);
    out << kSweepHeader << '\n';

    std::ofstream census_out;
    if (spec.with_census) {
        census_out = open_output(spec.out_path + ".census.csv");
        census_out << kCensusHeader << '\n';
    }

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const GridPoint& point = grid[i];
        const SystemConfig config = make_config(spec, point);
        const std::uint64_t point_seed = derive_seed(spec.seed, i);

        const PlrEstimate estimate =
            estimate_plr(config, {spec.max_frames, spec.min_losses}, point_seed, spec.threads);
        const double analytic =
            plr_error_floor(point.slots, point.users, spec.levels, dist);

        out << format_csv_double(point.load) << ',' << point.users << ',' << point.slots
            << ',' << spec.levels << ',' << format_csv_double(spec.gamma_db) << ','
            << csv_quote(dist_text) << ',' << format_csv_double(estimate.plr) << ','
            << format_csv_double(estimate.ci_low) << ','
            << format_csv_double(estimate.ci_high) << ',' << format_csv_double(analytic)
            << ',';
        if (spec.s1_baseline)
            out << format_csv_double(
                plr_s1_only(point.slots, point.users, spec.levels, dist));
        out << ',' << estimate.frames << ',' << estimate.losses << ',' << spec.seed << '\n';

        log << "[sweep " << (i + 1) << '/' << grid.size() << "] G=" << point.load
            << " n=" << point.slots << " m=" << point.users << " frames=" << estimate.frames
            << " losses=" << estimate.losses << " plr=" << estimate.plr
            << " analytic=" << analytic << '\n';

        if (spec.with_census) {
            // Calibration context, not rare-event hunting: cap the sidecar.
            const std::uint64_t budget = std::min<std::uint64_t>(spec.max_frames, 100'000);
            const auto [counts, frames] =
                census_frames(config, budget, derive_seed(point_seed, 1), spec.threads);
            const auto expected = expected_counts(config);
            census_out << format_csv_double(point.load) << ',' << point.users << ','
                       << point.slots << ',' << spec.levels << ','
                       << format_csv_double(spec.gamma_db) << ',' << csv_quote(dist_text) << ','
                       << frames;
            for (std::size_t set = 0; set < 3; ++set) {
                census_out << ',' << counts.sets[set].structural << ','
                           << counts.sets[set].blocking << ','
                           << format_csv_double(expected[set].structural) << ','
                           << format_csv_double(expected[set].blocking);
            }
            census_out << ',' << spec.seed << '\n';
        }
    }
    if (!out.flush())
        throw std::runtime_error("sweep: failed writing '" + spec.out_path + "'");
}

void run_census(const SweepSpec& spec, std::ostream& log)
{
    const std::vector<GridPoint> grid = resolve_grid(spec);
    if (spec.out_path.empty())
        throw std::invalid_argument("census: an output path is required");
    const DegreeDistribution dist = DegreeDistribution::parse(spec.dist_text);
    const std::string dist_text = dist.to_string();

    std::ofstream out = open_output(spec.out_path);
    out << kCensusHeader << '\n';

    for (std::size_t i = 0; i < grid.size(); ++i) {
        const GridPoint& point = grid[i];
        const SystemConfig config = make_config(spec, point);
        const auto [counts, frames] =
            census_frames(config, spec.max_frames, derive_seed(spec.seed, i), spec.threads);
        const auto expected = expected_counts(config);

        out << format_csv_double(point.load) << ',' << point.users << ',' << point.slots
            << ',' << spec.levels << ',' << format_csv_double(spec.gamma_db) << ','
            << csv_quote(dist_text) << ',' << frames;
        for (std::size_t set = 0; set < 3; ++set) {
            out << ',' << counts.sets[set].structural << ',' << counts.sets[set].blocking
                << ',' << format_csv_double(expected[set].structural) << ','
                << format_csv_double(expected[set].blocking);
        }
        out << ',' << spec.seed << '\n';

        log << "[census " << (i + 1) << '/' << grid.size() << "] G=" << point.load
            << " n=" << point.slots << " m=" << point.users << " frames=" << frames << '\n';
    }
    if (!out.flush())
        throw std::runtime_error("census: failed writing '" + spec.out_path + "'");
}

namespace {

struct FitStats
{
    std::uint64_t attributed = 0;

    FitStats& operator+=(const FitStats& other)
    {
        attributed += other.attributed;
        return *this;
    }

    std::uint64_t stop_events() const { return attributed; }
};

} // namespace

FitReport run_fit(const FitSpec& spec, std::ostream& log)
{
    if (spec.slot_grid.size() < 3)
        throw std::invalid_argument("fit: need a slot grid with at least 3 points");
    if (!(spec.load > 0.0))
        throw std::invalid_argument("fit: need a positive load");
    if (spec.max_frames == 0 || spec.min_losses == 0)
        throw std::invalid_argument("fit: need positive frame and loss budgets");

    const DegreeDistribution dist = DegreeDistribution::parse(spec.dist_text);
    if (dist.lambda_at(2) <= 0.0)
        throw std::invalid_argument("fit: the distribution must produce degree-2 users");
    // One power level: no capture, so every structural triangle blocks.
    const PowerLadder ladder = PowerLadder::from_db(spec.gamma_db, 1);

    FitReport report;
    std::vector<FitSample> samples;
    for (std::size_t i = 0; i < spec.slot_grid.size(); ++i) {
        const int slots = spec.slot_grid[i];
        const int users = users_for(spec.load, slots);
        if (users < 3)
            throw std::invalid_argument("fit: need at least 3 users per frame");
        const SystemConfig config(slots, users, dist, ladder);

        auto [stats, frames] = run_frames<FitStats>(
            {spec.max_frames, spec.min_losses}, derive_seed(spec.seed, i), spec.threads,
            [&config](std::uint64_t, Xoshiro256ss& rng, FitStats& out) {
                thread_local FrameInstance frame;
                generate_frame_into(config, rng, frame);
                // Occurrence-based loss accounting: each blocking triangle
                // contributes its three members, who are provably stuck (their
                // only slots each hold a power-matched pair). A user sitting
                // in two triangles counts twice, matching the expected-count
                // inversion behind the fit.
                out.attributed += 3 * census(frame).s2.blocking;
            });

        FitPointReport point;
        point.n = slots;
        point.users = users;
        point.frames = frames;
        point.attributed_losses = stats.attributed;
        point.plr_raw = static_cast<double>(stats.attributed) /
                        (static_cast<double>(users) * static_cast<double>(frames));
        // Triple counts scale with m(m-1)(m-2); the bin law is stated for m^3.
        const double mm = users;
        point.plr_corrected = point.plr_raw * mm * mm / ((mm - 1.0) * (mm - 2.0));
        report.points.push_back(point);
        samples.push_back({slots, dist.lambda_at(2) * users, point.plr_corrected});

        log << "[fit " << (i + 1) << '/' << spec.slot_grid.size() << "] n=" << slots
            << " m=" << users << " frames=" << frames << " attributed=" << stats.attributed
            << " plr=" << point.plr_corrected << '\n';
    }

    report.fit = fit_bin_count(samples);

    if (!spec.out_path.empty()) {
        std::ofstream out = open_output(spec.out_path);
        out << "n,m,frames,attributed,plr_raw,plr_corrected,bbar,g2,g2_fit\n";
        for (std::size_t i = 0; i < report.points.size(); ++i) {
            const FitPointReport& point = report.points[i];
            const FitPoint& fit_point = report.fit.points[i];
            out << point.n << ',' << point.users << ',' << point.frames << ','
                << point.attributed_losses << ',' << format_csv_double(point.plr_raw) << ','
                << format_csv_double(point.plr_corrected) << ','
                << format_csv_double(fit_point.effective_bins) << ','
                << format_csv_double(fit_point.g2) << ','
                << format_csv_double(fit_point.fitted) << '\n';
        }
    }
    return report;
}

} // namespace nomairsa
