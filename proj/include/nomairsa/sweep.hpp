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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nomairsa/error_floor.hpp"
#include "nomairsa/monte_carlo.hpp"

namespace nomairsa {

/** @brief Parameter-study description shared by the sweep and census runs.
 *
 * Exactly one of loads (channel-load grid at fixed slot count) or slot_grid
 * (slot-count grid at fixed load) must be non-empty. The user count at a
 * grid point is m = round(G * n), and must come out >= 1.
 */
struct SweepSpec
{
    int slots = 200;
    int levels = 3;
    double gamma_db = 3.0;
    std::string dist_text = "2:0.5,3:0.5";

    std::vector<double> loads; // channel-load grid
    std::vector<int> slot_grid; // alternative: slot grid ...
    double fixed_load = 0.0;    // ... at this load

    std::uint64_t max_frames = 10'000'000;
    std::uint64_t min_losses = 200;
    std::uint64_t seed = 1;
    int threads = 0; // 0 = all hardware threads

    std::string out_path;
    bool s1_baseline = true;   // fill the plr_s1only column
    bool with_census = false;  // sweep only: also write <out>.census.csv
};

/** @brief One resolved grid point. */
struct GridPoint
{
    double load = 0.0;
    int slots = 0;
    int users = 0;
};

std::vector<GridPoint> resolve_grid(const SweepSpec& spec);

/** @brief Simulate every grid point and write one CSV row per point:
 *
 *   G,m,n,L,gamma_db,dist,plr_sim,ci_low,ci_high,plr_analytic,plr_s1only,
 *   frames,losses,seed
 *
 * Floating-point values carry 9 significant digits. Output is byte-identical
 * for a given spec and seed, whatever the thread count. Progress goes to
 * log only (callers pass std::cerr); nothing is written to stdout.
 */
void run_sweep(const SweepSpec& spec, std::ostream& log);

/** @brief Count stopping-set occurrences over max_frames frames per grid
 * point and write one CSV row per point:
 *
 *   G,m,n,L,gamma_db,dist,frames,
 *   s1_structural,s1_blocking,s1_beta,s1_beta_blocking, (same for s2, s3)
 *   seed
 *
 * The _beta columns are the expected per-frame counts; the count columns are
 * totals over the run.
 */
void run_census(const SweepSpec& spec, std::ostream& log);

/** @brief Calibration run for the three-slot triangle set's effective bin
 * count (see fit_bin_count).
 */
struct FitSpec
{
    std::vector<int> slot_grid;    // >= 3 distinct values
    double load = 0.4;
    std::string dist_text = "2:1.0"; // degree-2 users form the triangles
    double gamma_db = 3.0;

    std::uint64_t max_frames = 10'000'000;  // per grid point
    std::uint64_t min_losses = 150'000;     // attributed losses per point
    std::uint64_t seed = 1;
    int threads = 0;
    std::string out_path; // optional per-point CSV
};

struct FitPointReport
{
    int n = 0;
    int users = 0;
    std::uint64_t frames = 0;
    std::uint64_t attributed_losses = 0;
    double plr_raw = 0.0;       // attributed losses / (m * frames)
    double plr_corrected = 0.0; // finite-pool corrected, fed to the fit
};

struct FitReport
{
    FitResult fit;
    std::vector<FitPointReport> points;
};

/** @brief Simulate the grid with a single power level, measure losses
 * attributable to the triangle stopping set, and fit the effective-bin law.
 *
 * Losses are counted per occurrence membership: every blocking triangle
 * contributes its three users (they are necessarily undecodable, since each
 * of their slots holds a power-matched pair), and a user caught in two
 * triangles counts twice. That matches the expected-occurrence accounting
 * the inversion assumes. Per-point rates are additionally rescaled by
 * m^2 / ((m-1)(m-2)) before inversion: measured triple counts follow the
 * falling factorial m(m-1)(m-2) while the bin-count law is stated for m^3.
 * With both conventions in place the fitted line is unbiased.
 * Requires lambda_2 > 0 and m >= 3 at every grid point.
 */
FitReport run_fit(const FitSpec& spec, std::ostream& log);

/** @brief Fixed-width float formatting used in all CSV output (9 significant
 * digits).
 */
std::string format_csv_double(double value);

} // namespace nomairsa
