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
#include <span>
#include <vector>

#include "nomairsa/degree_distribution.hpp"
#include "nomairsa/occupancy.hpp"

namespace nomairsa {

enum class StoppingSetId { S1, S2, S3 };

/** @brief Shape parameters of the three dominant SIC stopping sets.
 *
 * S1: two degree-2 users sharing both slots. S2: three degree-2 users whose
 * slot pairs close a 3-cycle over three slots. S3: two degree-3 users
 * sharing all three slots. qualifying_degree names the replica count whose
 * probability scales the qualifying-user (ball) count.
 */
struct StoppingSetSpec
{
    StoppingSetId id;
    int slots_involved;    // mu
    int users_involved;    // nu
    int qualifying_degree; // 2 or 3
};

const std::array<StoppingSetSpec, 3>& stopping_set_catalog();

const StoppingSetSpec& stopping_set(StoppingSetId id);

/** @brief Effective bin count b(mu, nu) of a stopping set for n slots.
 *
 * S1 -> C(n,2) slot pairs, S3 -> C(n,3) slot triples. S2 has no direct
 * bins correspondence; its count C(n,2)/sqrt(2(n-2)) comes from an empirical
 * calibration (see fit_bin_count) and is extrapolated to all n >= 4.
 */
double effective_bins(StoppingSetId id, int n);

/** @brief Closed-form error-floor approximation of the packet loss rate.
 *
 * Three-term sum over the stopping-set catalog:
 *
 *   (1/L^2) * 2*l2^2*m / (n(n-1))
 * + (1/L^3) * 2*(n-2)*(l2*m)^2 / (n^2 (n-1)^2)
 * + (1/L^3) * 6*l3^2*m / (n(n-1)(n-2))
 *
 * with l2, l3 the degree-2/3 probabilities. Valid in the error-floor region
 * only (low and moderate loads); it diverges from simulation in the
 * waterfall region, where SIC stalls from congestion rather than from these
 * stopping sets.
 */
double plr_error_floor(int n, int m, int L, const DegreeDistribution& dist);

/** @brief First term of plr_error_floor alone: the S1-only baseline. */
double plr_s1_only(int n, int m, int L, const DegreeDistribution& dist);

/** @brief The same floor assembled from the occupancy model instead of the
 * closed form: sum over the catalog of
 * Pr{power match} * nu * beta_nu / m, with beta_nu from
 * poisson_bin_parameter on (qualifying users, effective bins).
 *
 * Matches plr_error_floor exactly for l2 in {0, 1/2}; for other l2 the two
 * routes differ in the S2 term alone, by the factor 2*l2 (the closed form's
 * S2 coefficient is calibrated at l2 = 1/2).
 */
double plr_error_floor_assembled(int n, int m, int L, const DegreeDistribution& dist);

/** @brief One measured point for the effective-bin-count calibration. */
struct FitSample
{
    int n = 0;          // slots
    double balls = 0.0; // qualifying-user count for the set
    double plr = 0.0;   // set-attributed packet loss rate, > 0
};

struct FitPoint
{
    int n = 0;
    double effective_bins = 0.0;
    double g2 = 0.0;     // C(n,2)^2 / b^2, the quantity fit linearly in n
    double fitted = 0.0; // a0 + a1 * n
};

struct FitResult
{
    double a0 = 0.0;
    double a1 = 0.0;
    std::vector<FitPoint> points;
};

/** @brief Recover the linear law behind the S2 effective bin count.
 *
 * Inverts each sample via b = balls / sqrt(2 * plr), then least-squares fits
 * g(n) = C(n,2)^2 / b(n)^2 against a0 + a1*n. With exact inputs generated
 * from g(n) = 2n - 4 this returns (-4, 2) to machine precision; measured
 * triangle-loss rates reproduce those coefficients within Monte-Carlo noise.
 *
 * Requires at least three samples at distinct n, all with plr > 0.
 */
FitResult fit_bin_count(std::span<const FitSample> samples);

} // namespace nomairsa
