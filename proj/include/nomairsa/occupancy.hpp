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

namespace nomairsa {

/** @brief A balls-into-bins instance. Ball counts may be fractional: the
 * analytics use average qualifying-user counts directly.
 */
struct BibInstance
{
    double balls = 0.0; // >= 0
    double bins = 0.0;  // > 0
};

/** @brief Poisson parameter beta_t for the number of bins holding exactly t
 * balls: (bins / t!) * (balls / bins)^t.
 *
 * This is the large-instance limit of the exact occupancy law; see
 * exact_occupancy_mean for the finite counterpart.
 */
double poisson_bin_parameter(const BibInstance& instance, int t);

/** @brief Exact distribution of Y_t, the number of bins containing exactly t
 * balls, under independent uniform placement of integer balls.
 *
 * Computed by a multinomial recursion over bins (all-positive terms, no
 * alternating sums), so it is numerically stable and sums to 1 within 1e-12.
 * Index y of the returned vector is Pr{Y_t = y}.
 *
 * Throws when the instance is too large for the exact path
 * (balls <= 200, bins <= 400).
 */
std::vector<double> exact_occupancy_pmf(int balls, int bins, int t);

/** @brief Exact E[Y_t] = bins * C(balls, t) * (1/bins)^t * (1 - 1/bins)^(balls - t).
 *
 * Closed form by linearity of expectation; valid for any instance size.
 */
double exact_occupancy_mean(int balls, int bins, int t);

} // namespace nomairsa
