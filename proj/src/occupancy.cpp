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

#include "nomairsa/occupancy.hpp"

#include <cmath>
#include <stdexcept>

namespace nomairsa {

double poisson_bin_parameter(const BibInstance& instance, int t)
{
    if (instance.bins <= 0.0)
        throw std::invalid_argument("occupancy: bin count must be positive");
    if (instance.balls < 0.0)
        throw std::invalid_argument("occupancy: ball count must be nonnegative");
    if (t < 1)
        throw std::invalid_argument("occupancy: t must be >= 1");

    double factorial = 1.0;
    for (int i = 2; i <= t; ++i)
        factorial *= i;
    return instance.bins / factorial * std::pow(instance.balls / instance.bins, t);
}

std::vector<double> exact_occupancy_pmf(int balls, int bins, int t)
{
    if (balls < 0 || bins < 1 || t < 1)
        throw std::invalid_argument("occupancy: need balls >= 0, bins >= 1, t >= 1");
    if (balls > 200 || bins > 400)
        throw std::invalid_argument("occupancy: instance too large for exact computation");

    const int y_max = balls / t;
    const std::size_t states = static_cast<std::size_t>(balls + 1) *
                               static_cast<std::size_t>(y_max + 1);
    auto index = [y_max](int s, int y) {
        return static_cast<std::size_t>(s) * static_cast<std::size_t>(y_max + 1) +
               static_cast<std::size_t>(y);
    };

    // f[s][y]: probability that s balls are still unplaced and y of the bins
    // processed so far hold exactly t balls. Bins are filled one at a time;
    // conditioned on s balls remaining for the final r bins, the next bin's
    // content is Binomial(s, 1/r).
    std::vector<double> current(states, 0.0);
    std::vector<double> next(states, 0.0);
    current[index(balls, 0)] = 1.0;

    for (int processed = 0; processed < bins; ++processed) {
        const int remaining_bins = bins - processed;
        std::fill(next.begin(), next.end(), 0.0);

        for (int s = 0; s <= balls; ++s) {
            for (int y = 0; y <= y_max; ++y) {
                const double mass = current[index(s, y)];
                if (mass == 0.0)
                    continue;

                if (remaining_bins == 1) {
                    const int y_after = y + (s == t ? 1 : 0);
                    next[index(0, y_after)] += mass;
                    continue;
                }

                const double q = 1.0 / remaining_bins;
                double binom = std::pow(1.0 - q, s); // Pr{bin gets 0 of s balls}
                for (int c = 0; c <= s; ++c) {
                    if (binom > 0.0) {
                        const int y_after = y + (c == t ? 1 : 0);
                        if (y_after <= y_max)
                            next[index(s - c, y_after)] += mass * binom;
                    }
                    binom *= (static_cast<double>(s - c) / (c + 1)) * (q / (1.0 - q));
                }
            }
        }
        current.swap(next);
    }

    std::vector<double> pmf(static_cast<std::size_t>(y_max) + 1, 0.0);
    for (int y = 0; y <= y_max; ++y)
        pmf[static_cast<std::size_t>(y)] = current[index(0, y)];
    return pmf;
}

double exact_occupancy_mean(int balls, int bins, int t)
{
    if (balls < 0 || bins < 1 || t < 1)
        throw std::invalid_argument("occupancy: need balls >= 0, bins >= 1, t >= 1");
    if (t > balls)
        return 0.0;
    if (bins == 1)
        return t == balls ? 1.0 : 0.0;

    // log of bins * C(balls, t) * bins^-t * (1 - 1/bins)^(balls - t)
    const double log_choose = std::lgamma(balls + 1.0) - std::lgamma(t + 1.0) -
                              std::lgamma(balls - t + 1.0);
    const double log_mean = std::log(static_cast<double>(bins)) + log_choose -
                            t * std::log(static_cast<double>(bins)) +
                            (balls - t) * std::log1p(-1.0 / bins);
    return std::exp(log_mean);
}

} // namespace nomairsa
