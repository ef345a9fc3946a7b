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

#include "nomairsa/power_ladder.hpp"

#include <cmath>
#include <stdexcept>

namespace nomairsa {

PowerLadder PowerLadder::from_db(double gamma_db, int level_count)
{
    if (!std::isfinite(gamma_db))
        throw std::invalid_argument("power ladder: gamma_db must be finite");
    if (level_count < 1)
        throw std::invalid_argument("power ladder: level count must be >= 1");

    const double gamma = std::pow(10.0, gamma_db / 10.0);
    std::vector<double> levels(static_cast<std::size_t>(level_count));
    // p_L = gamma, each step up multiplies by (gamma + 1).
    double power = gamma;
    for (int k = level_count; k >= 1; --k) {
        levels[static_cast<std::size_t>(k) - 1] = power;
        power *= gamma + 1.0;
    }
    return PowerLadder(gamma, std::move(levels));
}

PowerLadder::PowerLadder(double gamma, std::vector<double> levels)
  : gamma_(gamma)
  , decode_floor_(gamma * (1.0 - 1e-9))
  , levels_(std::move(levels))
{
}

} // namespace nomairsa
