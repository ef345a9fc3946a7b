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

#include "nomairsa/error_floor.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace nomairsa {

namespace {

double choose2(double n)
{
    return n * (n - 1.0) / 2.0;
}

double choose3(double n)
{
    return n * (n - 1.0) * (n - 2.0) / 6.0;
}

void check_floor_args(int n, int m, int L)
{
    if (n < 4)
        throw std::invalid_argument("error floor: need n >= 4");
    if (m < 0)
        throw std::invalid_argument("error floor: need m >= 0");
    if (L < 1)
        throw std::invalid_argument("error floor: need L >= 1");
}

} // namespace

const std::array<StoppingSetSpec, 3>& stopping_set_catalog()
{
    static const std::array<StoppingSetSpec, 3> catalog = {{
        {StoppingSetId::S1, 2, 2, 2},
        {StoppingSetId::S2, 3, 3, 2},
        {StoppingSetId::S3, 3, 2, 3},
    }};
    return catalog;
}

const StoppingSetSpec& stopping_set(StoppingSetId id)
{
    return stopping_set_catalog()[static_cast<std::size_t>(id)];
}

double effective_bins(StoppingSetId id, int n)
{
    if (n < 4)
        throw std::invalid_argument("effective bins: need n >= 4");
    switch (id) {
    case StoppingSetId::S1:
        return choose2(n);
    case StoppingSetId::S2:
        return choose2(n) / std::sqrt(2.0 * (n - 2));
    case StoppingSetId::S3:
        return choose3(n);
    }
    throw std::invalid_argument("effective bins: unknown stopping set");
}

double plr_error_floor(int n, int m, int L, const DegreeDistribution& dist)
{
    check_floor_args(n, m, L);
    const double l2 = dist.lambda_at(2);
    const double l3 = dist.lambda_at(3);
    const double nn = n;
    const double mm = m;
    const double L2 = static_cast<double>(L) * L;
    const double L3 = L2 * L;

    const double term1 = (1.0 / L2) * 2.0 * l2 * l2 * mm / (nn * (nn - 1.0));
    const double term2 = (1.0 / L3) * 2.0 * (nn - 2.0) * (l2 * mm) * (l2 * mm) /
                         (nn * nn * (nn - 1.0) * (nn - 1.0));
    const double term3 =
        (1.0 / L3) * 6.0 * l3 * l3 * mm / (nn * (nn - 1.0) * (nn - 2.0));
    return term1 + term2 + term3;
}

double plr_s1_only(int n, int m, int L, const DegreeDistribution& dist)
{
    check_floor_args(n, m, L);
    const double l2 = dist.lambda_at(2);
    return (1.0 / (static_cast<double>(L) * L)) * 2.0 * l2 * l2 * m /
           (static_cast<double>(n) * (n - 1.0));
}

double plr_error_floor_assembled(int n, int m, int L, const DegreeDistribution& dist)
{
    check_floor_args(n, m, L);
    if (m == 0)
        return 0.0;

    double plr = 0.0;
    for (const StoppingSetSpec& set : stopping_set_catalog()) {
        const double qualifying = dist.lambda_at(set.qualifying_degree) * m;
        const BibInstance instance{qualifying, effective_bins(set.id, n)};
        const double beta = poisson_bin_parameter(instance, set.users_involved);
        const double power_match = std::pow(static_cast<double>(L), -set.slots_involved);
        plr += power_match * set.users_involved * beta / m;
    }
    return plr;
}

FitResult fit_bin_count(std::span<const FitSample> samples)
{
    if (samples.size() < 3)
        throw std::invalid_argument("bin-count fit: need at least 3 samples");

    std::set<int> distinct;
    FitResult result;
    result.points.reserve(samples.size());
    for (const FitSample& sample : samples) {
        if (sample.n < 4)
            throw std::invalid_argument("bin-count fit: need n >= 4");
        if (sample.plr <= 0.0)
            throw std::invalid_argument("bin-count fit: loss-rate samples must be positive");
        if (sample.balls <= 0.0)
            throw std::invalid_argument("bin-count fit: ball counts must be positive");
        distinct.insert(sample.n);

        FitPoint point;
        point.n = sample.n;
        point.effective_bins = sample.balls / std::sqrt(2.0 * sample.plr);
        const double c2 = choose2(sample.n);
        point.g2 = (c2 / point.effective_bins) * (c2 / point.effective_bins);
        result.points.push_back(point);
    }
    if (distinct.size() < 3)
        throw std::invalid_argument("bin-count fit: need at least 3 distinct n");

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const FitPoint& point : result.points) {
        sx += point.n;
        sy += point.g2;
        sxx += static_cast<double>(point.n) * point.n;
        sxy += point.n * point.g2;
    }
    const double count = static_cast<double>(result.points.size());
    const double denom = count * sxx - sx * sx;
    result.a1 = (count * sxy - sx * sy) / denom;
    result.a0 = (sy - result.a1 * sx) / count;
    for (FitPoint& point : result.points)
        point.fitted = result.a0 + result.a1 * point.n;
    return result;
}

} // namespace nomairsa
