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

#include "nomairsa/degree_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nomairsa {

namespace {

constexpr double kSumTolerance = 1e-9;

[[noreturn]] void fail(const std::string& what)
{
    throw std::invalid_argument("degree distribution: " + what);
}

} // namespace

DegreeDistribution DegreeDistribution::parse(std::string_view text)
{
    std::vector<Entry> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        std::string_view pair = text.substr(pos, comma - pos);

        std::size_t colon = pair.find(':');
        if (pair.empty() || colon == std::string_view::npos)
            fail("malformed pair '" + std::string(pair) + "'");

        std::string degree_text(pair.substr(0, colon));
        std::string prob_text(pair.substr(colon + 1));
        std::size_t used = 0;
        int degree = 0;
        double probability = 0.0;
        try {
            degree = std::stoi(degree_text, &used);
            if (used != degree_text.size())
                fail("malformed degree '" + degree_text + "'");
            probability = std::stod(prob_text, &used);
            if (used != prob_text.size())
                fail("malformed probability '" + prob_text + "'");
        } catch (const std::invalid_argument&) {
            fail("malformed pair '" + std::string(pair) + "'");
        } catch (const std::out_of_range&) {
            fail("value out of range in '" + std::string(pair) + "'");
        }
        entries.push_back({degree, probability});

        pos = comma + 1;
        if (comma == text.size())
            break;
    }
    return from_entries(std::move(entries));
}

DegreeDistribution DegreeDistribution::from_entries(std::vector<Entry> entries)
{
    if (entries.empty())
        fail("no entries");

    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.degree < b.degree; });

    double sum = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const Entry& e = entries[i];
        if (e.degree < 2)
            fail("degree " + std::to_string(e.degree) + " is below 2");
        if (i > 0 && entries[i - 1].degree == e.degree)
            fail("duplicate degree " + std::to_string(e.degree));
        if (!std::isfinite(e.probability) || e.probability <= 0.0 || e.probability > 1.0)
            fail("probability for degree " + std::to_string(e.degree) + " not in (0, 1]");
        sum += e.probability;
    }
    if (std::fabs(sum - 1.0) > kSumTolerance)
        fail("probabilities sum to " + std::to_string(sum) + ", not 1");

    DegreeDistribution dist;
    dist.entries_ = std::move(entries);
    // Rescale exactly onto 1 so downstream sums hold to 1e-12.
    double running = 0.0;
    for (auto& e : dist.entries_) {
        e.probability /= sum;
        running += e.probability;
        dist.cdf_.push_back(running);
    }
    dist.cdf_.back() = 1.0;
    return dist;
}

double DegreeDistribution::lambda_at(int degree) const
{
    for (const Entry& e : entries_)
        if (e.degree == degree)
            return e.probability;
    return 0.0;
}

double DegreeDistribution::mean_degree() const
{
    double mean = 0.0;
    for (const Entry& e : entries_)
        mean += e.degree * e.probability;
    return mean;
}

int DegreeDistribution::sample(Xoshiro256ss& rng) const
{
    const double u = rng.uniform01();
    for (std::size_t i = 0; i < cdf_.size(); ++i)
        if (u < cdf_[i])
            return entries_[i].degree;
    return entries_.back().degree;
}

std::string DegreeDistribution::to_string() const
{
    std::string out;
    char buffer[64];
    for (const Entry& e : entries_) {
        if (!out.empty())
            out += ',';
        std::snprintf(buffer, sizeof(buffer), "%d:%.9g", e.degree, e.probability);
        out += buffer;
    }
    return out;
}

} // namespace nomairsa
