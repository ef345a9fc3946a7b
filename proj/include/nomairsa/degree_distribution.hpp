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

#include <string>
#include <string_view>
#include <vector>

#include "nomairsa/rng.hpp"

namespace nomairsa {

/** @brief Replica-count distribution of a repetition-based random access user.
 *
 * Holds the probability lambda_r that a user transmits r replicas, r >= 2.
 * Probabilities must sum to one; malformed inputs are rejected rather than
 * renormalized, because the analytics are sensitive to lambda_2 and lambda_3.
 */
class DegreeDistribution
{
public:
    struct Entry
    {
        int degree;         // replica count r, >= 2
        double probability; // lambda_r in (0, 1]
    };

    /** @brief Parse a comma-separated "r:prob" list, e.g. "2:0.5,3:0.5".
     *
     * The probabilities must already sum to 1 within 1e-9; within that
     * tolerance they are rescaled exactly onto 1.
     * Throws std::invalid_argument on malformed pairs, duplicate or
     * out-of-range degrees, or a sum outside tolerance.
     */
    static DegreeDistribution parse(std::string_view text);

    /** @brief Validate and build from explicit entries (same rules as parse). */
    static DegreeDistribution from_entries(std::vector<Entry> entries);

    /** @brief lambda_r for the given degree, 0 when the degree is absent. */
    double lambda_at(int degree) const;

    int max_degree() const { return entries_.back().degree; }

    double mean_degree() const;

    /** @brief Draw a replica count; deterministic given the rng state. */
    int sample(Xoshiro256ss& rng) const;

    const std::vector<Entry>& entries() const { return entries_; }

    /** @brief Canonical text form, parseable by parse(). */
    std::string to_string() const;

private:
    DegreeDistribution() = default;

    std::vector<Entry> entries_; // sorted by degree
    std::vector<double> cdf_;    // running sums, back() forced to 1.0
};

} // namespace nomairsa
