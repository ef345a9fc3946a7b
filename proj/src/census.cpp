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

#include "nomairsa/census.hpp"

#include <algorithm>
#include <cmath>

namespace nomairsa {

namespace {

struct PairUser
{
    int slot_a, slot_b;   // sorted
    int level_a, level_b;
    int user_id;
};

struct TripleUser
{
    std::array<int, 3> slots;  // sorted
    std::array<int, 3> levels; // aligned with slots
    int user_id;
};

// A run of degree-2 users sharing one slot pair.
struct Edge
{
    int slot_a, slot_b;
    std::size_t begin, end; // range in the sorted pairs vector
};

// Buffers reused across frames; census runs sit inside Monte-Carlo loops.
struct Workspace
{
    std::vector<PairUser> pairs;
    std::vector<TripleUser> triples;
    std::vector<Edge> edges;
};

thread_local Workspace workspace;

void count_pair_sets(std::vector<PairUser>& pairs,
                     SetCounts& counts,
                     std::vector<Edge>& edges,
                     std::vector<int>* blocking_users)
{
    std::sort(pairs.begin(), pairs.end(), [](const PairUser& x, const PairUser& y) {
        if (x.slot_a != y.slot_a)
            return x.slot_a < y.slot_a;
        if (x.slot_b != y.slot_b)
            return x.slot_b < y.slot_b;
        if (x.level_a != y.level_a)
            return x.level_a < y.level_a;
        if (x.level_b != y.level_b)
            return x.level_b < y.level_b;
        return x.user_id < y.user_id;
    });

    edges.clear();
    std::size_t group_start = 0;
    while (group_start < pairs.size()) {
        std::size_t group_end = group_start;
        while (group_end < pairs.size() &&
               pairs[group_end].slot_a == pairs[group_start].slot_a &&
               pairs[group_end].slot_b == pairs[group_start].slot_b)
            ++group_end;

        edges.push_back(
            {pairs[group_start].slot_a, pairs[group_start].slot_b, group_start, group_end});

        const std::uint64_t group_size = group_end - group_start;
        counts.structural += group_size * (group_size - 1) / 2;

        std::size_t run_start = group_start;
        while (run_start < group_end) {
            std::size_t run_end = run_start;
            while (run_end < group_end &&
                   pairs[run_end].level_a == pairs[run_start].level_a &&
                   pairs[run_end].level_b == pairs[run_start].level_b)
                ++run_end;
            const std::uint64_t run_size = run_end - run_start;
            counts.blocking += run_size * (run_size - 1) / 2;
            if (blocking_users != nullptr && run_size >= 2)
                for (std::size_t i = run_start; i < run_end; ++i)
                    blocking_users->push_back(pairs[i].user_id);
            run_start = run_end;
        }
        group_start = group_end;
    }
}

// S2 occurrences are triangles of the distinct-slot-pair graph; the edges
// vector is sorted lexicographically by construction.
void count_triangles(const std::vector<PairUser>& pairs,
                     const std::vector<Edge>& edges,
                     SetCounts& counts,
                     std::vector<int>* blocking_users)
{
    auto edge_lookup = [&edges](int a, int b) -> const Edge* {
        const auto it = std::lower_bound(
            edges.begin(), edges.end(), std::pair(a, b), [](const Edge& e, std::pair<int, int> key) {
                return e.slot_a != key.first ? e.slot_a < key.first : e.slot_b < key.second;
            });
        if (it != edges.end() && it->slot_a == a && it->slot_b == b)
            return &*it;
        return nullptr;
    };

    for (const Edge& ab : edges) {
        const int a = ab.slot_a;
        const int b = ab.slot_b;
        // Edges (b, c) with c > b close a cycle through the chord (a, c).
        const auto first_bc = std::lower_bound(
            edges.begin(), edges.end(), std::pair(b, b), [](const Edge& e, std::pair<int, int> key) {
                return e.slot_a != key.first ? e.slot_a < key.first : e.slot_b < key.second;
            });
        for (auto it = first_bc; it != edges.end() && it->slot_a == b; ++it) {
            const Edge& bc = *it;
            const Edge* ac = edge_lookup(a, bc.slot_b);
            if (ac == nullptr)
                continue;

            counts.structural += static_cast<std::uint64_t>(ab.end - ab.begin) *
                                 (bc.end - bc.begin) * (ac->end - ac->begin);

            for (std::size_t i = ab.begin; i < ab.end; ++i) {
                for (std::size_t j = bc.begin; j < bc.end; ++j) {
                    if (pairs[i].level_b != pairs[j].level_a) // both replicas in slot b
                        continue;
                    for (std::size_t k = ac->begin; k < ac->end; ++k) {
                        if (pairs[i].level_a != pairs[k].level_a) // slot a
                            continue;
                        if (pairs[j].level_b != pairs[k].level_b) // slot c
                            continue;
                        ++counts.blocking;
                        if (blocking_users != nullptr) {
                            blocking_users->push_back(pairs[i].user_id);
                            blocking_users->push_back(pairs[j].user_id);
                            blocking_users->push_back(pairs[k].user_id);
                        }
                    }
                }
            }
        }
    }
}

void count_triple_sets(std::vector<TripleUser>& triples,
                       SetCounts& counts,
                       std::vector<int>* blocking_users)
{
    std::sort(triples.begin(), triples.end(), [](const TripleUser& x, const TripleUser& y) {
        if (x.slots != y.slots)
            return x.slots < y.slots;
        if (x.levels != y.levels)
            return x.levels < y.levels;
        return x.user_id < y.user_id;
    });

    std::size_t group_start = 0;
    while (group_start < triples.size()) {
        std::size_t group_end = group_start;
        while (group_end < triples.size() && triples[group_end].slots == triples[group_start].slots)
            ++group_end;

        const std::uint64_t group_size = group_end - group_start;
        counts.structural += group_size * (group_size - 1) / 2;

        std::size_t run_start = group_start;
        while (run_start < group_end) {
            std::size_t run_end = run_start;
            while (run_end < group_end &&
                   triples[run_end].levels == triples[run_start].levels)
                ++run_end;
            const std::uint64_t run_size = run_end - run_start;
            counts.blocking += run_size * (run_size - 1) / 2;
            if (blocking_users != nullptr && run_size >= 2)
                for (std::size_t i = run_start; i < run_end; ++i)
                    blocking_users->push_back(triples[i].user_id);
            run_start = run_end;
        }
        group_start = group_end;
    }
}

void sort_unique(std::vector<int>& values)
{
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
}

FrameCensus run_census(const FrameInstance& frame,
                       std::array<std::vector<int>, 3>* blocking_users)
{
    Workspace& ws = workspace;
    ws.pairs.clear();
    ws.triples.clear();
    for (const UserTransmission& user : frame.users) {
        if (user.degree() == 2)
            ws.pairs.push_back({user.slots[0], user.slots[1], user.levels[0], user.levels[1],
                                user.user_id});
        else if (user.degree() == 3)
            ws.triples.push_back({{user.slots[0], user.slots[1], user.slots[2]},
                                  {user.levels[0], user.levels[1], user.levels[2]},
                                  user.user_id});
    }

    FrameCensus result;
    auto* s1_users = blocking_users != nullptr ? &(*blocking_users)[0] : nullptr;
    auto* s2_users = blocking_users != nullptr ? &(*blocking_users)[1] : nullptr;
    auto* s3_users = blocking_users != nullptr ? &(*blocking_users)[2] : nullptr;

    count_pair_sets(ws.pairs, result.s1, ws.edges, s1_users);
    count_triangles(ws.pairs, ws.edges, result.s2, s2_users);
    count_triple_sets(ws.triples, result.s3, s3_users);

    if (blocking_users != nullptr)
        for (auto& users : *blocking_users)
            sort_unique(users);
    return result;
}

} // namespace

FrameCensus census(const FrameInstance& frame)
{
    return run_census(frame, nullptr);
}

CensusDetail census_detail(const FrameInstance& frame)
{
    CensusDetail detail;
    detail.counts = run_census(frame, &detail.blocking_users);
    return detail;
}

std::array<SetExpectation, 3> expected_counts(const SystemConfig& config)
{
    std::array<SetExpectation, 3> expectations;
    for (const StoppingSetSpec& set : stopping_set_catalog()) {
        const double qualifying =
            config.dist().lambda_at(set.qualifying_degree) * config.users();
        const double beta =
            qualifying > 0.0
                ? poisson_bin_parameter({qualifying, effective_bins(set.id, config.slots())},
                                        set.users_involved)
                : 0.0;
        const double match = std::pow(static_cast<double>(config.ladder().level_count()),
                                      -set.slots_involved);
        expectations[static_cast<std::size_t>(set.id)] = {beta, beta * match};
    }
    return expectations;
}

} // namespace nomairsa
