#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "regrank/pagerank.hpp"
#include "regrank/projection.hpp"

namespace regrank {

struct RankedItem {
    std::string item;
    double value = 0.0; // score(i_d) - score(i_u)
};

// Strictly ordered by descending rank value; ties broken by ascending item
// identifier (numeric-aware). Training items never appear.
struct RecommendationList {
    std::vector<RankedItem> entries;
};

// rank(i) = score(i_d) - score(i_u), a missing representative contributing 0.
// Candidates absent from the graph rank 0 as well.
RecommendationList rank_items(const ProjectedGraph& g, const ScoreVector& scores,
                              const std::vector<std::string>& candidates);

// Full pipeline for one user: PPR on `g`, candidates = all ranked items of
// the graph minus `training_items`, top `n` kept. Throws NotFoundError for
// unknown users.
RecommendationList recommend(const ProjectedGraph& g, const std::string& user, std::size_t n,
                             const std::set<std::string>& training_items, const PprConfig& cfg);

} // namespace regrank
