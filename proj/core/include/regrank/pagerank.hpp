#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "regrank/projection.hpp"

namespace regrank {

// Damping 0.85 and 20 fixed iterations mirror the reference setup; a
// positive epsilon enables early stop on the L1 change between iterates.
struct PprConfig {
    double alpha = 0.85;
    std::uint32_t iterations = 20;
    double epsilon = 0.0;
};

struct ScoreVector {
    std::vector<double> values; // one per roster row, nonnegative, sums to 1
    std::uint32_t target_row = 0;
    std::uint32_t iterations_run = 0;
    double last_delta = 0.0;
};

// Power iteration of the teleporting walk personalized to `source_row`.
// Mass leaving dangling rows re-teleports to the personalization vector, so
// the result is a proper distribution.
ScoreVector personalized_pagerank(const ProjectedGraph& g, std::uint32_t source_row,
                                  const PprConfig& cfg);

// Label-based convenience; throws NotFoundError for unknown users.
ScoreVector personalized_pagerank(const ProjectedGraph& g, const std::string& user,
                                  const PprConfig& cfg);

} // namespace regrank
