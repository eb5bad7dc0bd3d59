#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "regrank/metapath.hpp"
#include "regrank/preference.hpp"

namespace regrank {

// A node of the TPG addressed by layer and index.
struct TpgNode {
    NodeType type;
    NodeId id;

    bool operator==(const TpgNode& other) const = default;
};

struct Walk {
    std::vector<TpgNode> nodes;

    TypeSequence types() const;
};

std::string walk_label(const TripartitePreferenceGraph& g, const Walk& w);

// All walks from `start` of at most `max_len` edges, treating TPG edges as
// undirected. Exponential in `max_len`; meant for small oracle graphs only.
// Throws ResourceLimitError once more than `cap` walks would be produced.
std::vector<Walk> enumerate_paths(const TripartitePreferenceGraph& g, TpgNode start,
                                  std::size_t max_len, std::size_t cap = 2'000'000);

} // namespace regrank
