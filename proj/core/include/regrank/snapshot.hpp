#pragma once

#include <string>

#include "regrank/projection.hpp"

namespace regrank {

// Binary projected-graph snapshot: format-version header, one length- and
// CRC-framed section per block (rosters, adjacency, dangling rows). Weights
// round-trip bit for bit. load(persist(g)) == g.
void persist_snapshot(const ProjectedGraph& g, const std::string& path);

// Throws SnapshotError on magic/version mismatch or any checksum failure;
// never returns a partially loaded graph.
ProjectedGraph load_snapshot(const std::string& path);

} // namespace regrank
