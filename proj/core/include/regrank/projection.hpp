#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "regrank/metapath.hpp"
#include "regrank/preference.hpp"
#include "regrank/sparse.hpp"

namespace regrank {

enum class Variant : std::uint8_t { unc = 0, pnc = 1, rnc = 2, grank = 3, generic = 4 };

const char* variant_name(Variant v);
std::optional<Variant> variant_of_name(std::string_view name);

// Basic one-step transition matrices of the TPG, with N(v) the full degree
// of v (all adjacent nodes regardless of type). Rows of `up` and `rp` are
// stochastic; `pu` and `pr` rows sum to users/(users+2) and 2/(users+2).
struct BasicTransitions {
    TypedMatrix up; // users x prefs
    TypedMatrix pu; // prefs x users
    TypedMatrix pr; // prefs x reps
    TypedMatrix rp; // reps x prefs
};

BasicTransitions basic_transitions(const TripartitePreferenceGraph& g);

// Ordered product of basic matrices along a schema-valid type sequence.
// A single-type sequence yields the identity over that layer.
TypedMatrix metapath_transition(const TypeSequence& path, const BasicTransitions& basics);

// Weighted directed graph over users and representatives (or every TPG node
// for the raw-walk variant). Non-dangling rows of `adjacency` sum to 1.
struct ProjectedGraph {
    Variant variant = Variant::generic;
    std::string description; // meta-path set the projection realizes

    std::uint32_t n_users = 0;
    std::uint32_t n_prefs = 0; // nonzero only for the raw-walk variant
    std::uint32_t n_reps = 0;

    std::vector<std::string> user_labels;
    std::vector<std::string> item_labels;
    std::vector<TripartitePreferenceGraph::Pref> prefs; // raw-walk roster only
    std::vector<TripartitePreferenceGraph::Rep> reps;

    SparseMatrix adjacency;             // square over the roster
    std::vector<std::uint32_t> dangling; // sorted rows with zero out-weight

    std::unordered_map<std::string, std::uint32_t> user_row;
    // item label -> row of i_d / i_u; missing side = -1
    std::unordered_map<std::string, std::pair<std::int64_t, std::int64_t>> item_rep_rows;

    std::uint32_t size() const { return n_users + n_prefs + n_reps; }
    std::uint32_t rep_row_offset() const { return n_users + n_prefs; }
    bool is_dangling(std::uint32_t row) const;

    bool operator==(const ProjectedGraph& other) const;
};

// Projection over an explicit meta-path set per the generic definition: one
// block per (start,end) type pair, rows normalized jointly across every
// block sharing the start type. Each path must be schema-valid, start and
// end in {U, R}, and have length >= 1.
ProjectedGraph project_metapaths(const TripartitePreferenceGraph& g,
                                 const std::vector<TypeSequence>& theta);

ProjectedGraph project_unc(const TripartitePreferenceGraph& g); // {UPU, UPR, RPU}
ProjectedGraph project_pnc(const TripartitePreferenceGraph& g); // {UPU, UPR}
ProjectedGraph project_rnc(const TripartitePreferenceGraph& g); // {UPR, RPU}

// Uniform random walk on the undirected TPG itself (the baseline's graph):
// row of node v holds 1/degree(v) on each neighbor.
ProjectedGraph tpg_transition(const TripartitePreferenceGraph& g);

ProjectedGraph project_variant(const TripartitePreferenceGraph& g, Variant v);

// Brute-force cross-check of a projection against its description:
//  (a) every user->representative path in the projected graph, expanded edge
//      by edge into its defining TPG meta-path, is matched by `desc`;
//  (b) every TPG walk of at most `max_len` edges whose type sequence is
//      matched by `desc` maps onto positive-weight projected edges.
struct VerifyReport {
    std::size_t projected_paths_checked = 0;
    std::size_t tpg_walks_checked = 0;
    std::size_t matched_walks = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

VerifyReport verify_projection(const TripartitePreferenceGraph& g, const ProjectedGraph& proj,
                               const PathExpr& desc, std::size_t max_len,
                               std::size_t cap = 2'000'000);

} // namespace regrank
