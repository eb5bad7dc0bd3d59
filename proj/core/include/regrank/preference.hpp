#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "regrank/ids.hpp"
#include "regrank/ratings.hpp"

namespace regrank {

// One record <user, preferred, other>: `user` prefers `preferred` over `other`.
struct PreferenceObservation {
    std::string user;
    std::string preferred;
    std::string other;
};

// Compact observation set. Labels are interned once; rows are id triples in
// canonical order. Large training splits produce millions of observations,
// so the label strings are not repeated per row.
struct ObservationTable {
    struct Obs {
        NodeId user;
        NodeId preferred;
        NodeId other;
    };

    IdMap users;
    IdMap items;
    std::vector<Obs> rows;

    PreferenceObservation labels(std::size_t row) const {
        const Obs& o = rows[row];
        return {users.label(o.user), items.label(o.preferred), items.label(o.other)};
    }
};

// Emits <u, i, j> for every pair of items u rated with strictly different
// values; ties emit nothing. Input must be a normalized table.
ObservationTable derive_preferences(const RatingTable& ratings);

// Builds an ObservationTable directly from label triples (test convenience).
ObservationTable observations_of(const std::vector<PreferenceObservation>& obs);

enum class Side : std::uint8_t { desirable = 0, undesirable = 1 };

inline const char* side_suffix(Side s) { return s == Side::desirable ? "_d" : "_u"; }

// A pairwise preference <winner, loser> referred to by item labels.
struct PreferenceNodeKey {
    std::string winner; // p^d
    std::string loser;  // p^u
};

struct RepresentativeKey {
    std::string item;
    Side side;
};

// Def. of the agreement relation: 1 iff <u, p.winner, p.loser> is observed.
bool agg(const std::string& user, const PreferenceNodeKey& p, const ObservationTable& obs);

// Def. of the support relation: a preference supports its winner's desirable
// side and its loser's undesirable side.
bool sup(const PreferenceNodeKey& p, const RepresentativeKey& r);

// Tripartite preference graph over users, pairwise-preference nodes and item
// representatives. Immutable once built; safe to share across threads.
struct TripartitePreferenceGraph {
    struct Pref {
        NodeId winner; // item id
        NodeId loser;  // item id
    };
    struct Rep {
        NodeId item;
        Side side;
    };

    IdMap users;
    IdMap items;

    std::vector<Pref> prefs;
    std::vector<Rep> reps;

    // adjacency (all lists sorted ascending)
    std::vector<std::vector<NodeId>> user_prefs; // per user
    std::vector<std::vector<NodeId>> pref_users; // per pref; empty for phantom prefs
    std::vector<std::array<NodeId, 2>> pref_reps; // [winner_d, loser_u]
    std::vector<std::vector<NodeId>> rep_prefs;  // per rep

    std::unordered_map<std::uint64_t, NodeId> pref_by_pair; // winner<<32|loser
    std::unordered_map<std::uint64_t, NodeId> rep_by_key;   // item<<1|side

    std::size_t user_count() const { return user_prefs.size(); }
    std::size_t pref_count() const { return prefs.size(); }
    std::size_t rep_count() const { return reps.size(); }

    std::size_t user_degree(NodeId u) const { return user_prefs[u].size(); }
    std::size_t pref_degree(NodeId p) const { return pref_users[p].size() + 2; }
    std::size_t rep_degree(NodeId r) const { return rep_prefs[r].size(); }

    NodeId find_pref(NodeId winner, NodeId loser) const;
    NodeId find_rep(NodeId item, Side side) const;

    std::string pref_label(NodeId p) const;
    std::string rep_label(NodeId r) const;

    // Adds a preference node no user agrees with. The source formulation
    // instantiates every possible item pair in the preference layer; regular
    // construction here only instantiates observed pairs, and test fixtures
    // use this hook to model the unagreed nodes where they matter.
    NodeId add_phantom_pref(const std::string& winner_item, const std::string& loser_item);

    bool operator==(const TripartitePreferenceGraph& other) const;
};

// Builds the TPG from a non-empty observation set. Node ids are assigned in
// canonical order, so any permutation of the same observations yields an
// identical graph. Throws DataError on empty input.
TripartitePreferenceGraph build_tpg(const ObservationTable& obs);

// Fused derive+build used by the CLI and the evaluation harness.
TripartitePreferenceGraph build_tpg(const RatingTable& train);

} // namespace regrank
