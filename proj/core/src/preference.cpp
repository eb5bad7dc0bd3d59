#include "regrank/preference.hpp"

#include <algorithm>
#include <tuple>

#include "regrank/errors.hpp"

namespace regrank {

namespace {

inline std::uint64_t pair_key(NodeId a, NodeId b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

inline std::uint64_t rep_key(NodeId item, Side side) {
    return (static_cast<std::uint64_t>(item) << 1) | static_cast<std::uint64_t>(side);
}

// Canonical observation order: by (user, preferred, other) labels.
void sort_canonically(ObservationTable& t) {
    std::sort(t.rows.begin(), t.rows.end(),
              [&](const ObservationTable::Obs& a, const ObservationTable::Obs& b) {
                  return std::tie(t.users.label(a.user), t.items.label(a.preferred),
                                  t.items.label(a.other)) <
                         std::tie(t.users.label(b.user), t.items.label(b.preferred),
                                  t.items.label(b.other));
              });
    t.rows.erase(std::unique(t.rows.begin(), t.rows.end(),
                             [](const ObservationTable::Obs& a, const ObservationTable::Obs& b) {
                                 return a.user == b.user && a.preferred == b.preferred &&
                                        a.other == b.other;
                             }),
                 t.rows.end());
}

} // namespace

ObservationTable derive_preferences(const RatingTable& ratings) {
    ObservationTable out;
    std::size_t i = 0;
    const auto& rows = ratings.rows;
    while (i < rows.size()) {
        std::size_t j = i;
        while (j < rows.size() && rows[j].user == rows[i].user) ++j;
        NodeId user = out.users.intern(rows[i].user);
        for (std::size_t a = i; a < j; ++a) {
            for (std::size_t b = a + 1; b < j; ++b) {
                if (rows[a].value == rows[b].value) continue;
                const Rating& hi = rows[a].value > rows[b].value ? rows[a] : rows[b];
                const Rating& lo = rows[a].value > rows[b].value ? rows[b] : rows[a];
                out.rows.push_back({user, out.items.intern(hi.item), out.items.intern(lo.item)});
            }
        }
        i = j;
    }
    sort_canonically(out);
    return out;
}

ObservationTable observations_of(const std::vector<PreferenceObservation>& obs) {
    ObservationTable out;
    for (const auto& o : obs) {
        if (o.preferred == o.other)
            throw DataError("preference observation with identical items: " + o.preferred);
        out.rows.push_back(
            {out.users.intern(o.user), out.items.intern(o.preferred), out.items.intern(o.other)});
    }
    sort_canonically(out);
    return out;
}

bool agg(const std::string& user, const PreferenceNodeKey& p, const ObservationTable& obs) {
    NodeId u = obs.users.find(user);
    NodeId w = obs.items.find(p.winner);
    NodeId l = obs.items.find(p.loser);
    if (u == kInvalidId || w == kInvalidId || l == kInvalidId) return false;
    return std::any_of(obs.rows.begin(), obs.rows.end(), [&](const ObservationTable::Obs& o) {
        return o.user == u && o.preferred == w && o.other == l;
    });
}

bool sup(const PreferenceNodeKey& p, const RepresentativeKey& r) {
    if (r.side == Side::desirable) return r.item == p.winner;
    return r.item == p.loser;
}

NodeId TripartitePreferenceGraph::find_pref(NodeId winner, NodeId loser) const {
    auto it = pref_by_pair.find(pair_key(winner, loser));
    return it == pref_by_pair.end() ? kInvalidId : it->second;
}

NodeId TripartitePreferenceGraph::find_rep(NodeId item, Side side) const {
    auto it = rep_by_key.find(rep_key(item, side));
    return it == rep_by_key.end() ? kInvalidId : it->second;
}

std::string TripartitePreferenceGraph::pref_label(NodeId p) const {
    return items.label(prefs[p].winner) + ">" + items.label(prefs[p].loser);
}

std::string TripartitePreferenceGraph::rep_label(NodeId r) const {
    return items.label(reps[r].item) + side_suffix(reps[r].side);
}

namespace {

NodeId ensure_rep(TripartitePreferenceGraph& g, NodeId item, Side side) {
    auto key = rep_key(item, side);
    auto it = g.rep_by_key.find(key);
    if (it != g.rep_by_key.end()) return it->second;
    NodeId id = static_cast<NodeId>(g.reps.size());
    g.reps.push_back({item, side});
    g.rep_prefs.emplace_back();
    g.rep_by_key.emplace(key, id);
    return id;
}

NodeId ensure_pref(TripartitePreferenceGraph& g, NodeId winner, NodeId loser) {
    auto key = pair_key(winner, loser);
    auto it = g.pref_by_pair.find(key);
    if (it != g.pref_by_pair.end()) return it->second;
    NodeId id = static_cast<NodeId>(g.prefs.size());
    g.prefs.push_back({winner, loser});
    g.pref_users.emplace_back();
    NodeId rd = ensure_rep(g, winner, Side::desirable);
    NodeId ru = ensure_rep(g, loser, Side::undesirable);
    g.pref_reps.push_back({rd, ru});
    g.rep_prefs[rd].push_back(id);
    g.rep_prefs[ru].push_back(id);
    g.pref_by_pair.emplace(key, id);
    return id;
}

} // namespace

NodeId TripartitePreferenceGraph::add_phantom_pref(const std::string& winner_item,
                                                   const std::string& loser_item) {
    if (winner_item == loser_item)
        throw DataError("phantom preference with identical items: " + winner_item);
    NodeId w = items.intern(winner_item);
    NodeId l = items.intern(loser_item);
    if (find_pref(w, l) != kInvalidId)
        throw DataError("preference already present: " + winner_item + ">" + loser_item);
    return ensure_pref(*this, w, l);
}

TripartitePreferenceGraph build_tpg(const ObservationTable& obs) {
    if (obs.rows.empty()) throw DataError("no preferences");

    TripartitePreferenceGraph g;

    // Canonical id assignment: users/items interned in observation order,
    // which sort_canonically made independent of the input order.
    for (const auto& o : obs.rows) {
        NodeId u = g.users.intern(obs.users.label(o.user));
        if (g.user_prefs.size() <= u) g.user_prefs.resize(u + 1);
        NodeId w = g.items.intern(obs.items.label(o.preferred));
        NodeId l = g.items.intern(obs.items.label(o.other));
        if (w == l) throw DataError("preference observation with identical items");
        NodeId p = ensure_pref(g, w, l);
        g.user_prefs[u].push_back(p);
        g.pref_users[p].push_back(u);
    }
    for (auto& v : g.user_prefs) std::sort(v.begin(), v.end());
    for (auto& v : g.pref_users) std::sort(v.begin(), v.end());
    for (auto& v : g.rep_prefs) std::sort(v.begin(), v.end());
    return g;
}

TripartitePreferenceGraph build_tpg(const RatingTable& train) {
    return build_tpg(derive_preferences(train));
}

bool TripartitePreferenceGraph::operator==(const TripartitePreferenceGraph& other) const {
    return users == other.users && items == other.items &&
           std::equal(prefs.begin(), prefs.end(), other.prefs.begin(), other.prefs.end(),
                      [](const Pref& a, const Pref& b) {
                          return a.winner == b.winner && a.loser == b.loser;
                      }) &&
           prefs.size() == other.prefs.size() &&
           std::equal(reps.begin(), reps.end(), other.reps.begin(), other.reps.end(),
                      [](const Rep& a, const Rep& b) {
                          return a.item == b.item && a.side == b.side;
                      }) &&
           reps.size() == other.reps.size() && user_prefs == other.user_prefs &&
           pref_users == other.pref_users && pref_reps == other.pref_reps &&
           rep_prefs == other.rep_prefs;
}

} // namespace regrank
