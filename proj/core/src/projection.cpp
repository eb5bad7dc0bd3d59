#include "regrank/projection.hpp"

#include <algorithm>
#include <cmath>

#include "regrank/errors.hpp"
#include "regrank/walks.hpp"

namespace regrank {

const char* variant_name(Variant v) {
    switch (v) {
    case Variant::unc: return "unc";
    case Variant::pnc: return "pnc";
    case Variant::rnc: return "rnc";
    case Variant::grank: return "grank";
    case Variant::generic: return "generic";
    }
    return "?";
}

std::optional<Variant> variant_of_name(std::string_view name) {
    if (name == "unc") return Variant::unc;
    if (name == "pnc") return Variant::pnc;
    if (name == "rnc") return Variant::rnc;
    if (name == "grank") return Variant::grank;
    return std::nullopt;
}

BasicTransitions basic_transitions(const TripartitePreferenceGraph& g) {
    const auto nu = static_cast<std::uint32_t>(g.user_count());
    const auto np = static_cast<std::uint32_t>(g.pref_count());
    const auto nr = static_cast<std::uint32_t>(g.rep_count());

    SparseMatrixBuilder up(nu, np), pu(np, nu), pr(np, nr), rp(nr, np);

    for (NodeId u = 0; u < nu; ++u) {
        double w = 1.0 / static_cast<double>(g.user_degree(u));
        for (NodeId p : g.user_prefs[u]) up.add(u, p, w);
    }
    for (NodeId p = 0; p < np; ++p) {
        double w = 1.0 / static_cast<double>(g.pref_degree(p));
        for (NodeId u : g.pref_users[p]) pu.add(p, u, w);
        for (NodeId r : g.pref_reps[p]) pr.add(p, r, w);
    }
    for (NodeId r = 0; r < nr; ++r) {
        double w = 1.0 / static_cast<double>(g.rep_degree(r));
        for (NodeId p : g.rep_prefs[r]) rp.add(r, p, w);
    }

    return BasicTransitions{
        {up.build(), NodeType::U, NodeType::P},
        {pu.build(), NodeType::P, NodeType::U},
        {pr.build(), NodeType::P, NodeType::R},
        {rp.build(), NodeType::R, NodeType::P},
    };
}

namespace {

std::uint32_t layer_size(const BasicTransitions& b, NodeType t) {
    switch (t) {
    case NodeType::U: return b.up.m.rows;
    case NodeType::P: return b.pu.m.rows;
    case NodeType::R: return b.rp.m.rows;
    }
    return 0;
}

const SparseMatrix& step_matrix(const BasicTransitions& b, NodeType from, NodeType to) {
    if (from == NodeType::U && to == NodeType::P) return b.up.m;
    if (from == NodeType::P && to == NodeType::U) return b.pu.m;
    if (from == NodeType::P && to == NodeType::R) return b.pr.m;
    if (from == NodeType::R && to == NodeType::P) return b.rp.m;
    throw TypeMismatchError(std::string("no basic transition for step ") + type_char(from) +
                            type_char(to));
}

} // namespace

TypedMatrix metapath_transition(const TypeSequence& path, const BasicTransitions& basics) {
    if (path.empty()) throw TypeMismatchError("empty meta-path");
    if (path.size() == 1)
        return {identity_matrix(layer_size(basics, path[0])), path[0], path[0]};
    SparseMatrix m = step_matrix(basics, path[0], path[1]);
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        m = multiply(m, step_matrix(basics, path[i], path[i + 1]));
    return {std::move(m), path.front(), path.back()};
}

namespace {

void finalize_roster(ProjectedGraph& g, const TripartitePreferenceGraph& tpg, bool with_prefs) {
    g.n_users = static_cast<std::uint32_t>(tpg.user_count());
    g.n_prefs = with_prefs ? static_cast<std::uint32_t>(tpg.pref_count()) : 0;
    g.n_reps = static_cast<std::uint32_t>(tpg.rep_count());
    g.user_labels = tpg.users.labels();
    g.item_labels = tpg.items.labels();
    g.reps = tpg.reps;
    if (with_prefs) g.prefs = tpg.prefs;

    for (std::uint32_t u = 0; u < g.n_users; ++u) g.user_row.emplace(g.user_labels[u], u);
    const std::uint32_t rep0 = g.rep_row_offset();
    for (std::uint32_t r = 0; r < g.n_reps; ++r) {
        const auto& rep = g.reps[r];
        auto [it, inserted] =
            g.item_rep_rows.try_emplace(g.item_labels[rep.item], std::make_pair(-1, -1));
        (rep.side == Side::desirable ? it->second.first : it->second.second) = rep0 + r;
    }

    g.dangling.clear();
    for (std::uint32_t row = 0; row < g.size(); ++row) {
        if (g.adjacency.row_ptr[row] == g.adjacency.row_ptr[row + 1]) g.dangling.push_back(row);
    }
}

} // namespace

bool ProjectedGraph::is_dangling(std::uint32_t row) const {
    return adjacency.row_ptr[row] == adjacency.row_ptr[row + 1];
}

bool ProjectedGraph::operator==(const ProjectedGraph& other) const {
    auto pref_eq = [](const TripartitePreferenceGraph::Pref& a,
                      const TripartitePreferenceGraph::Pref& b) {
        return a.winner == b.winner && a.loser == b.loser;
    };
    auto rep_eq = [](const TripartitePreferenceGraph::Rep& a,
                     const TripartitePreferenceGraph::Rep& b) {
        return a.item == b.item && a.side == b.side;
    };
    return variant == other.variant && description == other.description &&
           n_users == other.n_users && n_prefs == other.n_prefs && n_reps == other.n_reps &&
           user_labels == other.user_labels && item_labels == other.item_labels &&
           std::equal(prefs.begin(), prefs.end(), other.prefs.begin(), other.prefs.end(),
                      pref_eq) &&
           std::equal(reps.begin(), reps.end(), other.reps.begin(), other.reps.end(), rep_eq) &&
           adjacency == other.adjacency && dangling == other.dangling;
}

ProjectedGraph project_metapaths(const TripartitePreferenceGraph& g,
                                 const std::vector<TypeSequence>& theta) {
    if (theta.empty()) throw TypeMismatchError("projection needs at least one meta-path");
    for (const auto& path : theta) {
        if (path.size() < 2)
            throw TypeMismatchError("projection meta-path must have length >= 1: " +
                                    to_string(path));
        if (path.front() == NodeType::P || path.back() == NodeType::P)
            throw TypeMismatchError(
                "projection meta-paths must start and end at users or representatives: " +
                to_string(path));
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            if (!schema_adjacent(path[i], path[i + 1]))
                throw TypeMismatchError("meta-path not valid over the TPG schema: " +
                                        to_string(path));
        }
    }

    BasicTransitions basics = basic_transitions(g);
    const auto nu = static_cast<std::uint32_t>(g.user_count());
    const auto nr = static_cast<std::uint32_t>(g.rep_count());
    const std::uint32_t n = nu + nr;

    // One composite transition per meta-path, accumulated into the combined
    // user+rep adjacency; rows are then normalized jointly across every
    // meta-path sharing the start type.
    SparseMatrixBuilder acc(n, n);
    std::string desc;
    for (const auto& path : theta) {
        if (!desc.empty()) desc += ",";
        desc += to_string(path);
        TypedMatrix t = metapath_transition(path, basics);
        std::uint32_t row0 = t.row_type == NodeType::U ? 0 : nu;
        std::uint32_t col0 = t.col_type == NodeType::U ? 0 : nu;
        for (std::uint32_t r = 0; r < t.m.rows; ++r) {
            for (std::size_t k = t.m.row_ptr[r]; k < t.m.row_ptr[r + 1]; ++k)
                acc.add(row0 + r, col0 + t.m.col[k], t.m.val[k]);
        }
    }

    ProjectedGraph out;
    out.variant = Variant::generic;
    out.description = desc;
    out.adjacency = acc.build();
    std::vector<double> w = out.adjacency.row_sums();
    out.adjacency.scale_rows(w);
    finalize_roster(out, g, false);
    return out;
}

ProjectedGraph project_unc(const TripartitePreferenceGraph& g) {
    ProjectedGraph out = project_metapaths(g, {parse_type_sequence("UPU"),
                                               parse_type_sequence("UPR"),
                                               parse_type_sequence("RPU")});
    out.variant = Variant::unc;
    out.description = to_string(unc_description());
    return out;
}

ProjectedGraph project_pnc(const TripartitePreferenceGraph& g) {
    ProjectedGraph out = project_metapaths(
        g, {parse_type_sequence("UPU"), parse_type_sequence("UPR")});
    out.variant = Variant::pnc;
    out.description = to_string(pnc_description());
    return out;
}

ProjectedGraph project_rnc(const TripartitePreferenceGraph& g) {
    ProjectedGraph out = project_metapaths(
        g, {parse_type_sequence("UPR"), parse_type_sequence("RPU")});
    out.variant = Variant::rnc;
    out.description = to_string(rnc_description());
    return out;
}

ProjectedGraph tpg_transition(const TripartitePreferenceGraph& g) {
    const auto nu = static_cast<std::uint32_t>(g.user_count());
    const auto np = static_cast<std::uint32_t>(g.pref_count());
    const auto nr = static_cast<std::uint32_t>(g.rep_count());
    const std::uint32_t n = nu + np + nr;

    SparseMatrixBuilder acc(n, n);
    for (NodeId u = 0; u < nu; ++u) {
        double w = 1.0 / static_cast<double>(g.user_degree(u));
        for (NodeId p : g.user_prefs[u]) acc.add(u, nu + p, w);
    }
    for (NodeId p = 0; p < np; ++p) {
        double w = 1.0 / static_cast<double>(g.pref_degree(p));
        for (NodeId u : g.pref_users[p]) acc.add(nu + p, u, w);
        for (NodeId r : g.pref_reps[p]) acc.add(nu + p, nu + np + r, w);
    }
    for (NodeId r = 0; r < nr; ++r) {
        double w = 1.0 / static_cast<double>(g.rep_degree(r));
        for (NodeId p : g.rep_prefs[r]) acc.add(nu + np + r, nu + p, w);
    }

    ProjectedGraph out;
    out.variant = Variant::grank;
    out.description = to_string(grank_description());
    out.adjacency = acc.build();
    finalize_roster(out, g, true);
    return out;
}

ProjectedGraph project_variant(const TripartitePreferenceGraph& g, Variant v) {
    switch (v) {
    case Variant::unc: return project_unc(g);
    case Variant::pnc: return project_pnc(g);
    case Variant::rnc: return project_rnc(g);
    case Variant::grank: return tpg_transition(g);
    case Variant::generic: break;
    }
    throw std::invalid_argument("generic projection needs an explicit meta-path set");
}

// ---------------------------------------------------------------------------
// verification oracle

namespace {

// Expands one projected edge into the TPG types it stands for.
void append_edge_types(TypeSequence& seq, NodeType from, NodeType to) {
    (void)from;
    seq.push_back(NodeType::P);
    seq.push_back(to);
}

struct ProjectedWalker {
    const ProjectedGraph& proj;
    const PathExpr& desc;
    std::size_t max_hops;
    std::size_t cap;
    VerifyReport& report;

    std::vector<std::uint32_t> rows;

    NodeType row_type(std::uint32_t row) const {
        return row < proj.n_users ? NodeType::U : NodeType::R;
    }

    void visit(std::uint32_t row, std::size_t hops) {
        rows.push_back(row);
        if (row_type(row) == NodeType::R) check();
        if (hops < max_hops) {
            const auto& m = proj.adjacency;
            for (std::size_t k = m.row_ptr[row]; k < m.row_ptr[row + 1]; ++k)
                visit(m.col[k], hops + 1);
        }
        rows.pop_back();
    }

    void check() {
        if (++report.projected_paths_checked > cap)
            throw ResourceLimitError("projected-path enumeration exceeded cap");
        TypeSequence seq{row_type(rows[0])};
        for (std::size_t i = 1; i < rows.size(); ++i)
            append_edge_types(seq, row_type(rows[i - 1]), row_type(rows[i]));
        if (!matches(desc, seq)) {
            std::string path;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i) path += "->";
                path += std::to_string(rows[i]);
            }
            report.violations.push_back("projected path " + path + " expands to " +
                                        to_string(seq) + " which the description rejects");
        }
    }
};

} // namespace

VerifyReport verify_projection(const TripartitePreferenceGraph& g, const ProjectedGraph& proj,
                               const PathExpr& desc, std::size_t max_len, std::size_t cap) {
    VerifyReport report;

    // Walk counts grow exponentially while distinct type sequences stay in
    // the hundreds, so match results are cached per sequence.
    std::map<TypeSequence, bool> match_cache;
    auto cached_match = [&](const TypeSequence& seq) {
        auto it = match_cache.find(seq);
        if (it != match_cache.end()) return it->second;
        bool r = matches(desc, seq);
        match_cache.emplace(seq, r);
        return r;
    };

    // (a) projected user->rep paths, substituted back into TPG meta-paths,
    // must be matched by the description. Each projected hop is two TPG
    // steps, so max_len/2 hops stay within the walk bound below.
    ProjectedWalker walker{proj, desc, max_len / 2, cap, report, {}};
    for (std::uint32_t u = 0; u < proj.n_users; ++u) walker.visit(u, 0);

    // (b) every description-matched TPG walk must appear in the projection
    // with positive weight on each two-step hop.
    const std::uint32_t rep0 = proj.rep_row_offset();
    for (NodeId u = 0; u < g.user_count(); ++u) {
        auto walks = enumerate_paths(g, {NodeType::U, u}, max_len, cap);
        report.tpg_walks_checked += walks.size();
        for (const Walk& w : walks) {
            TypeSequence seq = w.types();
            if (!cached_match(seq)) continue;
            ++report.matched_walks;
            for (std::size_t i = 0; i + 2 < w.nodes.size(); i += 2) {
                const TpgNode& a = w.nodes[i];
                const TpgNode& b = w.nodes[i + 2];
                std::uint32_t row = a.type == NodeType::U ? a.id : rep0 + a.id;
                std::uint32_t colv = b.type == NodeType::U ? b.id : rep0 + b.id;
                if (proj.adjacency.at(row, colv) <= 0.0) {
                    report.violations.push_back(
                        "matched walk " + walk_label(g, w) + " (" + to_string(seq) +
                        ") has no positive-weight projected edge for hop " +
                        std::to_string(i / 2));
                    break;
                }
            }
        }
    }
    return report;
}

} // namespace regrank
