#include "regrank/walks.hpp"

#include "regrank/errors.hpp"

namespace regrank {

TypeSequence Walk::types() const {
    TypeSequence out;
    out.reserve(nodes.size());
    for (const auto& n : nodes) out.push_back(n.type);
    return out;
}

std::string walk_label(const TripartitePreferenceGraph& g, const Walk& w) {
    std::string out;
    for (std::size_t i = 0; i < w.nodes.size(); ++i) {
        if (i) out += " - ";
        const TpgNode& n = w.nodes[i];
        switch (n.type) {
        case NodeType::U: out += g.users.label(n.id); break;
        case NodeType::P: out += g.pref_label(n.id); break;
        case NodeType::R: out += g.rep_label(n.id); break;
        }
    }
    return out;
}

namespace {

struct Enumerator {
    const TripartitePreferenceGraph& g;
    std::size_t max_len;
    std::size_t cap;
    std::vector<Walk>& out;
    Walk current;

    void emit() {
        if (out.size() >= cap)
            throw ResourceLimitError("walk enumeration exceeded cap of " + std::to_string(cap));
        out.push_back(current);
    }

    void visit(TpgNode node, std::size_t depth) {
        current.nodes.push_back(node);
        emit();
        if (depth < max_len) {
            switch (node.type) {
            case NodeType::U:
                for (NodeId p : g.user_prefs[node.id]) visit({NodeType::P, p}, depth + 1);
                break;
            case NodeType::P:
                for (NodeId u : g.pref_users[node.id]) visit({NodeType::U, u}, depth + 1);
                for (NodeId r : g.pref_reps[node.id]) visit({NodeType::R, r}, depth + 1);
                break;
            case NodeType::R:
                for (NodeId p : g.rep_prefs[node.id]) visit({NodeType::P, p}, depth + 1);
                break;
            }
        }
        current.nodes.pop_back();
    }
};

} // namespace

std::vector<Walk> enumerate_paths(const TripartitePreferenceGraph& g, TpgNode start,
                                  std::size_t max_len, std::size_t cap) {
    std::vector<Walk> out;
    Enumerator e{g, max_len, cap, out, {}};
    e.visit(start, 0);
    return out;
}

} // namespace regrank
