#include "regrank/ranking.hpp"

#include <algorithm>

#include "regrank/errors.hpp"
#include "regrank/ids.hpp"

namespace regrank {

RecommendationList rank_items(const ProjectedGraph& g, const ScoreVector& scores,
                              const std::vector<std::string>& candidates) {
    RecommendationList out;
    out.entries.reserve(candidates.size());
    for (const std::string& item : candidates) {
        double value = 0.0;
        auto it = g.item_rep_rows.find(item);
        if (it != g.item_rep_rows.end()) {
            if (it->second.first >= 0) value += scores.values[it->second.first];
            if (it->second.second >= 0) value -= scores.values[it->second.second];
        }
        out.entries.push_back({item, value});
    }
    std::sort(out.entries.begin(), out.entries.end(), [](const RankedItem& a, const RankedItem& b) {
        if (a.value != b.value) return a.value > b.value;
        return label_less(a.item, b.item);
    });
    return out;
}

RecommendationList recommend(const ProjectedGraph& g, const std::string& user, std::size_t n,
                             const std::set<std::string>& training_items, const PprConfig& cfg) {
    if (n < 1) throw std::invalid_argument("top-N must be >= 1");
    ScoreVector scores = personalized_pagerank(g, user, cfg);

    // candidate filtering happens before ranking
    std::vector<std::string> candidates;
    candidates.reserve(g.item_rep_rows.size());
    for (const std::string& item : g.item_labels) {
        if (!training_items.contains(item)) candidates.push_back(item);
    }

    RecommendationList ranked = rank_items(g, scores, candidates);
    if (ranked.entries.size() > n) ranked.entries.resize(n);
    return ranked;
}

} // namespace regrank
