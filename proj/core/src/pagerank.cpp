#include "regrank/pagerank.hpp"

#include <cmath>
#include <stdexcept>

#include "regrank/errors.hpp"

namespace regrank {

ScoreVector personalized_pagerank(const ProjectedGraph& g, std::uint32_t source_row,
                                  const PprConfig& cfg) {
    if (!(cfg.alpha >= 0.0 && cfg.alpha < 1.0))
        throw std::invalid_argument("damping factor must lie in [0, 1)");
    if (cfg.iterations < 1) throw std::invalid_argument("iterations must be >= 1");
    if (source_row >= g.size()) throw NotFoundError("source row outside the roster");

    const std::uint32_t n = g.size();
    const SparseMatrix& m = g.adjacency;
    std::vector<double> p(n, 0.0), next(n, 0.0);
    p[source_row] = 1.0;

    ScoreVector out;
    out.target_row = source_row;

    for (std::uint32_t it = 0; it < cfg.iterations; ++it) {
        std::fill(next.begin(), next.end(), 0.0);
        double dangling_mass = 0.0;
        for (std::uint32_t i = 0; i < n; ++i) {
            double pi = p[i];
            if (pi == 0.0) continue;
            std::size_t k = m.row_ptr[i], end = m.row_ptr[i + 1];
            if (k == end) {
                dangling_mass += pi;
                continue;
            }
            for (; k < end; ++k) next[m.col[k]] += pi * m.val[k];
        }
        // mass drained by dangling rows re-teleports to the personalization
        next[source_row] += dangling_mass;
        double delta = 0.0;
        for (std::uint32_t i = 0; i < n; ++i) {
            double v = cfg.alpha * next[i];
            if (i == source_row) v += 1.0 - cfg.alpha;
            delta += std::abs(v - p[i]);
            next[i] = v;
        }
        p.swap(next);
        out.iterations_run = it + 1;
        out.last_delta = delta;
        if (cfg.epsilon > 0.0 && delta < cfg.epsilon) break;
    }

    out.values = std::move(p);
    return out;
}

ScoreVector personalized_pagerank(const ProjectedGraph& g, const std::string& user,
                                  const PprConfig& cfg) {
    auto it = g.user_row.find(user);
    if (it == g.user_row.end()) throw NotFoundError("unknown user: " + user);
    return personalized_pagerank(g, it->second, cfg);
}

} // namespace regrank
