#pragma once

// Test-only brute-force oracles, kept independent of the implementation
// paths they check.

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "regrank/errors.hpp"
#include "regrank/metapath.hpp"
#include "regrank/preference.hpp"
#include "regrank/projection.hpp"
#include "regrank/ratings.hpp"

namespace regrank::testing {

// Random rating table: `users` users, each rating a random subset of
// `items` items, per-user count drawn from [min_ratings, max_ratings].
inline RatingTable random_table(std::uint64_t seed, int users, int items, int min_ratings,
                                int max_ratings, RatingScale scale = {1.0, 5.0, 1.0}) {
    std::mt19937_64 rng(seed);
    int levels = static_cast<int>(std::lround((scale.max - scale.min) / scale.step)) + 1;
    std::uniform_int_distribution<int> level(0, levels - 1);
    std::uniform_int_distribution<int> count(min_ratings, std::min(max_ratings, items));

    std::vector<Rating> rows;
    for (int u = 0; u < users; ++u) {
        std::vector<int> pool(items);
        for (int i = 0; i < items; ++i) pool[i] = i;
        std::shuffle(pool.begin(), pool.end(), rng);
        int k = count(rng);
        for (int i = 0; i < k; ++i) {
            rows.push_back({"u" + std::to_string(u), "i" + std::to_string(pool[i]),
                            scale.min + scale.step * level(rng)});
        }
    }
    return normalize_ratings(std::move(rows), scale);
}

// Exact two-step walk distribution from a user over the TPG: u steps to one
// of its preferences uniformly, then to any neighbor of that preference
// uniformly over its full degree. Returned as (user-id -> prob, rep-id -> prob).
struct TwoStepWalk {
    std::vector<double> to_users;
    std::vector<double> to_reps;
};

inline TwoStepWalk two_step_walk(const TripartitePreferenceGraph& g, NodeId u) {
    TwoStepWalk out;
    out.to_users.assign(g.user_count(), 0.0);
    out.to_reps.assign(g.rep_count(), 0.0);
    double pu = 1.0 / static_cast<double>(g.user_degree(u));
    for (NodeId p : g.user_prefs[u]) {
        double pp = pu / static_cast<double>(g.pref_degree(p));
        for (NodeId v : g.pref_users[p]) out.to_users[v] += pp;
        for (NodeId r : g.pref_reps[p]) out.to_reps[r] += pp;
    }
    return out;
}

// Dense direct solve of the personalized-PageRank fixed point
// p = alpha * p * M'' + (1 - alpha) * e_s, with dangling rows of M replaced
// by the personalization vector. Gaussian elimination; small graphs only.
inline std::vector<double> solve_ppr_dense(const ProjectedGraph& g, std::uint32_t source,
                                           double alpha) {
    const std::size_t n = g.size();
    if (n > 200) throw std::invalid_argument("dense oracle is for small graphs");

    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (std::uint32_t r = 0; r < n; ++r) {
        if (g.adjacency.row_ptr[r] == g.adjacency.row_ptr[r + 1]) {
            m[r][source] = 1.0; // dangling mass re-teleports to the target
        } else {
            for (std::size_t k = g.adjacency.row_ptr[r]; k < g.adjacency.row_ptr[r + 1]; ++k)
                m[r][g.adjacency.col[k]] = g.adjacency.val[k];
        }
    }

    // A = (I - alpha * M^T), b = (1 - alpha) * e_source
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? 1.0 : 0.0) - alpha * m[j][i];
    }
    std::vector<double> b(n, 0.0);
    b[source] = 1.0 - alpha;

    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[pivot][c])) pivot = r;
        }
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        for (std::size_t r = c + 1; r < n; ++r) {
            double f = a[r][c] / a[c][c];
            if (f == 0.0) continue;
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t r = n; r-- > 0;) {
        double s = b[r];
        for (std::size_t k = r + 1; k < n; ++k) s -= a[r][k] * x[k];
        x[r] = s / a[r][r];
    }
    return x;
}

// All schema-valid type sequences with at most `max_nodes` nodes.
inline std::vector<TypeSequence> all_schema_sequences(std::size_t max_nodes) {
    std::vector<TypeSequence> out, frontier;
    for (NodeType t : {NodeType::U, NodeType::P, NodeType::R}) frontier.push_back({t});
    while (!frontier.empty()) {
        std::vector<TypeSequence> next;
        for (auto& s : frontier) {
            if (s.size() < max_nodes) {
                for (NodeType t : {NodeType::U, NodeType::P, NodeType::R}) {
                    if (schema_adjacent(s.back(), t)) {
                        TypeSequence z = s;
                        z.push_back(t);
                        next.push_back(std::move(z));
                    }
                }
            }
            out.push_back(std::move(s));
        }
        frontier = std::move(next);
    }
    return out;
}

// Random well-typed expression built from the smart constructors.
inline PathExprPtr random_expr(std::mt19937_64& rng, int depth = 3) {
    auto random_atom = [&] {
        static const NodeType types[] = {NodeType::U, NodeType::P, NodeType::R};
        return make_atom(types[rng() % 3]);
    };
    auto random_chain = [&] {
        PathExprPtr e = random_atom();
        std::size_t extra = rng() % 4;
        for (std::size_t i = 0; i < extra; ++i) {
            NodeType next = rng() % 2 == 0 ? NodeType::P
                            : e->last == NodeType::P
                                ? (rng() % 2 ? NodeType::U : NodeType::R)
                                : NodeType::P;
            try {
                e = make_join(e, make_atom(next));
            } catch (const TypeMismatchError&) {
                break;
            }
        }
        return e;
    };
    if (depth <= 0) return random_chain();

    for (int attempt = 0; attempt < 16; ++attempt) {
        try {
            switch (rng() % 4) {
            case 0: return random_chain();
            case 1: {
                PathExprPtr a = random_expr(rng, depth - 1);
                PathExprPtr b = random_expr(rng, depth - 1);
                return make_join(a, b);
            }
            case 2: {
                PathExprPtr a = random_expr(rng, depth - 1);
                PathExprPtr b = random_expr(rng, depth - 1);
                return make_select({a, b});
            }
            default: {
                PathExprPtr a = random_expr(rng, depth - 1);
                return make_repeat(a);
            }
            }
        } catch (const TypeMismatchError&) {
            continue; // incompatible operands; retry
        }
    }
    return random_chain();
}

} // namespace regrank::testing
