#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace regrank {

// Declared rating scale of a dataset, e.g. (1, 5, 1) for MovieLens.
struct RatingScale {
    double min = 1.0;
    double max = 5.0;
    double step = 1.0;

    bool contains(double value) const {
        if (value < min - 1e-9 || value > max + 1e-9) return false;
        double steps = (value - min) / step;
        return std::abs(steps - std::round(steps)) < 1e-6;
    }
};

struct Rating {
    std::string user;
    std::string item;
    double value = 0.0;
};

inline bool rating_key_less(const Rating& a, const Rating& b) {
    if (a.user != b.user) return a.user < b.user;
    return a.item < b.item;
}

// Normalized rating table: canonically sorted by (user, item), at most one
// rating per pair, all values within `scale`.
struct RatingTable {
    std::vector<Rating> rows;
    RatingScale scale;
};

// Sorts, checks the per-pair uniqueness invariant and the scale. Throws
// DataError on violation. Used both by ingestion and by tests that build
// tables by hand.
RatingTable normalize_ratings(std::vector<Rating> rows, const RatingScale& scale);

} // namespace regrank
