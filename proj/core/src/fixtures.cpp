#include "regrank/fixtures.hpp"

namespace regrank {
namespace fixtures {

namespace {

RatingTable table(std::vector<Rating> rows) {
    return normalize_ratings(std::move(rows), RatingScale{1.0, 5.0, 1.0});
}

} // namespace

RatingTable fig2() {
    return table({
        {"Lee", "B", 5}, {"Lee", "A", 2},    // Lee: B over A
        {"Martin", "B", 5}, {"Martin", "C", 2}, // Martin: B over C
    });
}

RatingTable fig3() {
    return table({
        {"Jack", "B", 4}, {"Jack", "D", 4}, {"Jack", "A", 1},                   // B>A, D>A
        {"John", "B", 4}, {"John", "D", 4}, {"John", "C", 4}, {"John", "A", 1}, // B>A, D>A, C>A
        {"Lee", "A", 4}, {"Lee", "D", 1},                                       // A>D
    });
}

Fig6 fig6() {
    Fig6 f;
    f.ratings = table({
        {"Jack", "B", 4}, {"Jack", "C", 4}, {"Jack", "A", 1}, // B>A, C>A
        {"Mary", "B", 5}, {"Mary", "C", 2},                   // B>C
    });
    f.graph = build_tpg(f.ratings);
    // The preference "A over C" that nobody agrees with. It supports A_d and
    // C_u, completing the representative-level detour from Jack's side of the
    // graph to A_d while leaving A_d unreachable along agreed paths.
    f.graph.add_phantom_pref("A", "C");
    f.jack = f.graph.users.find("Jack");
    f.a_d = f.graph.find_rep(f.graph.items.find("A"), Side::desirable);
    f.b_d = f.graph.find_rep(f.graph.items.find("B"), Side::desirable);
    return f;
}

RatingTable fig7() {
    return table({
        {"Mike", "A", 5}, {"Mike", "D", 5}, {"Mike", "B", 1},       // A>B, D>B
        {"Martin", "A", 5}, {"Martin", "D", 5}, {"Martin", "B", 1}, // A>B, D>B
        {"Jack", "A", 4}, {"Jack", "C", 1},                         // A>C
    });
}

} // namespace fixtures
} // namespace regrank
