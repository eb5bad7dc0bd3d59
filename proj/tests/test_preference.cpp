#include <doctest.h>

#include <algorithm>
#include <random>

#include "regrank/errors.hpp"
#include "regrank/fixtures.hpp"
#include "regrank/preference.hpp"

#include "support/oracles.hpp"

using namespace regrank;

namespace {

RatingTable table_of(std::vector<Rating> rows, RatingScale scale = {1.0, 5.0, 1.0}) {
    return normalize_ratings(std::move(rows), scale);
}

bool has_obs(const ObservationTable& t, const std::string& u, const std::string& i,
             const std::string& j) {
    return agg(u, {i, j}, t);
}

} // namespace

TEST_CASE("derive_preferences emits strict-inequality pairs only") {
    auto t = derive_preferences(table_of({{"u", "A", 5}, {"u", "B", 3}}));
    CHECK(t.rows.size() == 1);
    CHECK(has_obs(t, "u", "A", "B"));

    auto tie = derive_preferences(table_of({{"u", "A", 3}, {"u", "B", 3}}));
    CHECK(tie.rows.empty());

    auto all = derive_preferences(table_of({{"u", "A", 5}, {"u", "B", 3}, {"u", "C", 1}}));
    CHECK(all.rows.size() == 3);
    CHECK(has_obs(all, "u", "A", "B"));
    CHECK(has_obs(all, "u", "A", "C"));
    CHECK(has_obs(all, "u", "B", "C"));
}

TEST_CASE("derive_preferences on empty input") {
    auto t = derive_preferences(RatingTable{});
    CHECK(t.rows.empty());
}

TEST_CASE("agg distinguishes a pair from its reverse") {
    // Lee prefers B over A
    auto t = observations_of({{"Lee", "B", "A"}});
    CHECK(agg("Lee", {"B", "A"}, t));
    CHECK_FALSE(agg("Lee", {"A", "B"}, t));
    CHECK_FALSE(agg("Nobody", {"B", "A"}, t));
}

TEST_CASE("sup follows winner-desirable / loser-undesirable") {
    PreferenceNodeKey p{"B", "A"};
    CHECK(sup(p, {"B", Side::desirable}));
    CHECK(sup(p, {"A", Side::undesirable}));
    CHECK_FALSE(sup(p, {"C", Side::desirable}));
    CHECK_FALSE(sup(p, {"B", Side::undesirable}));
    CHECK_FALSE(sup(p, {"A", Side::desirable}));
}

TEST_CASE("preference antisymmetry: never both orders for one user") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        auto table = testing::random_table(seed, 6, 8, 2, 8);
        auto obs = derive_preferences(table);
        for (const auto& o : obs.rows) {
            bool reversed = std::any_of(obs.rows.begin(), obs.rows.end(), [&](const auto& q) {
                return q.user == o.user && q.preferred == o.other && q.other == o.preferred;
            });
            CHECK_FALSE(reversed);
        }
    }
}

TEST_CASE("count identity against a brute-force pair scan") {
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        auto table = testing::random_table(seed, 5, 10, 2, 10);
        auto obs = derive_preferences(table);
        // brute force per user: count unordered pairs with different values
        std::size_t expected = 0;
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            for (std::size_t j = i + 1; j < table.rows.size(); ++j) {
                if (table.rows[i].user != table.rows[j].user) continue;
                if (table.rows[i].value != table.rows[j].value) ++expected;
            }
        }
        CHECK(obs.rows.size() == expected);
    }
}

TEST_CASE("build_tpg on the minimal one-observation instance") {
    auto g = build_tpg(observations_of({{"u", "A", "B"}}));
    CHECK(g.user_count() == 1);
    CHECK(g.pref_count() == 1);
    CHECK(g.rep_count() == 2); // A_d and B_u only
    CHECK(g.pref_degree(0) == 3);
    CHECK(g.find_rep(g.items.find("A"), Side::desirable) != kInvalidId);
    CHECK(g.find_rep(g.items.find("B"), Side::undesirable) != kInvalidId);
    CHECK(g.find_rep(g.items.find("A"), Side::undesirable) == kInvalidId);
}

TEST_CASE("build_tpg rejects an empty observation set") {
    CHECK_THROWS_AS(build_tpg(ObservationTable{}), DataError);
}

TEST_CASE("users sharing no pairwise comparison have no common preference node") {
    auto g = build_tpg(fixtures::fig2());
    NodeId lee = g.users.find("Lee");
    NodeId martin = g.users.find("Martin");
    REQUIRE(lee != kInvalidId);
    REQUIRE(martin != kInvalidId);
    for (NodeId p : g.user_prefs[lee]) {
        CHECK(std::find(g.user_prefs[martin].begin(), g.user_prefs[martin].end(), p) ==
              g.user_prefs[martin].end());
    }
}

TEST_CASE("every preference supports exactly two representatives") {
    for (std::uint64_t seed : {21u, 22u}) {
        auto g = build_tpg(derive_preferences(testing::random_table(seed, 6, 8, 2, 8)));
        std::size_t pr_edges = 0;
        for (NodeId r = 0; r < g.rep_count(); ++r) {
            CHECK(g.rep_degree(r) >= 1);
            pr_edges += g.rep_prefs[r].size();
        }
        CHECK(pr_edges == 2 * g.pref_count());
        for (NodeId p = 0; p < g.pref_count(); ++p) CHECK(g.pref_degree(p) >= 3);
    }
}

TEST_CASE("rebuilding from permuted observations yields an identical graph") {
    auto table = testing::random_table(31, 6, 8, 2, 8);
    auto obs = derive_preferences(table);

    std::vector<PreferenceObservation> labeled;
    for (std::size_t i = 0; i < obs.rows.size(); ++i) labeled.push_back(obs.labels(i));

    auto g1 = build_tpg(observations_of(labeled));
    std::mt19937_64 rng(7);
    std::shuffle(labeled.begin(), labeled.end(), rng);
    auto g2 = build_tpg(observations_of(labeled));
    CHECK(g1 == g2);

    // and the fused rating-table path builds the same graph
    auto g3 = build_tpg(table);
    CHECK(g1 == g3);
}

TEST_CASE("normalize_ratings rejects duplicates and out-of-scale values") {
    CHECK_THROWS_AS(table_of({{"u", "A", 5}, {"u", "A", 3}}), DataError);
    CHECK_THROWS_AS(table_of({{"u", "A", 6}}), DataError);
    CHECK_THROWS_AS(table_of({{"u", "A", 2.5}}), DataError);
    CHECK_NOTHROW(table_of({{"u", "A", 2.5}}, RatingScale{1.0, 4.0, 0.5}));
}
