#include <doctest.h>

#include <random>

#include "regrank/errors.hpp"
#include "regrank/fixtures.hpp"
#include "regrank/metapath.hpp"
#include "regrank/walks.hpp"

#include "support/oracles.hpp"

using namespace regrank;

namespace {

bool match_str(const PathExprPtr& d, const std::string& s) {
    return matches(d, parse_type_sequence(s));
}

} // namespace

TEST_CASE("parsing the canned description strings") {
    CHECK(to_string(parse_description("U[PUP|PRP]*R")) == "U(PUP|PRP)*R");
    CHECK(to_string(parse_description("(UPU|UPRPU)*PR")) == "(UPU|UPRPU)*PR");
    CHECK(to_string(parse_description("UP(RPUPR)*")) == "UP(RPUPR)*");
    CHECK(to_string(parse_description("U[PUP]*R")) == "U(PUP)*R");
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_description(""), ParseError);
    CHECK_THROWS_AS(parse_description("U("), ParseError);
    CHECK_THROWS_AS(parse_description("U)"), ParseError);
    CHECK_THROWS_AS(parse_description("UX"), ParseError);
    CHECK_THROWS_AS(parse_description("U."), ParseError);
    try {
        parse_description("UP(RPUPR");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos() == 2);
    }
}

TEST_CASE("schema violations are type errors") {
    CHECK_THROWS_AS(parse_description("UR"), TypeMismatchError);   // U and R not adjacent
    CHECK_THROWS_AS(parse_description("(UP)*"), TypeMismatchError); // repeat needs equal ends
    CHECK_THROWS_AS(parse_description("UPU|UPR"), TypeMismatchError); // select ends differ
    CHECK_THROWS_AS(parse_type_sequence("UR"), TypeMismatchError);
}

TEST_CASE("join concatenates with a shared boundary type written once") {
    auto up = parse_description("UP");
    auto pr = parse_description("PR");
    auto upr = make_join(up, pr);
    CHECK(match_str(upr, "UPR"));
    TypeSequence uppr{NodeType::U, NodeType::P, NodeType::P, NodeType::R};
    CHECK_FALSE(matches(upr, uppr)); // the shared P is never doubled

    // zero-length operand degenerates to the other side
    auto u = parse_description("U");
    auto join_u_up = make_join(u, up);
    CHECK(match_str(join_u_up, "UP"));

    auto upu = make_join(up, parse_description("PU"));
    CHECK(match_str(upu, "UPU"));
}

TEST_CASE("repeat denotes zero or more self-joins") {
    auto rep = make_repeat(parse_description("UPU"));
    CHECK(match_str(rep, "U"));
    CHECK(match_str(rep, "UPU"));
    CHECK(match_str(rep, "UPUPU"));
    CHECK_FALSE(match_str(rep, "UPUP"));
    CHECK_FALSE(match_str(rep, "UP"));
}

TEST_CASE("matcher agrees with the paper-level walk examples") {
    auto unc = unc_description();
    auto pnc = pnc_description();
    auto rnc = rnc_description();
    auto grank = grank_description();

    CHECK(match_str(grank, "UPRPRPR"));
    CHECK_FALSE(match_str(unc, "UPRPRPR"));
    CHECK_FALSE(match_str(pnc, "UPRPRPR"));
    CHECK_FALSE(match_str(rnc, "UPRPRPR"));

    for (const auto& d : {unc, pnc, rnc, grank}) CHECK(match_str(d, "UPR"));

    CHECK_FALSE(match_str(rnc, "UPUPR")); // only UPR has length <= 5 under RNC
    CHECK(match_str(unc, "UPUPR"));
    CHECK(match_str(pnc, "UPUPR"));
}

TEST_CASE("the three reliable descriptions are pairwise distinguishable") {
    auto unc = unc_description();
    auto pnc = pnc_description();
    auto rnc = rnc_description();

    // verified by explicit expansion as well
    auto unc_set = enumerate_sequences(unc, 7);
    auto pnc_set = enumerate_sequences(pnc, 7);
    auto rnc_set = enumerate_sequences(rnc, 7);

    auto upupr = parse_type_sequence("UPUPR");
    CHECK(unc_set.contains(upupr));
    CHECK(pnc_set.contains(upupr));
    CHECK_FALSE(rnc_set.contains(upupr));

    auto uprpupr = parse_type_sequence("UPRPUPR");
    CHECK(unc_set.contains(uprpupr));
    CHECK(rnc_set.contains(uprpupr));
    CHECK_FALSE(pnc_set.contains(uprpupr));
}

TEST_CASE("the user-based description subsumes the other two up to length 11") {
    auto unc = unc_description();
    auto pnc_set = enumerate_sequences(pnc_description(), 11);
    auto rnc_set = enumerate_sequences(rnc_description(), 11);
    for (const auto& s : pnc_set) CHECK(matches(unc, s));
    for (const auto& s : rnc_set) CHECK(matches(unc, s));
}

TEST_CASE("matcher equals naive expansion on every sequence up to length 11") {
    std::mt19937_64 rng(2024);
    auto sequences = testing::all_schema_sequences(11);
    for (int trial = 0; trial < 60; ++trial) {
        PathExprPtr e = testing::random_expr(rng, 2);
        auto denoted = enumerate_sequences(e, 11);
        for (const auto& s : sequences) {
            CAPTURE(to_string(*e));
            CAPTURE(to_string(s));
            CHECK(matches(e, s) == denoted.contains(s));
        }
    }
}

TEST_CASE("simplify rewrites joins with repeats into the compact form") {
    auto original = parse_description("UP.[PUP|PRP]*.PR");
    auto simplified = simplify(original);
    CHECK(to_string(simplified) == "U(PUP|PRP)*R");
    CHECK(enumerate_sequences(original, 11) == enumerate_sequences(simplified, 11));

    // repeat-free expressions are untouched
    auto plain = parse_description("UPU|UPRPU");
    CHECK(to_string(simplify(plain)) == "UPU|UPRPU");

    // (UPU)*.UPR matches the same set as (UPU)*PR
    auto left = simplify(parse_description("(UPU)*.UPR"));
    auto right = parse_description("(UPU)*PR");
    CHECK(enumerate_sequences(left, 11) == enumerate_sequences(right, 11));
}

TEST_CASE("simplify preserves the matched set on random expressions") {
    std::mt19937_64 rng(77);
    auto sequences = testing::all_schema_sequences(11);
    for (int trial = 0; trial < 200; ++trial) {
        PathExprPtr e = testing::random_expr(rng, 3);
        PathExprPtr s = simplify(e);
        for (const auto& seq : sequences) {
            CAPTURE(to_string(*e));
            CAPTURE(to_string(*s));
            CAPTURE(to_string(seq));
            CHECK(matches(e, seq) == matches(s, seq));
        }
    }
}

TEST_CASE("resolve_description accepts canned names and literal expressions") {
    CHECK(to_string(resolve_description("unc")) == to_string(unc_description()));
    CHECK(to_string(resolve_description("grank")) == to_string(grank_description()));
    CHECK(match_str(resolve_description("UPU"), "UPU"));
    CHECK_THROWS_AS(resolve_description("bogus"), ParseError);
}

TEST_CASE("enumerate_paths lists bounded undirected walks") {
    auto g = build_tpg(observations_of({{"u", "A", "B"}}));

    auto none = enumerate_paths(g, {NodeType::U, 0}, 0);
    REQUIRE(none.size() == 1);
    CHECK(none[0].nodes.size() == 1);

    // 1 + 1 + fan-out of the single preference node (degree 3)
    auto two = enumerate_paths(g, {NodeType::U, 0}, 2);
    CHECK(two.size() == 5);

    CHECK_THROWS_AS(enumerate_paths(g, {NodeType::U, 0}, 6, 10), ResourceLimitError);
}

TEST_CASE("the unreliable-walk fixture contains the detour to A_d") {
    auto fix = fixtures::fig6();
    const auto& g = fix.graph;

    auto walks = enumerate_paths(g, {NodeType::U, fix.jack}, 6);
    auto target = parse_type_sequence("UPRPRPR");
    bool found = false;
    for (const auto& w : walks) {
        if (w.types() == target && w.nodes.back() == TpgNode{NodeType::R, fix.a_d}) {
            found = true;
            break;
        }
    }
    CHECK(found);
}
