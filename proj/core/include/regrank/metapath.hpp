#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace regrank {

enum class NodeType : std::uint8_t { U = 0, P = 1, R = 2 };

char type_char(NodeType t);
NodeType type_of_char(char c); // throws ParseError on anything but U/P/R

// Valid edges of the TPG schema: U-P and P-R (traversable both ways).
inline bool schema_adjacent(NodeType a, NodeType b) {
    return (a == NodeType::U && b == NodeType::P) || (a == NodeType::P && b == NodeType::U) ||
           (a == NodeType::P && b == NodeType::R) || (a == NodeType::R && b == NodeType::P);
}

using TypeSequence = std::vector<NodeType>;

std::string to_string(const TypeSequence& s);
// Parses "UPU" into a sequence, rejecting schema-invalid neighbors.
TypeSequence parse_type_sequence(std::string_view text);

// Expression over meta-path string descriptions: atoms U/P/R, join
// (juxtaposition or '.'), select '|', repeat '*'. Every node carries the
// first/last type of the sequences it denotes.
//
// Join comes in two flavors, decided by the operand boundary: when the left
// operand ends with the type the right one starts with, the shared type is
// written once (the classic join); when the boundary types are distinct but
// schema-adjacent the operands are simply concatenated, which is how the
// compact forms like U[PUP|PRP]*R read. Any other boundary is a type error.
class PathExpr {
public:
    enum class Kind { atom, join, select, repeat };

    Kind kind;
    NodeType first;
    NodeType last;

    // atom
    NodeType atom{};
    // join
    std::shared_ptr<const PathExpr> lhs, rhs;
    bool elide = false; // true: shared boundary type written once
    // select
    std::vector<std::shared_ptr<const PathExpr>> options;
    // repeat
    std::shared_ptr<const PathExpr> body;
};

using PathExprPtr = std::shared_ptr<const PathExpr>;

PathExprPtr make_atom(NodeType t);
PathExprPtr make_join(const PathExprPtr& a, const PathExprPtr& b); // throws TypeMismatchError
PathExprPtr make_select(std::vector<PathExprPtr> options);         // throws TypeMismatchError
PathExprPtr make_repeat(const PathExprPtr& a);                     // throws TypeMismatchError

// Grammar: select '|' is lowest, then join (juxtaposition or '.'), '*' binds
// tightest; () and [] both group. Throws ParseError / TypeMismatchError.
PathExprPtr parse_description(std::string_view text);

std::string to_string(const PathExpr& e);
inline std::string to_string(const PathExprPtr& e) { return to_string(*e); }

// True iff `s` is one of the type sequences denoted by `d`.
bool matches(const PathExpr& d, const TypeSequence& s);
inline bool matches(const PathExprPtr& d, const TypeSequence& s) { return matches(*d, s); }

// Explicit denotation of `d`, truncated to sequences of at most `max_nodes`
// nodes. Independent of the matcher; used as its oracle and by tests.
std::set<TypeSequence> enumerate_sequences(const PathExpr& d, std::size_t max_nodes);
inline std::set<TypeSequence> enumerate_sequences(const PathExprPtr& d, std::size_t max_nodes) {
    return enumerate_sequences(*d, max_nodes);
}

// Rewrites joins around repeats into the compact form: a join whose shared
// boundary type sits between a repeat and a plain sequence absorbs that type
// into the sequence side, e.g. UP.[PUP|PRP]*.PR becomes U[PUP|PRP]*R. The
// denoted sequence set is unchanged.
PathExprPtr simplify(const PathExprPtr& e);

// Canned descriptions of the three neighborhood semantics plus the raw-walk
// baseline. Accepted wherever the CLI takes a description: "unc", "pnc",
// "rnc", "grank", or any literal expression.
PathExprPtr unc_description();   // (UPU|UPRPU)*PR
PathExprPtr pnc_description();   // U[PUP]*R
PathExprPtr rnc_description();   // UP(RPUPR)*
PathExprPtr grank_description(); // U[PUP|PRP]*R
PathExprPtr resolve_description(std::string_view name_or_expr);

} // namespace regrank
