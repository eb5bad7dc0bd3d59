#include "regrank/metapath.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "regrank/errors.hpp"

namespace regrank {

char type_char(NodeType t) {
    switch (t) {
    case NodeType::U: return 'U';
    case NodeType::P: return 'P';
    case NodeType::R: return 'R';
    }
    return '?';
}

NodeType type_of_char(char c) {
    switch (c) {
    case 'U': return NodeType::U;
    case 'P': return NodeType::P;
    case 'R': return NodeType::R;
    default: throw ParseError(std::string("expected node type U/P/R, got '") + c + "'", 0);
    }
}

std::string to_string(const TypeSequence& s) {
    std::string out;
    out.reserve(s.size());
    for (NodeType t : s) out.push_back(type_char(t));
    return out;
}

TypeSequence parse_type_sequence(std::string_view text) {
    TypeSequence out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        NodeType t;
        try {
            t = type_of_char(text[i]);
        } catch (const ParseError&) {
            throw ParseError(std::string("expected node type U/P/R, got '") + text[i] + "'", i);
        }
        if (!out.empty() && !schema_adjacent(out.back(), t))
            throw TypeMismatchError("types " + std::string(1, type_char(out.back())) + " and " +
                                    std::string(1, type_char(t)) +
                                    " are not adjacent in the TPG schema");
        out.push_back(t);
    }
    if (out.empty()) throw ParseError("empty type sequence", 0);
    return out;
}

PathExprPtr make_atom(NodeType t) {
    auto e = std::make_shared<PathExpr>();
    e->kind = PathExpr::Kind::atom;
    e->first = e->last = e->atom = t;
    return e;
}

PathExprPtr make_join(const PathExprPtr& a, const PathExprPtr& b) {
    auto e = std::make_shared<PathExpr>();
    e->kind = PathExpr::Kind::join;
    e->lhs = a;
    e->rhs = b;
    if (a->last == b->first) {
        e->elide = true;
    } else if (schema_adjacent(a->last, b->first)) {
        e->elide = false;
    } else {
        throw TypeMismatchError(
            std::string("join boundary ") + type_char(a->last) + "/" + type_char(b->first) +
            " violates the constraint: the left operand must end with the type the right one "
            "starts with, or with a schema-adjacent type");
    }
    e->first = a->first;
    e->last = b->last;
    return e;
}

PathExprPtr make_select(std::vector<PathExprPtr> options) {
    if (options.empty()) throw TypeMismatchError("select needs at least one option");
    if (options.size() == 1) return options.front();
    for (const auto& o : options) {
        if (o->first != options.front()->first || o->last != options.front()->last)
            throw TypeMismatchError(
                "select requires every option to share first and last type; got " +
                to_string(*options.front()) + " vs " + to_string(*o));
    }
    auto e = std::make_shared<PathExpr>();
    e->kind = PathExpr::Kind::select;
    e->first = options.front()->first;
    e->last = options.front()->last;
    e->options = std::move(options);
    return e;
}

PathExprPtr make_repeat(const PathExprPtr& a) {
    if (a->first != a->last)
        throw TypeMismatchError("repeat requires equal first and last type; got " + to_string(*a));
    auto e = std::make_shared<PathExpr>();
    e->kind = PathExpr::Kind::repeat;
    e->first = e->last = a->first;
    e->body = a;
    return e;
}

// ---------------------------------------------------------------------------
// parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    PathExprPtr parse() {
        PathExprPtr e = parse_select();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    PathExprPtr parse_select() {
        std::vector<PathExprPtr> options;
        options.push_back(parse_juxt());
        while (peek() == '|') {
            ++pos_;
            options.push_back(parse_juxt());
        }
        return make_select(std::move(options));
    }

    PathExprPtr parse_juxt() {
        PathExprPtr e = parse_postfix();
        while (true) {
            char c = peek();
            if (c == '.') {
                std::size_t dot = pos_;
                ++pos_;
                if (!starts_primary(peek()))
                    throw ParseError("expected operand after '.'", dot + 1);
                e = make_join(e, parse_postfix());
            } else if (starts_primary(c)) {
                e = make_join(e, parse_postfix());
            } else {
                return e;
            }
        }
    }

    static bool starts_primary(char c) {
        return c == 'U' || c == 'P' || c == 'R' || c == '(' || c == '[';
    }

    PathExprPtr parse_postfix() {
        PathExprPtr e = parse_primary();
        while (peek() == '*') {
            ++pos_;
            e = make_repeat(e);
        }
        return e;
    }

    PathExprPtr parse_primary() {
        char c = peek();
        if (c == '(' || c == '[') {
            char closing = c == '(' ? ')' : ']';
            std::size_t open = pos_;
            ++pos_;
            PathExprPtr e = parse_select();
            if (peek() != closing)
                throw ParseError(std::string("missing '") + closing + "' for group opened", open);
            ++pos_;
            return e;
        }
        if (c == 'U' || c == 'P' || c == 'R') {
            ++pos_;
            return make_atom(type_of_char(c));
        }
        if (c == '\0') throw ParseError("unexpected end of description", pos_);
        throw ParseError(std::string("unexpected '") + c + "'", pos_);
    }
};

} // namespace

PathExprPtr parse_description(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// printing

namespace {

void print(const PathExpr& e, std::string& out, bool parenthesize_select) {
    switch (e.kind) {
    case PathExpr::Kind::atom: out.push_back(type_char(e.atom)); return;
    case PathExpr::Kind::join:
        print(*e.lhs, out, true);
        if (e.elide) out.push_back('.');
        print(*e.rhs, out, true);
        return;
    case PathExpr::Kind::select: {
        if (parenthesize_select) out.push_back('(');
        bool first = true;
        for (const auto& o : e.options) {
            if (!first) out.push_back('|');
            first = false;
            print(*o, out, false);
        }
        if (parenthesize_select) out.push_back(')');
        return;
    }
    case PathExpr::Kind::repeat: {
        bool wrap = e.body->kind != PathExpr::Kind::atom;
        if (wrap) out.push_back('(');
        print(*e.body, out, false);
        if (wrap) out.push_back(')');
        out.push_back('*');
        return;
    }
    }
}

} // namespace

std::string to_string(const PathExpr& e) {
    std::string out;
    print(e, out, false);
    return out;
}

// ---------------------------------------------------------------------------
// matching (memoized recursion over subsequence spans)

namespace {

class Matcher {
public:
    Matcher(const TypeSequence& s) : s_(s) {}

    bool match(const PathExpr& e, std::size_t i, std::size_t j) {
        auto key = std::make_tuple(&e, i, j);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        bool r = compute(e, i, j);
        memo_.emplace(key, r);
        return r;
    }

private:
    const TypeSequence& s_;
    std::map<std::tuple<const PathExpr*, std::size_t, std::size_t>, bool> memo_;

    bool compute(const PathExpr& e, std::size_t i, std::size_t j) {
        switch (e.kind) {
        case PathExpr::Kind::atom: return i == j && s_[i] == e.atom;
        case PathExpr::Kind::select:
            return std::any_of(e.options.begin(), e.options.end(),
                               [&](const PathExprPtr& o) { return match(*o, i, j); });
        case PathExpr::Kind::join:
            if (e.elide) {
                for (std::size_t k = i; k <= j; ++k) {
                    if (s_[k] != e.lhs->last) continue;
                    if (match(*e.lhs, i, k) && match(*e.rhs, k, j)) return true;
                }
            } else {
                for (std::size_t k = i; k < j; ++k) {
                    if (match(*e.lhs, i, k) && match(*e.rhs, k + 1, j)) return true;
                }
            }
            return false;
        case PathExpr::Kind::repeat:
            if (i == j && s_[i] == e.first) return true;
            for (std::size_t k = i + 1; k <= j; ++k) {
                if (s_[k] != e.first) continue;
                if (match(*e.body, i, k) && match(e, k, j)) return true;
            }
            return false;
        }
        return false;
    }
};

} // namespace

bool matches(const PathExpr& d, const TypeSequence& s) {
    if (s.empty()) return false;
    return Matcher(s).match(d, 0, s.size() - 1);
}

// ---------------------------------------------------------------------------
// explicit denotation (independent of the matcher)

std::set<TypeSequence> enumerate_sequences(const PathExpr& d, std::size_t max_nodes) {
    switch (d.kind) {
    case PathExpr::Kind::atom: return {TypeSequence{d.atom}};
    case PathExpr::Kind::select: {
        std::set<TypeSequence> out;
        for (const auto& o : d.options) {
            auto sub = enumerate_sequences(*o, max_nodes);
            out.insert(sub.begin(), sub.end());
        }
        return out;
    }
    case PathExpr::Kind::join: {
        auto left = enumerate_sequences(*d.lhs, max_nodes);
        auto right = enumerate_sequences(*d.rhs, max_nodes);
        std::set<TypeSequence> out;
        for (const auto& x : left) {
            for (const auto& y : right) {
                TypeSequence z = x;
                if (d.elide) {
                    if (x.back() != y.front()) continue; // pair not joinable
                    z.insert(z.end(), y.begin() + 1, y.end());
                } else {
                    z.insert(z.end(), y.begin(), y.end());
                }
                if (z.size() <= max_nodes) out.insert(std::move(z));
            }
        }
        return out;
    }
    case PathExpr::Kind::repeat: {
        auto base = enumerate_sequences(*d.body, max_nodes);
        std::set<TypeSequence> out{TypeSequence{d.first}};
        std::vector<TypeSequence> frontier(out.begin(), out.end());
        while (!frontier.empty()) {
            std::vector<TypeSequence> next;
            for (const auto& x : frontier) {
                for (const auto& b : base) {
                    if (x.back() != b.front()) continue;
                    TypeSequence z = x;
                    z.insert(z.end(), b.begin() + 1, b.end());
                    if (z.size() <= max_nodes && out.insert(z).second) next.push_back(std::move(z));
                }
            }
            frontier = std::move(next);
        }
        return out;
    }
    }
    return {};
}

// ---------------------------------------------------------------------------
// simplification per the repeat/join rewrite rules

namespace {

// An expression denoting exactly one sequence (atoms and joins of such).
bool literal_sequence(const PathExpr& e, TypeSequence& out) {
    switch (e.kind) {
    case PathExpr::Kind::atom: out.push_back(e.atom); return true;
    case PathExpr::Kind::join: {
        if (!literal_sequence(*e.lhs, out)) return false;
        TypeSequence right;
        if (!literal_sequence(*e.rhs, right)) return false;
        out.insert(out.end(), right.begin() + (e.elide ? 1 : 0), right.end());
        return true;
    }
    default: return false;
    }
}

PathExprPtr chain_of(const TypeSequence& seq) {
    PathExprPtr e = make_atom(seq.front());
    for (std::size_t i = 1; i < seq.size(); ++i) e = make_join(e, make_atom(seq[i]));
    return e;
}

// Flattens a join tree into its factor list.
void flatten_join(const PathExprPtr& e, std::vector<PathExprPtr>& out) {
    if (e->kind == PathExpr::Kind::join) {
        flatten_join(e->lhs, out);
        flatten_join(e->rhs, out);
    } else {
        out.push_back(e);
    }
}

} // namespace

PathExprPtr simplify(const PathExprPtr& e) {
    switch (e->kind) {
    case PathExpr::Kind::atom: return e;
    case PathExpr::Kind::select: {
        std::vector<PathExprPtr> options;
        options.reserve(e->options.size());
        for (const auto& o : e->options) options.push_back(simplify(o));
        return make_select(std::move(options));
    }
    case PathExpr::Kind::repeat: return make_repeat(simplify(e->body));
    case PathExpr::Kind::join: break;
    }

    std::vector<PathExprPtr> factors;
    flatten_join(e, factors);
    for (auto& f : factors) f = simplify(f);

    // Where a repeat meets a plain sequence over a shared boundary type, the
    // sequence side gives up the shared type: [a*].[t1..tn] = (a)* t2..tn and
    // [t1..tn].[a*] = t1..t{n-1} (a)*.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
            const PathExprPtr& a = factors[i];
            const PathExprPtr& b = factors[i + 1];
            if (a->last != b->first) continue; // append boundary, nothing shared
            TypeSequence lit;
            if (a->kind == PathExpr::Kind::repeat && literal_sequence(*b, lit)) {
                lit.erase(lit.begin());
                if (lit.empty())
                    factors.erase(factors.begin() + i + 1);
                else
                    factors[i + 1] = chain_of(lit);
                changed = true;
                break;
            }
            lit.clear();
            if (b->kind == PathExpr::Kind::repeat && literal_sequence(*a, lit)) {
                lit.pop_back();
                if (lit.empty())
                    factors.erase(factors.begin() + i);
                else
                    factors[i] = chain_of(lit);
                changed = true;
                break;
            }
        }
    }

    PathExprPtr out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) out = make_join(out, factors[i]);
    return out;
}

// ---------------------------------------------------------------------------
// canned descriptions

PathExprPtr unc_description() {
    static const PathExprPtr e = parse_description("(UPU|UPRPU)*PR");
    return e;
}

PathExprPtr pnc_description() {
    static const PathExprPtr e = parse_description("U[PUP]*R");
    return e;
}

PathExprPtr rnc_description() {
    static const PathExprPtr e = parse_description("UP(RPUPR)*");
    return e;
}

PathExprPtr grank_description() {
    static const PathExprPtr e = parse_description("U[PUP|PRP]*R");
    return e;
}

PathExprPtr resolve_description(std::string_view name_or_expr) {
    if (name_or_expr == "unc") return unc_description();
    if (name_or_expr == "pnc") return pnc_description();
    if (name_or_expr == "rnc") return rnc_description();
    if (name_or_expr == "grank") return grank_description();
    return parse_description(name_or_expr);
}

} // namespace regrank
