#include <algorithm>
#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "s2c/error.hpp"
#include "s2c/sql.hpp"

namespace s2c {

const char* compare_op_lexeme(CompareOp op) {
    switch (op) {
        case CompareOp::eq: return "=";
        case CompareOp::lt: return "<";
        case CompareOp::gt: return ">";
        case CompareOp::le: return "<=";
        case CompareOp::ge: return ">=";
        case CompareOp::ne: return "<>";
        case CompareOp::like: return "LIKE";
    }
    return "?";
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == ExprKind::comparison)
        return a.lhs == b.lhs && a.op == b.op && a.rhs == b.rhs &&
               a.joining == b.joining;
    return expr_equal(*a.left, *b.left) && expr_equal(*a.right, *b.right);
}

bool ast_equal(const QueryAst& a, const QueryAst& b) {
    if (a.select_items != b.select_items) return false;
    if (a.from_relations != b.from_relations) return false;
    if (static_cast<bool>(a.where_expr) != static_cast<bool>(b.where_expr))
        return false;
    return !a.where_expr || expr_equal(*a.where_expr, *b.where_expr);
}

namespace {

std::string upper(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out += std::toupper(static_cast<unsigned char>(c));
    return out;
}

const char* const kAggregates[] = {"COUNT", "MIN", "MAX", "SUM", "AVG"};

bool is_aggregate_name(const std::string& up) {
    return std::find(std::begin(kAggregates), std::end(kAggregates), up) !=
           std::end(kAggregates);
}

// Clause keywords outside the fragment, looked for wherever a statement may
// continue so the error names the feature instead of a stray token.
std::string unsupported_clause(const std::string& up) {
    if (up == "GROUP") return "GROUP BY";
    if (up == "ORDER") return "ORDER BY";
    if (up == "HAVING" || up == "LIMIT" || up == "UNION" || up == "JOIN" ||
        up == "DISTINCT")
        return up;
    return "";
}

class Parser {
public:
    explicit Parser(const std::string& sql)
        : tokens_(tokenize(sql)) {
        if (!sql.empty()) {
            end_line_ = 1;
            end_col_ = 1;
            for (char c : sql) {
                if (c == '\n') {
                    ++end_line_;
                    end_col_ = 1;
                } else {
                    ++end_col_;
                }
            }
        }
    }

    QueryAst parse() {
        expect_keyword("SELECT");
        QueryAst ast;
        ast.select_items.push_back(select_item());
        while (accept_punct(",")) ast.select_items.push_back(select_item());
        expect_keyword("FROM");
        ast.from_relations.push_back(relation_name());
        while (accept_punct(",")) ast.from_relations.push_back(relation_name());
        if (accept_keyword("WHERE")) ast.where_expr = or_expr();
        accept_punct(";");
        if (!at_end()) {
            check_unsupported(peek());
            fail("unexpected token '" + peek().lexeme + "'");
        }
        return ast;
    }

private:
    const std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int end_line_ = 1;
    int end_col_ = 1;

    bool at_end() const { return pos_ == tokens_.size(); }
    const Token& peek() const { return tokens_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const {
        if (at_end()) throw SyntaxError(msg + " at end of input", end_line_, end_col_);
        throw SyntaxError(msg, peek().line, peek().column);
    }

    void check_unsupported(const Token& t) const {
        if (t.kind != TokenKind::identifier && t.kind != TokenKind::keyword)
            return;
        const std::string clause = unsupported_clause(upper(t.lexeme));
        if (!clause.empty())
            throw UnsupportedFeatureError(clause, t.line, t.column);
    }

    bool accept_keyword(const char* kw) {
        if (!at_end() && peek().kind == TokenKind::keyword &&
            upper(peek().lexeme) == kw) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_keyword(const char* kw) {
        if (!accept_keyword(kw)) {
            if (!at_end()) check_unsupported(peek());
            fail(std::string("expected ") + kw);
        }
    }

    bool accept_punct(const char* p) {
        if (!at_end() && peek().kind == TokenKind::punct &&
            peek().lexeme == p) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_punct(const char* p) {
        if (!accept_punct(p)) fail(std::string("expected '") + p + "'");
    }

    // A SELECT keyword (or an opening paren directly followed by one) in any
    // operand/name position is a subquery, which the fragment excludes.
    void check_nested_select() const {
        if (at_end()) return;
        const Token& t = peek();
        if (t.kind == TokenKind::keyword && upper(t.lexeme) == "SELECT")
            throw UnsupportedFeatureError("nested SELECT", t.line, t.column);
        if (t.kind == TokenKind::punct && t.lexeme == "(" &&
            pos_ + 1 < tokens_.size() &&
            tokens_[pos_ + 1].kind == TokenKind::keyword &&
            upper(tokens_[pos_ + 1].lexeme) == "SELECT")
            throw UnsupportedFeatureError("nested SELECT", t.line, t.column);
    }

    Token take_identifier(const char* what) {
        if (at_end() || peek().kind != TokenKind::identifier) {
            check_nested_select();
            if (!at_end()) check_unsupported(peek());
            fail(std::string("expected ") + what);
        }
        check_unsupported(peek());  // reserved clause words are not names
        return tokens_[pos_++];
    }

    SelectItem select_item() {
        const Token name = take_identifier("select item");
        const std::string up = upper(name.lexeme);
        if (is_aggregate_name(up) && accept_punct("(")) {
            const Token attr = take_identifier("attribute");
            expect_punct(")");
            return {attr.lexeme, up};
        }
        return {name.lexeme, ""};
    }

    std::string relation_name() {
        return take_identifier("relation name").lexeme;
    }

    std::shared_ptr<const Expr> or_expr() {
        auto left = and_expr();
        while (accept_keyword("OR")) {
            auto node = std::make_shared<Expr>();
            node->kind = ExprKind::or_op;
            node->left = std::move(left);
            node->right = and_expr();
            left = std::move(node);
        }
        return left;
    }

    std::shared_ptr<const Expr> and_expr() {
        auto left = primary();
        while (accept_keyword("AND")) {
            auto node = std::make_shared<Expr>();
            node->kind = ExprKind::and_op;
            node->left = std::move(left);
            node->right = primary();
            left = std::move(node);
        }
        return left;
    }

    std::shared_ptr<const Expr> primary() {
        if (accept_punct("(")) {
            auto inner = or_expr();
            expect_punct(")");
            return inner;
        }
        return comparison();
    }

    std::shared_ptr<const Expr> comparison() {
        auto node = std::make_shared<Expr>();
        node->kind = ExprKind::comparison;
        node->lhs = operand();
        node->op = compare_op();
        node->rhs = operand();
        node->joining = node->lhs.is_attribute && node->rhs.is_attribute;
        return node;
    }

    Operand operand() {
        if (at_end()) fail("expected comparison operand");
        const Token& t = peek();
        if (t.kind == TokenKind::identifier) {
            ++pos_;
            return {true, t.lexeme};
        }
        if (t.kind == TokenKind::string_lit || t.kind == TokenKind::number_lit) {
            ++pos_;
            return {false, t.lexeme};
        }
        check_nested_select();
        check_unsupported(t);
        fail("expected comparison operand");
    }

    CompareOp compare_op() {
        if (!at_end() && peek().kind == TokenKind::op) {
            const std::string lex = tokens_[pos_++].lexeme;
            if (lex == "=") return CompareOp::eq;
            if (lex == "<") return CompareOp::lt;
            if (lex == ">") return CompareOp::gt;
            if (lex == "<=") return CompareOp::le;
            if (lex == ">=") return CompareOp::ge;
            if (lex == "<>") return CompareOp::ne;
        }
        if (accept_keyword("LIKE")) return CompareOp::like;
        fail("expected comparison operator");
    }
};

// Parenthesize a connective child when its precedence is lower than the
// parent's, or equal on the right-hand side (connectives associate left).
bool needs_parens(const Expr& child, ExprKind parent, bool right_side) {
    if (child.kind == ExprKind::comparison) return false;
    if (child.kind == parent) return right_side;
    return parent == ExprKind::and_op;  // OR child under tighter-binding AND
}

void print_expr(std::string& out, const Expr& e) {
    if (e.kind == ExprKind::comparison) {
        out += e.lhs.text;
        out += ' ';
        out += compare_op_lexeme(e.op);
        out += ' ';
        out += e.rhs.text;
        return;
    }
    const char* word = e.kind == ExprKind::and_op ? " AND " : " OR ";
    const bool lp = needs_parens(*e.left, e.kind, false);
    const bool rp = needs_parens(*e.right, e.kind, true);
    if (lp) out += '(';
    print_expr(out, *e.left);
    if (lp) out += ')';
    out += word;
    if (rp) out += '(';
    print_expr(out, *e.right);
    if (rp) out += ')';
}

}  // namespace

QueryAst parse_sql(const std::string& sql) { return Parser(sql).parse(); }

std::string print_sql(const QueryAst& ast) {
    std::string out = "SELECT ";
    for (std::size_t i = 0; i < ast.select_items.size(); ++i) {
        if (i) out += ", ";
        const SelectItem& item = ast.select_items[i];
        if (item.is_aggregate())
            out += item.aggregate + "(" + item.attribute + ")";
        else
            out += item.attribute;
    }
    out += " FROM ";
    for (std::size_t i = 0; i < ast.from_relations.size(); ++i) {
        if (i) out += ", ";
        out += ast.from_relations[i];
    }
    if (ast.where_expr) {
        out += " WHERE ";
        print_expr(out, *ast.where_expr);
    }
    return out;
}

}  // namespace s2c
