#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace s2c {

enum class TokenKind {
    keyword,     // SELECT, FROM, WHERE, AND, OR, LIKE (case-insensitive)
    identifier,  // bare or qualified (rel.attr stays one token)
    string_lit,  // quotes included in the lexeme
    number_lit,  // integer or decimal, lexeme kept verbatim
    op,          // = < > <= >= <>
    punct,       // , ( ) ;
};

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t offset = 0;  // byte offset into the source text
    int line = 1;            // 1-based
    int column = 1;          // 1-based
};

// Split a single statement into tokens. Whitespace separates tokens and is
// otherwise discarded; offsets allow exact source reconstruction.
std::vector<Token> tokenize(const std::string& sql);

// One entry of the SELECT list: a plain attribute or fn(attribute) with the
// function name canonicalized to uppercase.
struct SelectItem {
    std::string attribute;
    std::string aggregate;  // empty = plain attribute reference

    bool is_aggregate() const { return !aggregate.empty(); }
    auto operator<=>(const SelectItem&) const = default;
};

enum class CompareOp { eq, lt, gt, le, ge, ne, like };

// Source form of a comparison operator ("=", "<", ..., "LIKE").
const char* compare_op_lexeme(CompareOp op);

// A comparison operand: an attribute reference or a literal. Literal text is
// the exact source lexeme (quotes included for strings), so downstream box
// names are reproducible.
struct Operand {
    bool is_attribute = false;
    std::string text;

    auto operator<=>(const Operand&) const = default;
};

enum class ExprKind { comparison, and_op, or_op };

// WHERE-clause expression tree. Connective nodes (and_op/or_op) use left
// and right; comparison nodes use lhs/op/rhs. `joining` marks comparisons
// with attributes on both sides; everything else is a filtering predicate.
struct Expr {
    ExprKind kind = ExprKind::comparison;

    Operand lhs;
    CompareOp op = CompareOp::eq;
    Operand rhs;
    bool joining = false;

    std::shared_ptr<const Expr> left;
    std::shared_ptr<const Expr> right;
};

bool expr_equal(const Expr& a, const Expr& b);

struct QueryAst {
    std::vector<SelectItem> select_items;
    std::vector<std::string> from_relations;
    std::shared_ptr<const Expr> where_expr;  // null when there is no WHERE
};

bool ast_equal(const QueryAst& a, const QueryAst& b);

// Parse one SELECT-FROM-WHERE statement (trailing semicolon optional).
// Raises SyntaxError on malformed input and UnsupportedFeatureError on
// constructs outside the fragment (GROUP BY, ORDER BY, nested SELECT, ...).
QueryAst parse_sql(const std::string& sql);

// Canonical single-line rendering; parse_sql(print_sql(ast)) is structurally
// equal to ast, with parentheses emitted only where the tree shape needs
// them.
std::string print_sql(const QueryAst& ast);

}  // namespace s2c
