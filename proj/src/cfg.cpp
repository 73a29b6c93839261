#include <algorithm>
#include <string>
#include <vector>

#include "s2c/error.hpp"
#include "s2c/grammar.hpp"

namespace s2c {

namespace {

// Variable set of the frozen SQL fragment.
const char* const kVariables[] = {"query",      "select_clause",
                                  "from_clause", "where_clause",
                                  "expr",        "agg"};

PregroupType var(const char* name) { return PregroupType::base(name); }

PregroupType term(const std::string& lexeme) {
    return PregroupType::base(kTerminalPrefix + lexeme);
}

std::string expr_op_lexeme(const Expr& e) {
    switch (e.kind) {
        case ExprKind::and_op: return "AND";
        case ExprKind::or_op: return "OR";
        case ExprKind::comparison: return compare_op_lexeme(e.op);
    }
    throw EncodingError("unknown expression node kind");
}

// The codomain of the query rule box: one child variable per clause.
PregroupType query_children(const QueryAst& ast) {
    PregroupType cod = var("select_clause").tensor(var("from_clause"));
    if (ast.where_expr) cod = cod.tensor(var("where_clause"));
    return cod;
}

PregroupType select_children(const QueryAst& ast) {
    PregroupType cod = term("SELECT");
    for (const SelectItem& item : ast.select_items)
        cod = cod.tensor(item.is_aggregate() ? var("agg")
                                             : term(item.attribute));
    return cod;
}

Diagram operand_diagram(const Operand& o) {
    if (o.is_attribute)
        return Diagram::from_box({"column-ref", var("expr"), term(o.text)});
    return Diagram::from_box({"literal", var("expr"), term(o.text)});
}

Diagram expr_diagram(const Expr& e) {
    const PregroupType op = term(expr_op_lexeme(e));
    const Diagram node = Diagram::from_box(
        {"binary-expression", var("expr"),
         var("expr").tensor(op).tensor(var("expr"))});
    const Diagram left = e.kind == ExprKind::comparison
                             ? operand_diagram(e.lhs)
                             : expr_diagram(*e.left);
    const Diagram right = e.kind == ExprKind::comparison
                              ? operand_diagram(e.rhs)
                              : expr_diagram(*e.right);
    return node.then(tensor(left, tensor(Diagram::id(op), right)));
}

Diagram select_clause_diagram(const QueryAst& ast) {
    const Diagram head = Diagram::from_box(
        {"select-clause", var("select_clause"), select_children(ast)});
    Diagram items = Diagram::id(term("SELECT"));
    for (const SelectItem& item : ast.select_items) {
        if (item.is_aggregate())
            items = tensor(items,
                           Diagram::from_box(
                               {"aggregate", var("agg"),
                                term(item.aggregate)
                                    .tensor(term(item.attribute))}));
        else
            items = tensor(items, Diagram::id(term(item.attribute)));
    }
    return head.then(items);
}

Diagram from_clause_diagram(const QueryAst& ast) {
    PregroupType cod;
    for (const std::string& rel : ast.from_relations)
        cod = cod.tensor(term(rel));
    return Diagram::from_box({"from-clause", var("from_clause"), cod});
}

Diagram where_clause_diagram(const QueryAst& ast) {
    return Diagram::from_box({"where-clause", var("where_clause"),
                              var("expr")})
        .then(expr_diagram(*ast.where_expr));
}

}  // namespace

Diagram ast_to_cfg_diagram(const QueryAst& ast) {
    if (ast.select_items.empty())
        throw EncodingError("query has no select items");
    if (ast.from_relations.empty())
        throw EncodingError("query has no relations");

    const Diagram root = Diagram::from_box(
        {"query", var("query"), query_children(ast)});
    Diagram clauses = tensor(select_clause_diagram(ast),
                             from_clause_diagram(ast));
    if (ast.where_expr)
        clauses = tensor(clauses, where_clause_diagram(ast));
    const Diagram expanded = root.then(clauses);

    // All variables are expanded now; consume the terminals right-to-left
    // so the daggered diagram lists the words in query-text order.
    Diagram out = expanded;
    const PregroupType sentence = expanded.cod();
    for (std::size_t i = sentence.size(); i-- > 0;) {
        const TypeFactor& f = sentence[i];
        const std::string lexeme =
            f.base.substr(std::string(kTerminalPrefix).size());
        Diagram step(out.cod(),
                     {{i, Box{lexeme, PregroupType{f}, PregroupType{}}}});
        out = out.then(step);
    }
    return out;
}

CfgSpec cfg_spec_for(const QueryAst& ast) {
    CfgSpec spec;
    for (const char* v : kVariables) spec.variables.push_back(v);
    spec.start = "query";

    const Diagram d = ast_to_cfg_diagram(ast);
    std::vector<std::string> terminals;
    std::vector<CfgRule> rules;
    for (const Layer& l : d.layers()) {
        if (l.box.cod.empty() && l.box.dom.size() == 1) {
            terminals.push_back(l.box.dom[0].base);
            continue;
        }
        CfgRule rule{l.box.name, l.box.dom[0].base, {}};
        for (const TypeFactor& f : l.box.cod.factors())
            rule.body.push_back(f.base);
        rules.push_back(std::move(rule));
    }
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()),
                    terminals.end());
    std::sort(rules.begin(), rules.end());
    rules.erase(std::unique(rules.begin(), rules.end()), rules.end());
    spec.terminals = std::move(terminals);
    spec.rules = std::move(rules);
    return spec;
}

}  // namespace s2c
