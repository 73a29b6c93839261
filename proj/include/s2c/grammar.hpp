#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "s2c/diagram.hpp"
#include "s2c/pregroup.hpp"
#include "s2c/sql.hpp"

namespace s2c {

// Prefix that turns a word lexeme into its terminal type base, keeping the
// terminal alphabet disjoint from the variable set even when a query names
// a column "expr" or "query".
inline const char* const kTerminalPrefix = "w:";

// One production: `head -> body`, where body symbols are either variables
// or terminal bases (kTerminalPrefix + lexeme). `name` is the rule box name
// used in diagrams.
struct CfgRule {
    std::string name;
    std::string head;
    std::vector<std::string> body;

    auto operator<=>(const CfgRule&) const = default;
};

// The context-free grammar instance a query exercises: the fixed variable
// set of the SQL fragment, the terminals of this query, and the productions
// its parse uses. start is always "query".
struct CfgSpec {
    std::vector<std::string> variables;
    std::vector<std::string> terminals;
    std::vector<CfgRule> rules;
    std::string start;
};

CfgSpec cfg_spec_for(const QueryAst& ast);

// Compile the AST into the grammar's monoidal diagram: dom is the start
// variable; rule boxes expand variables generatively (codomain = tensor of
// the children's domains); every terminal ends in a box with codomain I,
// fired right-to-left after all rule boxes. Raises EncodingError for an AST
// shape with no production.
Diagram ast_to_cfg_diagram(const QueryAst& ast);

// Typing side of the pregroup grammar. Words are typed by their syntactic
// role: attributes, relations and literals as the noun base; the SELECT
// keyword as sentence ⊗ (noun left adjoint)^k where k counts the noun wires
// the rest of the query supplies (select items + relations + one for a
// WHERE clause); comparison operators and connectives as n^r ⊗ n ⊗ n^l;
// aggregate functions as n ⊗ n^l. A non-empty vocabulary closes the
// dictionary: unknown words raise DictionaryMissError.
struct PregroupGrammarSpec {
    std::string noun_base = "n";
    std::string sentence_base = "s";
    std::set<std::string> vocabulary;  // empty = open vocabulary
};

// Apply the CFG-to-pregroup functor to a diagram built by
// ast_to_cfg_diagram. Terminal boxes become word states (I -> word type),
// list-structuring rules become identities, and the remaining rule boxes
// become the cup patterns that contract the sentence; the result runs from
// I to the sentence type with word boxes in query-text order.
Diagram cfg_to_pregroup(const Diagram& cfg, const PregroupGrammarSpec& spec);

// Eliminate every cup and cap by bending their wires into the word boxes:
// a chain ending in two producer ports transposes the later box's output
// slot into an input, a chain ending in two consumer ports transposes the
// earlier box's input slot into an output, and producer-to-consumer chains
// straighten into plain wires. Boxes keep their names and their query-text
// order; the boundary types are unchanged. A chain with both ends on the
// diagram boundary raises IrreducibleCapError; shapes the rebuild cannot
// lay out planarly raise RewriteError.
Diagram remove_caps(const Diagram& diagram);

struct GrammaticalityResult {
    bool grammatical = false;
    // Non-crossing contraction pairs (i, j), i < j, indexing the
    // concatenated word-type factor sequence; outermost pairs first.
    std::vector<std::pair<std::size_t, std::size_t>> contractions;
    // Indices of the surviving factors matching the sentence type in order.
    std::vector<std::size_t> sentence_positions;
};

// Decide whether the diagram's words form a grammatical sentence: recover
// each word's pregroup type (transposed slots fold back via the right
// adjoint of the box domain), concatenate in box order, and search for a
// contraction of the whole sequence onto the sentence type. Cup and cap
// boxes are witnesses of reductions, not words, and are skipped.
GrammaticalityResult check_grammatical(const Diagram& diagram,
                                       const PregroupGrammarSpec& spec);

}  // namespace s2c
