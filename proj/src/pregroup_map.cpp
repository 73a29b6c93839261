#include <map>
#include <set>
#include <string>
#include <vector>

#include "s2c/error.hpp"
#include "s2c/functor.hpp"
#include "s2c/grammar.hpp"

namespace s2c {

namespace {

bool is_terminal_base(const std::string& base) {
    return base.rfind(kTerminalPrefix, 0) == 0;
}

bool is_terminal_box(const Box& box) {
    return box.cod.empty() && box.dom.size() == 1 &&
           is_terminal_base(box.dom[0].base);
}

// Word roles read off the rule boxes: the select-clause head child is the
// SELECT keyword, the middle child of a binary expression is an operator,
// the first child of an aggregate is a function name.
struct Roles {
    std::string select_base;
    std::set<std::string> op_bases;
    std::set<std::string> fn_bases;
    std::size_t items = 0;
    std::size_t relations = 0;
    bool has_where = false;
};

Roles scan_roles(const Diagram& cfg) {
    Roles roles;
    for (const Layer& l : cfg.layers()) {
        const Box& b = l.box;
        if (is_terminal_box(b)) continue;
        if (b.name == "select-clause") {
            roles.select_base = b.cod[0].base;
            roles.items = b.cod.size() - 1;
        } else if (b.name == "from-clause") {
            roles.relations = b.cod.size();
        } else if (b.name == "where-clause") {
            roles.has_where = true;
        } else if (b.name == "binary-expression") {
            roles.op_bases.insert(b.cod[1].base);
        } else if (b.name == "aggregate") {
            roles.fn_bases.insert(b.cod[0].base);
        } else if (b.name != "query" && b.name != "column-ref" &&
                   b.name != "literal") {
            throw EncodingError("no grammar rule for box '" + b.name + "'");
        }
    }
    if (roles.select_base.empty())
        throw EncodingError("diagram has no select-clause rule");
    return roles;
}

PregroupType repeat(const TypeFactor& f, std::size_t count) {
    std::vector<TypeFactor> fs(count, f);
    return PregroupType(std::move(fs));
}

// Left-adjoint noun contractions n^l (x) n bridging `count` pairs, applied
// innermost-first: offsets top, top-1, ..., top-count+1.
std::vector<Layer> nested_cups(const TypeFactor& noun, std::size_t top,
                               std::size_t count) {
    std::vector<Layer> layers;
    for (std::size_t i = 0; i < count; ++i)
        layers.push_back({top - i, cup(noun.left())});
    return layers;
}

}  // namespace

Diagram cfg_to_pregroup(const Diagram& cfg, const PregroupGrammarSpec& spec) {
    const Roles roles = scan_roles(cfg);
    const TypeFactor noun{spec.noun_base, 0};
    const TypeFactor sentence{spec.sentence_base, 0};
    const std::size_t k =
        roles.items + roles.relations + (roles.has_where ? 1 : 0);

    FunctorSpec functor;
    functor.map_object("query", PregroupType{sentence});
    functor.map_object("select_clause",
                       PregroupType{sentence}.tensor(
                           repeat(noun.left(), k - roles.items)));
    functor.map_object("from_clause", repeat(noun, roles.relations));
    functor.map_object("where_clause", PregroupType{noun});
    functor.map_object("expr", PregroupType{noun});
    functor.map_object("agg", PregroupType{noun});

    // Dictionary: word types by role.
    for (const Layer& l : cfg.layers()) {
        const Box& b = l.box;
        if (!is_terminal_box(b)) continue;
        const std::string& base = b.dom[0].base;
        if (functor.has_object(base)) continue;
        if (!spec.vocabulary.empty() && !spec.vocabulary.count(b.name))
            throw DictionaryMissError("word '" + b.name +
                                      "' is not in the vocabulary");
        if (base == roles.select_base)
            functor.map_object(base, PregroupType{sentence}.tensor(
                                         repeat(noun.left(), k)));
        else if (roles.op_bases.count(base))
            functor.map_object(base, PregroupType{noun.right(), noun,
                                                  noun.left()});
        else if (roles.fn_bases.count(base))
            functor.map_object(base, PregroupType{noun, noun.left()});
        else
            functor.map_object(base, PregroupType{noun});
    }

    const Diagram daggered = cfg.dagger();

    for (const Layer& l : daggered.layers()) {
        const Box& b = l.box;
        if (functor.has_box(b)) continue;
        const PregroupType img_dom = functor.apply(b.dom);
        const PregroupType img_cod = functor.apply(b.cod);
        if (b.dom.empty()) {
            // Daggered terminal: the word becomes a state of its type.
            functor.map_box(b, Diagram::from_box({b.name, img_dom, img_cod}));
            continue;
        }
        std::vector<Layer> layers;
        if (b.name == "select-clause") {
            layers = nested_cups(noun, k, roles.items);
        } else if (b.name == "query") {
            const std::size_t w = roles.has_where ? 1 : 0;
            layers = nested_cups(noun, roles.relations + w, roles.relations);
            if (roles.has_where) layers.push_back({1, cup(noun.left())});
        } else if (b.name == "binary-expression") {
            layers.push_back({0, cup(noun)});
            layers.push_back({1, cup(noun.left())});
        } else if (b.name == "aggregate") {
            layers.push_back({1, cup(noun.left())});
        }
        // from-clause, where-clause, column-ref and literal are structural:
        // their images are identities (no layers).
        functor.map_box(b, Diagram(img_dom, std::move(layers)));
    }

    return apply_functor(functor, daggered);
}

}  // namespace s2c
