#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "s2c/pregroup.hpp"

namespace s2c {

// A generator of the free monoidal category: a named box with typed
// boundaries. Boxes are compared structurally (name and both boundaries).
struct Box {
    std::string name;
    PregroupType dom;
    PregroupType cod;

    auto operator<=>(const Box&) const = default;
};

// Contraction of the adjacent pair f (x) f.right() down to the unit.
Box cup(const TypeFactor& f);

// Expansion of the unit into the pair f.right() (x) f.
Box cap(const TypeFactor& f);

// Cup/cap boxes are recognised by name prefix so that daggered copies —
// whose boundary pair appears in the mirrored order — still count.
bool is_cup(const Box& box);
bool is_cap(const Box& box);

// One horizontal slice of a diagram: a single box applied at `offset`
// wires from the left, with identity wires everywhere else.
struct Layer {
    std::size_t offset = 0;
    Box box;

    auto operator<=>(const Layer&) const = default;
};

// A morphism of the free monoidal category in layered form: a domain type
// and a top-to-bottom list of layers. The codomain is computed by running
// the layers over the domain; construction validates that every box matches
// the wires it is applied to and throws CompositionError otherwise.
//
// Equality is structural (dom, cod and the exact layer list); diagrams that
// differ only by interchanging independent layers compare unequal but share
// a normal_form().
class Diagram {
public:
    // Identity on t (no layers).
    static Diagram id(PregroupType t);

    // Single box applied to the full width of its domain.
    static Diagram from_box(Box box);

    Diagram(PregroupType dom, std::vector<Layer> layers);

    const PregroupType& dom() const { return dom_; }
    const PregroupType& cod() const { return cod_; }
    const std::vector<Layer>& layers() const { return layers_; }

    // Sequential composite: *this first, `other` below it.
    Diagram then(const Diagram& other) const;

    // Mirror the diagram top-to-bottom: layers reverse, every box swaps its
    // boundaries, and cup_/cap_ name prefixes flip into each other.
    Diagram dagger() const;

    // Representative under the interchange law: repeatedly hoist any layer
    // that acts entirely left of the layer above it. Diagrams equal up to
    // interchange reach the same fixpoint provided every box consumes at
    // least one wire; a box with an empty domain has no anchoring inputs,
    // so its lateral position is ambiguous in the layer encoding and the
    // result is only guaranteed to be a terminating, idempotent choice.
    Diagram normal_form() const;

    auto operator<=>(const Diagram&) const = default;

private:
    PregroupType dom_;
    PregroupType cod_;
    std::vector<Layer> layers_;
};

Diagram compose(const Diagram& upper, const Diagram& lower);
Diagram tensor(const Diagram& left, const Diagram& right);

}  // namespace s2c
