#include "s2c/diagram.hpp"

#include <algorithm>
#include <utility>

#include "s2c/error.hpp"

namespace s2c {

Box cup(const TypeFactor& f) {
    return {"cup_" + f.base, PregroupType{f, f.right()}, PregroupType{}};
}

Box cap(const TypeFactor& f) {
    return {"cap_" + f.base, PregroupType{}, PregroupType{f.right(), f}};
}

bool is_cup(const Box& box) { return box.name.starts_with("cup_"); }

bool is_cap(const Box& box) { return box.name.starts_with("cap_"); }

namespace {

// cup_ and cap_ prefixes swap under the dagger; everything else is fixed.
std::string dagger_name(const std::string& name) {
    if (name.starts_with("cup_")) return "cap_" + name.substr(4);
    if (name.starts_with("cap_")) return "cup_" + name.substr(4);
    return name;
}

}  // namespace

Diagram Diagram::id(PregroupType t) { return Diagram(std::move(t), {}); }

Diagram Diagram::from_box(Box box) {
    PregroupType dom = box.dom;
    return Diagram(std::move(dom), {{0, std::move(box)}});
}

Diagram::Diagram(PregroupType dom, std::vector<Layer> layers)
    : dom_(std::move(dom)), layers_(std::move(layers)) {
    PregroupType running = dom_;
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        const Layer& layer = layers_[i];
        const std::size_t width = layer.box.dom.size();
        if (layer.offset + width > running.size())
            throw CompositionError(
                "layer " + std::to_string(i) + ": box '" + layer.box.name +
                "' at offset " + std::to_string(layer.offset) +
                " does not fit type " + running.str());
        const PregroupType found = running.slice(layer.offset, width);
        if (found != layer.box.dom)
            throw CompositionError(
                "layer " + std::to_string(i) + ": box '" + layer.box.name +
                "' expects " + layer.box.dom.str() + " but wires at offset " +
                std::to_string(layer.offset) + " are " + found.str());
        running = running.slice(0, layer.offset)
                      .tensor(layer.box.cod)
                      .tensor(running.slice(
                          layer.offset + width,
                          running.size() - layer.offset - width));
    }
    cod_ = std::move(running);
}

Diagram Diagram::then(const Diagram& other) const {
    return compose(*this, other);
}

Diagram Diagram::dagger() const {
    std::vector<Layer> out;
    out.reserve(layers_.size());
    for (auto it = layers_.rbegin(); it != layers_.rend(); ++it)
        out.push_back(
            {it->offset, Box{dagger_name(it->box.name), it->box.cod,
                             it->box.dom}});
    return Diagram(cod_, std::move(out));
}

Diagram Diagram::normal_form() const {
    std::vector<Layer> layers = layers_;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
            Layer& a = layers[i];
            Layer& b = layers[i + 1];
            // b commutes past a when it acts entirely left of a's wires;
            // hoisting it shifts a by b's width change.
            if (b.offset + b.box.dom.size() > a.offset) continue;
            const std::ptrdiff_t delta =
                static_cast<std::ptrdiff_t>(b.box.cod.size()) -
                static_cast<std::ptrdiff_t>(b.box.dom.size());
            const std::size_t a_shifted = static_cast<std::size_t>(
                static_cast<std::ptrdiff_t>(a.offset) + delta);
            // When the hoisted pair would qualify for the reverse hoist as
            // well (only possible for scalar-shaped boxes meeting at one
            // point, whose lateral order the layer encoding cannot pin
            // down), fall back to sorting the pair by box identity so the
            // rewrite still terminates at a canonical order.
            if (a_shifted + a.box.dom.size() <= b.offset && !(b.box < a.box))
                continue;
            a.offset = a_shifted;
            std::swap(a, b);
            changed = true;
        }
    }
    return Diagram(dom_, std::move(layers));
}

Diagram compose(const Diagram& upper, const Diagram& lower) {
    if (upper.cod() != lower.dom())
        throw CompositionError("cannot compose: codomain " +
                               upper.cod().str() + " does not match domain " +
                               lower.dom().str());
    std::vector<Layer> layers = upper.layers();
    layers.insert(layers.end(), lower.layers().begin(), lower.layers().end());
    return Diagram(upper.dom(), std::move(layers));
}

Diagram tensor(const Diagram& left, const Diagram& right) {
    std::vector<Layer> layers = left.layers();
    layers.reserve(layers.size() + right.layers().size());
    const std::size_t shift = left.cod().size();
    for (const Layer& l : right.layers())
        layers.push_back({l.offset + shift, l.box});
    return Diagram(left.dom().tensor(right.dom()), std::move(layers));
}

}  // namespace s2c
