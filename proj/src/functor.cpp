#include "s2c/functor.hpp"

#include <utility>
#include <vector>

#include "s2c/error.hpp"

namespace s2c {

void FunctorSpec::map_object(const std::string& base, PregroupType image) {
    objects_.insert_or_assign(base, std::move(image));
}

void FunctorSpec::map_box(const Box& box, Diagram image) {
    const PregroupType want_dom = apply(box.dom);
    const PregroupType want_cod = apply(box.cod);
    if (image.dom() != want_dom || image.cod() != want_cod)
        throw CompositionError(
            "functor image for box '" + box.name + "' has boundary " +
            image.dom().str() + " -> " + image.cod().str() + ", expected " +
            want_dom.str() + " -> " + want_cod.str());
    boxes_.insert_or_assign(box, std::move(image));
}

bool FunctorSpec::has_object(const std::string& base) const {
    return objects_.count(base) != 0;
}

bool FunctorSpec::has_box(const Box& box) const {
    return boxes_.count(box) != 0;
}

PregroupType FunctorSpec::apply(const PregroupType& t) const {
    PregroupType out;
    for (const TypeFactor& f : t.factors()) {
        auto it = objects_.find(f.base);
        if (it == objects_.end())
            throw MissingMappingError("no object mapping for base '" +
                                      f.base + "'");
        out = out.tensor(it->second.iterated_adjoint(f.z));
    }
    return out;
}

const Diagram& FunctorSpec::image(const Box& box) const {
    auto it = boxes_.find(box);
    if (it == boxes_.end())
        throw MissingMappingError("no box mapping for generator '" +
                                  box.name + "'");
    return it->second;
}

Diagram apply_functor(const FunctorSpec& spec, const Diagram& diagram) {
    for (const Layer& l : diagram.layers())
        if (!spec.has_box(l.box))
            throw MissingMappingError("no box mapping for generator '" +
                                      l.box.name + "'");

    PregroupType running = diagram.dom();
    std::vector<Layer> out;
    for (const Layer& l : diagram.layers()) {
        // A box at offset k lands at the width of the image of the first k
        // wires; everything to its right is carried by identities.
        const std::size_t mapped_offset =
            spec.apply(running.slice(0, l.offset)).size();
        const Diagram& img = spec.image(l.box);
        for (const Layer& il : img.layers())
            out.push_back({mapped_offset + il.offset, il.box});
        const std::size_t width = l.box.dom.size();
        running = running.slice(0, l.offset)
                      .tensor(l.box.cod)
                      .tensor(running.slice(
                          l.offset + width,
                          running.size() - l.offset - width));
    }
    return Diagram(spec.apply(diagram.dom()), std::move(out));
}

}  // namespace s2c
