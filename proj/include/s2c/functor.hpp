#pragma once

#include <map>
#include <string>

#include "s2c/diagram.hpp"
#include "s2c/pregroup.hpp"

namespace s2c {

// A strict monoidal functor between free categories, given by its action on
// generators: base types map to arbitrary types and generator boxes map to
// whole diagrams. The object map extends to adjoint factors automatically,
// F((b, z)) = F(b).iterated_adjoint(z), so only plain bases are registered.
class FunctorSpec {
public:
    void map_object(const std::string& base, PregroupType image);

    // The image diagram must have boundaries F(box.dom) -> F(box.cod);
    // mismatches are rejected here rather than at application time. All
    // bases in the box's boundaries must already be object-mapped.
    void map_box(const Box& box, Diagram image);

    bool has_object(const std::string& base) const;
    bool has_box(const Box& box) const;

    // Extend the object map to a full type; unknown bases raise
    // MissingMappingError naming the base.
    PregroupType apply(const PregroupType& t) const;

    // Image of a generator box; unknown boxes raise MissingMappingError.
    const Diagram& image(const Box& box) const;

    const std::map<std::string, PregroupType>& objects() const {
        return objects_;
    }

private:
    std::map<std::string, PregroupType> objects_;
    std::map<Box, Diagram> boxes_;
};

// Apply the functor to a whole diagram. Every generator box must be mapped
// and every base must be object-mapped; the scan is performed up front so a
// missing mapping is reported before any work, naming the generator.
Diagram apply_functor(const FunctorSpec& spec, const Diagram& diagram);

}  // namespace s2c
