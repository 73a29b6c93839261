#pragma once

#include <string>

#include "s2c/diagram.hpp"
#include "s2c/jsonio.hpp"

namespace s2c {

// Diagram document schema:
//   {
//    "dom": [["n", 0], ...],            // factors as [base, winding]
//    "cod": [...],
//    "layers": [
//     {"offset": 0, "name": "f", "dom": [...], "cod": [...]},
//     ...
//    ]
//   }
// The codomain is redundant (it is computed from dom and layers) and is
// cross-checked on load.

json diagram_to_json(const Diagram& diagram);

// Full document text: 1-space-indented JSON with a trailing newline.
std::string serialize_diagram(const Diagram& diagram);

// Rebuild a diagram from a parsed document. Structural problems raise
// FormatError with the JSON pointer of the offending element, prefixed by
// `path_prefix` when the document is embedded in a larger file.
Diagram diagram_from_json(const json& j, const std::string& path_prefix = "");

Diagram deserialize_diagram(const std::string& text);

}  // namespace s2c
