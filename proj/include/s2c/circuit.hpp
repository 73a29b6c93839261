#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s2c/jsonio.hpp"

namespace s2c {

enum class GateKind { h, rx, rz, crz };

const char* gate_kind_name(GateKind kind);

// A gate angle: either a named parameter resolved at binding time or a
// fixed constant (the wire-contraction gates use constants).
struct AngleRef {
    bool symbolic = false;
    std::string symbol;
    double value = 0.0;

    static AngleRef sym(std::string name) { return {true, std::move(name), 0.0}; }
    static AngleRef constant(double v) { return {false, "", v}; }
    auto operator<=>(const AngleRef&) const = default;
};

struct Gate {
    GateKind kind = GateKind::h;
    std::vector<std::size_t> qubits;          // crz: {control, target}
    std::optional<AngleRef> angle;            // absent for h

    auto operator<=>(const Gate&) const = default;
};

// A parameterized circuit plus its measurement plan: `postselect` pins
// qubits to bits before reading `output_qubits` (bit i of a class index is
// output_qubits[i], least significant first).
struct Circuit {
    std::size_t n_qubits = 0;
    std::vector<Gate> gates;
    std::map<std::size_t, int> postselect;
    std::vector<std::size_t> output_qubits;

    auto operator<=>(const Circuit&) const = default;
};

// Distinct symbol names of one circuit, sorted lexicographically.
std::vector<std::string> collect_symbols(const Circuit& circuit);

// The shared parameter vector layout for a family of circuits: the sorted
// union of their symbol names, one coordinate each.
class ParamSpace {
public:
    ParamSpace() = default;
    explicit ParamSpace(const std::vector<Circuit>& circuits);

    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }
    bool contains(const std::string& name) const;
    // Index of `name`; raises SimulationError for a name outside the space.
    std::size_t index_of(const std::string& name) const;

private:
    std::vector<std::string> names_;
};

// JSON layout:
//   {
//    "n_qubits": 3,
//    "gates": [{"kind": "h", "qubits": [0]},
//              {"kind": "rx", "qubits": [1], "angle": {"sym": "w__I__n__0"}},
//              {"kind": "crz", "qubits": [0, 1], "angle": {"const": 3.14}}],
//    "postselect": {"1": 0},
//    "output_qubits": [0]
//   }
json circuit_to_json(const Circuit& circuit);
std::string serialize_circuit(const Circuit& circuit);
Circuit circuit_from_json(const json& j);
Circuit deserialize_circuit(const std::string& text);

}  // namespace s2c
