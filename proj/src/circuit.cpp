#include "s2c/circuit.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "s2c/error.hpp"

namespace s2c {

const char* gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::h: return "H";
        case GateKind::rx: return "RX";
        case GateKind::rz: return "RZ";
        case GateKind::crz: return "CRZ";
    }
    return "?";
}

namespace {

GateKind gate_kind_from(const std::string& name, const std::string& path) {
    if (name == "H") return GateKind::h;
    if (name == "RX") return GateKind::rx;
    if (name == "RZ") return GateKind::rz;
    if (name == "CRZ") return GateKind::crz;
    throw FormatError(path + ": unknown gate kind '" + name + "'");
}

std::size_t gate_arity(GateKind kind) {
    return kind == GateKind::crz ? 2 : 1;
}

}  // namespace

std::vector<std::string> collect_symbols(const Circuit& circuit) {
    std::set<std::string> seen;
    for (const Gate& g : circuit.gates)
        if (g.angle && g.angle->symbolic) seen.insert(g.angle->symbol);
    return {seen.begin(), seen.end()};
}

ParamSpace::ParamSpace(const std::vector<Circuit>& circuits) {
    std::set<std::string> seen;
    for (const Circuit& c : circuits)
        for (const Gate& g : c.gates)
            if (g.angle && g.angle->symbolic) seen.insert(g.angle->symbol);
    names_.assign(seen.begin(), seen.end());
}

bool ParamSpace::contains(const std::string& name) const {
    return std::binary_search(names_.begin(), names_.end(), name);
}

std::size_t ParamSpace::index_of(const std::string& name) const {
    const auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name)
        throw SimulationError("symbol '" + name +
                              "' is not in the parameter space");
    return static_cast<std::size_t>(it - names_.begin());
}

json circuit_to_json(const Circuit& circuit) {
    json gates = json::array();
    for (const Gate& g : circuit.gates) {
        json jg;
        jg["kind"] = gate_kind_name(g.kind);
        jg["qubits"] = g.qubits;
        if (g.angle) {
            if (g.angle->symbolic)
                jg["angle"] = {{"sym", g.angle->symbol}};
            else
                jg["angle"] = {{"const", g.angle->value}};
        }
        gates.push_back(std::move(jg));
    }
    json postselect = json::object();
    for (const auto& [qubit, bit] : circuit.postselect)
        postselect[std::to_string(qubit)] = bit;
    json out;
    out["n_qubits"] = circuit.n_qubits;
    out["gates"] = std::move(gates);
    out["postselect"] = std::move(postselect);
    out["output_qubits"] = circuit.output_qubits;
    return out;
}

std::string serialize_circuit(const Circuit& circuit) {
    return dump_json(circuit_to_json(circuit));
}

Circuit circuit_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("/: expected object");
    auto need = [&](const char* key) -> const json& {
        if (!j.contains(key))
            throw FormatError(std::string("/") + key + ": missing");
        return j.at(key);
    };

    Circuit out;
    const json& jn = need("n_qubits");
    if (!jn.is_number_unsigned())
        throw FormatError("/n_qubits: expected non-negative integer");
    out.n_qubits = jn.get<std::size_t>();

    const json& jgates = need("gates");
    if (!jgates.is_array()) throw FormatError("/gates: expected array");
    for (std::size_t i = 0; i < jgates.size(); ++i) {
        const std::string path = "/gates/" + std::to_string(i);
        const json& jg = jgates[i];
        if (!jg.is_object()) throw FormatError(path + ": expected object");
        if (!jg.contains("kind") || !jg["kind"].is_string())
            throw FormatError(path + "/kind: expected string");
        Gate g;
        g.kind = gate_kind_from(jg["kind"].get<std::string>(), path + "/kind");
        if (!jg.contains("qubits") || !jg["qubits"].is_array())
            throw FormatError(path + "/qubits: expected array");
        for (const json& q : jg["qubits"]) {
            if (!q.is_number_unsigned())
                throw FormatError(path + "/qubits: expected qubit index");
            g.qubits.push_back(q.get<std::size_t>());
        }
        if (g.qubits.size() != gate_arity(g.kind))
            throw FormatError(path + "/qubits: wrong arity for " +
                              gate_kind_name(g.kind));
        for (const std::size_t q : g.qubits)
            if (q >= out.n_qubits)
                throw FormatError(path + "/qubits: qubit out of range");
        if (jg.contains("angle")) {
            const json& ja = jg["angle"];
            if (ja.is_object() && ja.contains("sym") &&
                ja["sym"].is_string()) {
                g.angle = AngleRef::sym(ja["sym"].get<std::string>());
            } else if (ja.is_object() && ja.contains("const") &&
                       ja["const"].is_number()) {
                g.angle = AngleRef::constant(ja["const"].get<double>());
            } else {
                throw FormatError(path +
                                  "/angle: expected {\"sym\": name} or "
                                  "{\"const\": value}");
            }
        }
        if (g.kind == GateKind::h && g.angle)
            throw FormatError(path + "/angle: H takes no angle");
        if (g.kind != GateKind::h && !g.angle)
            throw FormatError(path + "/angle: missing");
        out.gates.push_back(std::move(g));
    }

    const json& jps = need("postselect");
    if (!jps.is_object()) throw FormatError("/postselect: expected object");
    for (const auto& [key, value] : jps.items()) {
        std::size_t qubit = 0;
        try {
            qubit = std::stoull(key);
        } catch (...) {
            throw FormatError("/postselect: bad qubit key '" + key + "'");
        }
        if (qubit >= out.n_qubits)
            throw FormatError("/postselect: qubit out of range");
        if (!value.is_number_integer() ||
            (value.get<int>() != 0 && value.get<int>() != 1))
            throw FormatError("/postselect/" + key + ": bit must be 0 or 1");
        out.postselect[qubit] = value.get<int>();
    }

    const json& jout = need("output_qubits");
    if (!jout.is_array()) throw FormatError("/output_qubits: expected array");
    for (const json& q : jout) {
        if (!q.is_number_unsigned())
            throw FormatError("/output_qubits: expected qubit index");
        const std::size_t qubit = q.get<std::size_t>();
        if (qubit >= out.n_qubits)
            throw FormatError("/output_qubits: qubit out of range");
        if (out.postselect.count(qubit))
            throw FormatError("/output_qubits: qubit is post-selected");
        out.output_qubits.push_back(qubit);
    }
    return out;
}

Circuit deserialize_circuit(const std::string& text) {
    return circuit_from_json(parse_json_text(text, "circuit"));
}

}  // namespace s2c
