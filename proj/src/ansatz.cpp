#include "s2c/ansatz.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "s2c/error.hpp"
#include "s2c/pregroup.hpp"

namespace s2c {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string symbol_name(const Box& box, std::size_t k) {
    return box.name + "__" + box.dom.str() + "__" + box.cod.str() + "__" +
           std::to_string(k);
}

}  // namespace

Circuit build_circuit(const Diagram& diagram, const CircuitParams& params) {
    const std::size_t q = params.qubits_per_wire;
    if (q == 0) throw ArityError("qubits_per_wire must be positive");
    if (diagram.cod() != PregroupType::base(params.sentence_base))
        throw ArityError("diagram codomain " + diagram.cod().str() +
                         " is not the sentence wire " + params.sentence_base);

    Circuit out;
    std::vector<std::vector<std::size_t>> wires;
    auto fresh_wire = [&] {
        std::vector<std::size_t> qubits;
        for (std::size_t i = 0; i < q; ++i) qubits.push_back(out.n_qubits++);
        return qubits;
    };
    for (std::size_t i = 0; i < diagram.dom().size(); ++i)
        wires.push_back(fresh_wire());

    for (const Layer& l : diagram.layers()) {
        const Box& box = l.box;
        const std::size_t d = box.dom.size();
        const std::size_t c = box.cod.size();
        const std::size_t o = l.offset;

        if (is_cap(box))
            throw NotCaplessError("cap box '" + box.name +
                                  "' cannot be lowered; eliminate caps "
                                  "before building circuits");

        std::vector<std::size_t> span;
        for (std::size_t i = 0; i < d; ++i)
            span.insert(span.end(), wires[o + i].begin(), wires[o + i].end());
        const std::size_t wide = c > d ? c : d;
        while (span.size() < wide * q) span.push_back(out.n_qubits++);

        if (is_cup(box)) {
            if (d != 2 || c != 0)
                throw ArityError("cup box '" + box.name +
                                 "' must take two wires to none");
            // Bell effect on each qubit pair, both legs post-selected.
            for (std::size_t i = 0; i < q; ++i) {
                const std::size_t a = span[i];
                const std::size_t b = span[q + i];
                out.gates.push_back({GateKind::h, {b}, {}});
                out.gates.push_back(
                    {GateKind::rz, {a}, AngleRef::constant(kPi / 2)});
                out.gates.push_back(
                    {GateKind::crz, {a, b}, AngleRef::constant(kPi)});
                out.gates.push_back({GateKind::h, {b}, {}});
                out.gates.push_back({GateKind::h, {a}, {}});
            }
            for (const std::size_t qb : span) out.postselect[qb] = 0;
            wires.erase(wires.begin() + static_cast<std::ptrdiff_t>(o),
                        wires.begin() + static_cast<std::ptrdiff_t>(o + d));
            continue;
        }

        const std::size_t width = span.size();
        std::size_t k = 0;
        if (width == 1) {
            for (std::size_t r = 0; r < params.rotations; ++r)
                out.gates.push_back({r % 2 == 0 ? GateKind::rx : GateKind::rz,
                                     {span[0]},
                                     AngleRef::sym(symbol_name(box, k++))});
        } else if (width >= 2) {
            for (std::size_t layer = 0; layer < params.layers; ++layer) {
                for (const std::size_t qb : span)
                    out.gates.push_back({GateKind::h, {qb}, {}});
                for (std::size_t i = 0; i + 1 < width; ++i)
                    out.gates.push_back(
                        {GateKind::crz,
                         {span[i], span[i + 1]},
                         AngleRef::sym(symbol_name(box, k++))});
            }
        }

        if (d > c)
            for (std::size_t i = c * q; i < span.size(); ++i)
                out.postselect[span[i]] = 0;

        wires.erase(wires.begin() + static_cast<std::ptrdiff_t>(o),
                    wires.begin() + static_cast<std::ptrdiff_t>(o + d));
        std::vector<std::vector<std::size_t>> produced;
        for (std::size_t i = 0; i < c; ++i)
            produced.emplace_back(span.begin() + static_cast<std::ptrdiff_t>(i * q),
                                  span.begin() + static_cast<std::ptrdiff_t>((i + 1) * q));
        wires.insert(wires.begin() + static_cast<std::ptrdiff_t>(o),
                     produced.begin(), produced.end());
    }

    if (wires.size() != 1)
        throw ArityError("diagram left " + std::to_string(wires.size()) +
                         " open wires; expected the sentence wire");
    out.output_qubits = wires.front();
    return out;
}

std::size_t circuit_depth(const Circuit& circuit) {
    std::vector<std::size_t> level(circuit.n_qubits, 0);
    std::size_t depth = 0;
    for (const Gate& g : circuit.gates) {
        std::size_t d = 0;
        for (const std::size_t q : g.qubits)
            if (level[q] > d) d = level[q];
        ++d;
        for (const std::size_t q : g.qubits) level[q] = d;
        if (d > depth) depth = d;
    }
    return depth;
}

CircuitStats circuit_stats(const std::vector<Circuit>& circuits) {
    CircuitStats stats;
    stats.circuits = circuits.size();
    stats.params = ParamSpace(circuits).size();
    double depth_sum = 0.0;
    double qubit_sum = 0.0;
    for (const Circuit& c : circuits) {
        depth_sum += static_cast<double>(circuit_depth(c));
        qubit_sum += static_cast<double>(c.n_qubits);
        for (const Gate& g : c.gates) {
            switch (g.kind) {
                case GateKind::h: ++stats.h; break;
                case GateKind::rx: ++stats.rx; break;
                case GateKind::rz: ++stats.rz; break;
                case GateKind::crz: ++stats.crz; break;
            }
        }
    }
    if (!circuits.empty()) {
        stats.avg_depth = depth_sum / static_cast<double>(circuits.size());
        stats.avg_qubits = qubit_sum / static_cast<double>(circuits.size());
    }
    return stats;
}

std::string circuit_stats_csv(const CircuitStats& stats) {
    char row[256];
    std::snprintf(row, sizeof row, "%zu,%zu,%.6f,%.6f,%zu,%zu,%zu,%zu\n",
                  stats.circuits, stats.params, stats.avg_depth,
                  stats.avg_qubits, stats.h, stats.rx, stats.rz, stats.crz);
    return std::string("circuits,params,avg_depth,avg_qubits,h,rx,rz,crz\n") +
           row;
}

}  // namespace s2c
