#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "s2c/circuit.hpp"
#include "s2c/diagram.hpp"

namespace s2c {

struct CircuitParams {
    std::size_t qubits_per_wire = 1;  // width of every diagram wire
    std::size_t layers = 1;           // entangling blocks per multi-qubit box
    std::size_t rotations = 3;        // rotation count for one-qubit boxes
    std::string sentence_base = "s";  // required codomain of the diagram
};

// Lower a capless sentence diagram onto qubits. Every wire carries
// `qubits_per_wire` qubits; a box spans its input qubits plus fresh ones on
// the right when its output is wider, and post-selects the trailing span
// when its input is wider. One-qubit boxes become `rotations` alternating
// rx/rz gates; wider boxes repeat `layers` blocks of an h column followed
// by a nearest-neighbour crz ladder, one fresh symbol per parameterized
// gate, with symbols named <box>__<dom>__<cod>__<k> so that equal words
// share parameters across circuits. Cup boxes turn into a constant-angle
// Bell effect with both legs post-selected; cap boxes raise
// NotCaplessError, and a codomain other than one sentence wire raises
// ArityError.
Circuit build_circuit(const Diagram& diagram, const CircuitParams& params);

struct CircuitStats {
    std::size_t circuits = 0;
    std::size_t params = 0;  // union of symbol names
    double avg_depth = 0.0;
    double avg_qubits = 0.0;
    std::size_t h = 0;
    std::size_t rx = 0;
    std::size_t rz = 0;
    std::size_t crz = 0;
};

// Longest gate chain through any qubit.
std::size_t circuit_depth(const Circuit& circuit);

CircuitStats circuit_stats(const std::vector<Circuit>& circuits);

// CSV with header circuits,params,avg_depth,avg_qubits,h,rx,rz,crz.
std::string circuit_stats_csv(const CircuitStats& stats);

}  // namespace s2c
