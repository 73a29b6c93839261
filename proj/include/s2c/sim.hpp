#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <vector>

#include "s2c/circuit.hpp"

namespace s2c {

// Statevector over n qubits, little-endian: bit q of the index is qubit q.
using State = std::vector<std::complex<double>>;

std::size_t state_qubits(const State& state);

// In-place gate kernels (OpenMP-parallel).
//   rz(theta) = diag(exp(-i theta/2), exp(+i theta/2))
//   crz(theta): when the control bit is set, rz(theta) on the target
void apply_h(State& state, std::size_t qubit);
void apply_rx(State& state, std::size_t qubit, double theta);
void apply_rz(State& state, std::size_t qubit, double theta);
void apply_crz(State& state, std::size_t control, std::size_t target,
               double theta);

// Serial reference kernels: independent implementations kept for testing
// and benchmarking the parallel ones.
namespace serial {
void apply_h(State& state, std::size_t qubit);
void apply_rx(State& state, std::size_t qubit, double theta);
void apply_rz(State& state, std::size_t qubit, double theta);
void apply_crz(State& state, std::size_t control, std::size_t target,
               double theta);
}  // namespace serial

// A circuit with every symbolic angle replaced by an index into a
// parameter vector laid out by a ParamSpace.
struct ResolvedGate {
    GateKind kind = GateKind::h;
    std::vector<std::size_t> qubits;
    bool symbolic = false;
    std::size_t param = 0;   // index when symbolic
    double constant = 0.0;   // angle otherwise (unused for h)
};

struct ResolvedCircuit {
    std::size_t n_qubits = 0;
    std::vector<ResolvedGate> gates;
    std::map<std::size_t, int> postselect;
    std::vector<std::size_t> output_qubits;
};

// Raises SimulationError when the circuit uses a symbol outside the space.
ResolvedCircuit resolve(const Circuit& circuit, const ParamSpace& space);

// Statevector of the circuit applied to |0...0>, gates in list order.
State evolve(const ResolvedCircuit& circuit,
             const std::vector<double>& params, bool use_serial = false);

struct PostSelectResult {
    State reduced;  // unnormalized, over the unselected qubits ascending
    double success_probability = 0.0;
};

// Project qubits onto the given bits and drop them.
PostSelectResult post_select(const State& state,
                             const std::map<std::size_t, int>& bits);

struct OutputDistribution {
    std::vector<double> probs;  // indexed by class, bit i = output_qubits[i]
    double success_probability = 0.0;
    bool degenerate = false;    // post-selection weight below threshold
};

// Success probability below this renormalization threshold yields the
// uniform distribution with the degenerate flag set.
inline constexpr double kDegenerateEps = 1e-12;

OutputDistribution output_distribution(const ResolvedCircuit& circuit,
                                       const std::vector<double>& params);

// |<a|b>|^2 for normalized statevectors of equal size.
double state_fidelity(const State& a, const State& b);

}  // namespace s2c
