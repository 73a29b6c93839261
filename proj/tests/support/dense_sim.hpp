#pragma once

// Dense-matrix simulator used as a test oracle.  Builds the full 2^n x 2^n
// matrix for every gate (kron products for one-qubit gates, an explicit
// diagonal for crz) and applies it by naive matrix-vector multiplication.
// Slow but obviously correct, and structurally unrelated to the strided
// kernels in src/sim.cpp.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "s2c/error.hpp"
#include "s2c/sim.hpp"

namespace s2c::test {

using cd = std::complex<double>;
using Mat = std::vector<std::vector<cd>>;

inline Mat identity_mat(std::size_t dim) {
    Mat m(dim, std::vector<cd>(dim, cd(0.0)));
    for (std::size_t i = 0; i < dim; ++i) m[i][i] = cd(1.0);
    return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
    const std::size_t ra = a.size(), ca = a[0].size();
    const std::size_t rb = b.size(), cb = b[0].size();
    Mat m(ra * rb, std::vector<cd>(ca * cb, cd(0.0)));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ca; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < cb; ++l)
                    m[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
    return m;
}

// Embeds a one-qubit gate at `qubit` in an n-qubit register.  Index bit q
// of the state vector is qubit q, so the embedding is
// I_{2^(n-q-1)} (x) u (x) I_{2^q}.
inline Mat embed_single(std::size_t n_qubits, std::size_t qubit, const Mat& u) {
    Mat m = kron(u, identity_mat(std::size_t{1} << qubit));
    return kron(identity_mat(std::size_t{1} << (n_qubits - qubit - 1)), m);
}

inline Mat h_mat() {
    const double inv = 1.0 / std::sqrt(2.0);
    return {{cd(inv), cd(inv)}, {cd(inv), cd(-inv)}};
}

inline Mat rx_mat(double theta) {
    const cd c(std::cos(theta / 2), 0.0);
    const cd s(0.0, -std::sin(theta / 2));
    return {{c, s}, {s, c}};
}

inline Mat rz_mat(double theta) {
    return {{std::polar(1.0, -theta / 2), cd(0.0)},
            {cd(0.0), std::polar(1.0, theta / 2)}};
}

inline Mat crz_mat(std::size_t n_qubits, std::size_t control, std::size_t target,
                   double theta) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    Mat m(dim, std::vector<cd>(dim, cd(0.0)));
    for (std::size_t i = 0; i < dim; ++i) {
        cd phase(1.0);
        if (i & (std::size_t{1} << control))
            phase = std::polar(1.0, (i & (std::size_t{1} << target))
                                        ? theta / 2
                                        : -theta / 2);
        m[i][i] = phase;
    }
    return m;
}

inline double gate_angle(const ResolvedGate& g, const std::vector<double>& params) {
    return g.symbolic ? params.at(g.param) : g.constant;
}

inline Mat gate_matrix(std::size_t n_qubits, const ResolvedGate& g,
                       const std::vector<double>& params) {
    switch (g.kind) {
        case GateKind::h:
            return embed_single(n_qubits, g.qubits[0], h_mat());
        case GateKind::rx:
            return embed_single(n_qubits, g.qubits[0], rx_mat(gate_angle(g, params)));
        case GateKind::rz:
            return embed_single(n_qubits, g.qubits[0], rz_mat(gate_angle(g, params)));
        case GateKind::crz:
            return crz_mat(n_qubits, g.qubits[0], g.qubits[1], gate_angle(g, params));
    }
    throw SimulationError("unknown gate kind");
}

inline State apply_mat(const Mat& m, const State& v) {
    State out(m.size(), cd(0.0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

// Runs the whole circuit through dense matrices from |0...0>.
inline State dense_evolve(const ResolvedCircuit& circuit,
                          const std::vector<double>& params) {
    State state(std::size_t{1} << circuit.n_qubits, cd(0.0));
    state[0] = cd(1.0);
    for (const auto& g : circuit.gates)
        state = apply_mat(gate_matrix(circuit.n_qubits, g, params), state);
    return state;
}

inline double norm_squared(const State& v) {
    double total = 0.0;
    for (const auto& amp : v) total += std::norm(amp);
    return total;
}

inline double max_abs_diff(const State& a, const State& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace s2c::test
