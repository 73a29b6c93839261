#include "s2c/sim.hpp"

#include <cmath>
#include <complex>
#include <cstddef>

#include "s2c/error.hpp"
#include "s2c/parallel.hpp"

namespace s2c {

namespace {

using cd = std::complex<double>;

void check_qubit(const State& state, std::size_t qubit) {
    if ((std::size_t{1} << qubit) >= state.size())
        throw SimulationError("qubit index out of range");
}

// Index of the pair partner: iterate j over all indices with bit `qubit`
// clear by re-inserting a zero bit into a dense counter.
inline std::size_t pair_base(std::size_t j, std::size_t qubit) {
    const std::size_t low = j & ((std::size_t{1} << qubit) - 1);
    return ((j >> qubit) << (qubit + 1)) | low;
}

}  // namespace

std::size_t state_qubits(const State& state) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < state.size()) ++n;
    if ((std::size_t{1} << n) != state.size())
        throw SimulationError("statevector length is not a power of two");
    return n;
}

void apply_h(State& state, std::size_t qubit) {
    check_qubit(state, qubit);
    static const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
    const std::size_t bit = std::size_t{1} << qubit;
    parallel_for(state.size() / 2, [&](std::size_t j) {
        const std::size_t i0 = pair_base(j, qubit);
        const std::size_t i1 = i0 | bit;
        const cd a = state[i0];
        const cd b = state[i1];
        state[i0] = (a + b) * kInvSqrt2;
        state[i1] = (a - b) * kInvSqrt2;
    });
}

void apply_rx(State& state, std::size_t qubit, double theta) {
    check_qubit(state, qubit);
    const double c = std::cos(theta / 2);
    const cd mis(0.0, -std::sin(theta / 2));
    const std::size_t bit = std::size_t{1} << qubit;
    parallel_for(state.size() / 2, [&](std::size_t j) {
        const std::size_t i0 = pair_base(j, qubit);
        const std::size_t i1 = i0 | bit;
        const cd a = state[i0];
        const cd b = state[i1];
        state[i0] = c * a + mis * b;
        state[i1] = mis * a + c * b;
    });
}

void apply_rz(State& state, std::size_t qubit, double theta) {
    check_qubit(state, qubit);
    const cd p0 = std::polar(1.0, -theta / 2);
    const cd p1 = std::polar(1.0, theta / 2);
    const std::size_t bit = std::size_t{1} << qubit;
    parallel_for(state.size(), [&](std::size_t i) {
        state[i] *= (i & bit) ? p1 : p0;
    });
}

void apply_crz(State& state, std::size_t control, std::size_t target,
               double theta) {
    check_qubit(state, control);
    check_qubit(state, target);
    if (control == target)
        throw SimulationError("crz control and target must differ");
    const cd p0 = std::polar(1.0, -theta / 2);
    const cd p1 = std::polar(1.0, theta / 2);
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    parallel_for(state.size(), [&](std::size_t i) {
        if (i & cbit) state[i] *= (i & tbit) ? p1 : p0;
    });
}

ResolvedCircuit resolve(const Circuit& circuit, const ParamSpace& space) {
    ResolvedCircuit out;
    out.n_qubits = circuit.n_qubits;
    out.postselect = circuit.postselect;
    out.output_qubits = circuit.output_qubits;
    for (const Gate& g : circuit.gates) {
        ResolvedGate rg;
        rg.kind = g.kind;
        rg.qubits = g.qubits;
        if (g.angle) {
            if (g.angle->symbolic) {
                rg.symbolic = true;
                rg.param = space.index_of(g.angle->symbol);
            } else {
                rg.constant = g.angle->value;
            }
        }
        out.gates.push_back(std::move(rg));
    }
    return out;
}

State evolve(const ResolvedCircuit& circuit,
             const std::vector<double>& params, bool use_serial) {
    State state(std::size_t{1} << circuit.n_qubits, cd{0.0, 0.0});
    state[0] = cd{1.0, 0.0};
    for (const ResolvedGate& g : circuit.gates) {
        double theta = g.constant;
        if (g.symbolic) {
            if (g.param >= params.size())
                throw SimulationError("parameter vector too short");
            theta = params[g.param];
        }
        switch (g.kind) {
            case GateKind::h:
                use_serial ? serial::apply_h(state, g.qubits[0])
                           : apply_h(state, g.qubits[0]);
                break;
            case GateKind::rx:
                use_serial ? serial::apply_rx(state, g.qubits[0], theta)
                           : apply_rx(state, g.qubits[0], theta);
                break;
            case GateKind::rz:
                use_serial ? serial::apply_rz(state, g.qubits[0], theta)
                           : apply_rz(state, g.qubits[0], theta);
                break;
            case GateKind::crz:
                use_serial
                    ? serial::apply_crz(state, g.qubits[0], g.qubits[1], theta)
                    : apply_crz(state, g.qubits[0], g.qubits[1], theta);
                break;
        }
    }
    return state;
}

PostSelectResult post_select(const State& state,
                             const std::map<std::size_t, int>& bits) {
    const std::size_t n = state_qubits(state);
    std::size_t select_mask = 0;
    std::size_t select_value = 0;
    for (const auto& [qubit, bit] : bits) {
        if (qubit >= n) throw SimulationError("post-selected qubit out of range");
        if (bit != 0 && bit != 1)
            throw SimulationError("post-selected bit must be 0 or 1");
        select_mask |= std::size_t{1} << qubit;
        if (bit) select_value |= std::size_t{1} << qubit;
    }

    PostSelectResult out;
    out.reduced.assign(std::size_t{1} << (n - bits.size()), cd{0.0, 0.0});
    parallel_for(out.reduced.size(), [&](std::size_t r) {
        // Scatter the reduced index bits into the unselected positions.
        std::size_t full = select_value;
        std::size_t next = 0;
        for (std::size_t qubit = 0; qubit < n; ++qubit) {
            if (select_mask & (std::size_t{1} << qubit)) continue;
            if (r & (std::size_t{1} << next)) full |= std::size_t{1} << qubit;
            ++next;
        }
        out.reduced[r] = state[full];
    });
    out.success_probability = deterministic_sum(
        out.reduced.size(),
        [&](std::size_t r) { return std::norm(out.reduced[r]); });
    return out;
}

OutputDistribution output_distribution(const ResolvedCircuit& circuit,
                                       const std::vector<double>& params) {
    for (const std::size_t q : circuit.output_qubits)
        if (circuit.postselect.count(q))
            throw SimulationError("output qubit is post-selected");

    const State state = evolve(circuit, params);
    const PostSelectResult sel = post_select(state, circuit.postselect);

    // Map each kept qubit to its bit position in the reduced index.
    const std::size_t n = circuit.n_qubits;
    std::vector<std::size_t> reduced_pos(n, n);
    std::size_t next = 0;
    for (std::size_t qubit = 0; qubit < n; ++qubit) {
        if (circuit.postselect.count(qubit)) continue;
        reduced_pos[qubit] = next++;
    }

    OutputDistribution out;
    out.success_probability = sel.success_probability;
    const std::size_t classes = std::size_t{1}
                                << circuit.output_qubits.size();
    out.probs.assign(classes, 0.0);
    if (sel.success_probability <= kDegenerateEps) {
        out.degenerate = true;
        for (double& p : out.probs) p = 1.0 / static_cast<double>(classes);
        return out;
    }
    for (std::size_t r = 0; r < sel.reduced.size(); ++r) {
        std::size_t cls = 0;
        for (std::size_t i = 0; i < circuit.output_qubits.size(); ++i) {
            const std::size_t pos = reduced_pos[circuit.output_qubits[i]];
            if (r & (std::size_t{1} << pos)) cls |= std::size_t{1} << i;
        }
        out.probs[cls] += std::norm(sel.reduced[r]) / sel.success_probability;
    }
    return out;
}

double state_fidelity(const State& a, const State& b) {
    if (a.size() != b.size())
        throw SimulationError("statevector sizes differ");
    cd inner{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i)
        inner += std::conj(a[i]) * b[i];
    return std::norm(inner);
}

}  // namespace s2c
