#include <cmath>
#include <complex>
#include <cstddef>

#include "s2c/error.hpp"
#include "s2c/sim.hpp"

// Reference kernels: straightforward block-and-offset loops, deliberately
// written without the index tricks of the parallel versions so the two can
// check each other.

namespace s2c::serial {

namespace {

using cd = std::complex<double>;

void require_qubit(const State& state, std::size_t qubit) {
    if ((std::size_t{1} << qubit) >= state.size())
        throw SimulationError("qubit index out of range");
}

}  // namespace

void apply_h(State& state, std::size_t qubit) {
    require_qubit(state, qubit);
    const std::size_t stride = std::size_t{1} << qubit;
    const double inv = 1.0 / std::sqrt(2.0);
    for (std::size_t base = 0; base < state.size(); base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const cd a = state[base + off];
            const cd b = state[base + off + stride];
            state[base + off] = (a + b) * inv;
            state[base + off + stride] = (a - b) * inv;
        }
    }
}

void apply_rx(State& state, std::size_t qubit, double theta) {
    require_qubit(state, qubit);
    const std::size_t stride = std::size_t{1} << qubit;
    const double c = std::cos(theta / 2);
    const cd s(0.0, -std::sin(theta / 2));
    for (std::size_t base = 0; base < state.size(); base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            const cd a = state[base + off];
            const cd b = state[base + off + stride];
            state[base + off] = c * a + s * b;
            state[base + off + stride] = s * a + c * b;
        }
    }
}

void apply_rz(State& state, std::size_t qubit, double theta) {
    require_qubit(state, qubit);
    const std::size_t stride = std::size_t{1} << qubit;
    const cd lo = std::polar(1.0, -theta / 2);
    const cd hi = std::polar(1.0, theta / 2);
    for (std::size_t base = 0; base < state.size(); base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            state[base + off] *= lo;
            state[base + off + stride] *= hi;
        }
    }
}

void apply_crz(State& state, std::size_t control, std::size_t target,
               double theta) {
    require_qubit(state, control);
    require_qubit(state, target);
    if (control == target)
        throw SimulationError("crz control and target must differ");
    const cd lo = std::polar(1.0, -theta / 2);
    const cd hi = std::polar(1.0, theta / 2);
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (!(i & (std::size_t{1} << control))) continue;
        state[i] *= (i & (std::size_t{1} << target)) ? hi : lo;
    }
}

}  // namespace s2c::serial
