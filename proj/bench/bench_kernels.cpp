// Benchmark the OpenMP statevector kernels against the serial reference.
// Not part of the test suite; build the `bench_kernels` target and run it
// directly. The two implementations are also cross-checked here so a
// mis-measured speedup cannot hide a divergence.

#include <chrono>
#include <complex>
#include <cstdio>
#include <vector>

#include "CLI11.hpp"
#include "s2c/rng.hpp"
#include "s2c/sim.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using s2c::GateKind;
using s2c::ResolvedCircuit;
using s2c::ResolvedGate;
using s2c::State;

ResolvedCircuit random_circuit(std::uint64_t seed, std::size_t n_qubits,
                               std::size_t n_gates) {
    const s2c::CounterRng rng(seed, s2c::fnv1a("bench-kernels"));
    std::uint64_t ctr = 0;
    ResolvedCircuit c;
    c.n_qubits = n_qubits;
    for (std::size_t i = 0; i < n_gates; ++i) {
        ResolvedGate g;
        switch (rng.below(ctr++, 4)) {
            case 0: g.kind = GateKind::h; break;
            case 1: g.kind = GateKind::rx; break;
            case 2: g.kind = GateKind::rz; break;
            default: g.kind = GateKind::crz; break;
        }
        const std::size_t q0 = rng.below(ctr++, n_qubits);
        g.qubits = {q0};
        if (g.kind == GateKind::crz) {
            std::size_t q1 = rng.below(ctr++, n_qubits - 1);
            if (q1 >= q0) ++q1;
            g.qubits.push_back(q1);
        }
        g.constant = rng.angle(ctr++);
        c.gates.push_back(std::move(g));
    }
    return c;
}

double best_seconds(const ResolvedCircuit& c, bool use_serial, int reps,
                    State& out) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        out = s2c::evolve(c, {}, use_serial);
        const auto t1 = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(t1 - t0).count();
        if (s < best) best = s;
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n_qubits = 18;
    std::size_t n_gates = 64;
    int reps = 3;
    std::uint64_t seed = 1;

    CLI::App app{"statevector kernel benchmark: serial vs OpenMP"};
    app.add_option("--qubits", n_qubits, "register size")
        ->capture_default_str();
    app.add_option("--gates", n_gates, "random gates per run")
        ->capture_default_str();
    app.add_option("--reps", reps, "repetitions, best-of")
        ->capture_default_str();
    app.add_option("--seed", seed, "circuit seed")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    int threads = 1;
#ifdef _OPENMP
#pragma omp parallel
#pragma omp single
    threads = omp_get_num_threads();
#endif

    const ResolvedCircuit circuit = random_circuit(seed, n_qubits, n_gates);
    std::printf("qubits=%zu gates=%zu reps=%d threads=%d\n", n_qubits, n_gates,
                reps, threads);

    State serial_state;
    State parallel_state;
    const double ts = best_seconds(circuit, true, reps, serial_state);
    const double tp = best_seconds(circuit, false, reps, parallel_state);

    double diff = 0.0;
    for (std::size_t i = 0; i < serial_state.size(); ++i)
        diff = std::max(diff, std::abs(serial_state[i] - parallel_state[i]));

    std::printf("serial   : %9.3f ms\n", ts * 1e3);
    std::printf("parallel : %9.3f ms  (speedup %.2fx, max |diff| %.2e)\n",
                tp * 1e3, ts / tp, diff);
    return diff < 1e-12 ? 0 : 1;
}
