#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "s2c/circuit.hpp"
#include "s2c/jsonio.hpp"
#include "s2c/rng.hpp"
#include "s2c/sim.hpp"

namespace s2c {

// ---------------------------------------------------------------------------
// label binning

// Equal-frequency binning summary over a training label column. Classes are
// closed value intervals; `boundaries[i]` is the smallest training value of
// class i+1, so classify() sends a value to the number of boundaries at or
// below it. Tied values straddling a cut stay in rank order (stable), which
// can make adjacent ranges touch at the tie value.
struct ClassBinning {
    std::size_t n_classes = 0;
    std::vector<double> boundaries;                        // n_classes - 1
    std::vector<std::pair<double, double>> class_ranges;   // [lo, hi] each
};

// Bin `values` into n_classes equal-frequency classes (sizes differ by at
// most one). Raises BinningError when there are fewer values or fewer
// distinct values than classes, or when a value is not finite.
ClassBinning bin_labels(const std::vector<double>& values,
                        std::size_t n_classes);

// Per-value class labels for the same data, by stable sort rank: position p
// of N lands in class floor(p * n_classes / N). This is the assignment
// bin_labels summarizes; ties follow input order.
std::vector<std::size_t> assign_classes(const std::vector<double>& values,
                                        std::size_t n_classes);

// Class of a new value by the stored boundaries.
std::size_t classify(const ClassBinning& binning, double value);

// Class index as a measurement bitstring, least significant bit first: with
// two qubits the classes read 00, 10, 01, 11.
std::string class_bitstring(std::size_t cls, std::size_t qubits);

// ---------------------------------------------------------------------------
// loss and accuracy

// A circuit bound to a parameter space plus its class label.
struct LabeledCircuit {
    ResolvedCircuit circuit;
    std::size_t label = 0;
};

// Smoothing constant for the cross-entropy loss.
inline constexpr double kLossEps = 1e-9;

// Mean smoothed cross-entropy -log p(label) over the batch, where p comes
// from output_distribution and is smoothed as (p + eps)/(1 + classes*eps).
// Degenerate post-selection already yields the uniform distribution. Raises
// TrainingError on an empty batch or an out-of-range label.
double loss(const std::vector<double>& theta,
            const std::vector<LabeledCircuit>& batch);

// Percentage of circuits whose most probable class equals the label (ties
// break toward the lowest class index). An empty set scores 0.
double accuracy(const std::vector<double>& theta,
                const std::vector<LabeledCircuit>& batch);

// ---------------------------------------------------------------------------
// SPSA

struct SpsaConfig {
    double a = 0.1;        // step-size scale
    double c = 0.1;        // perturbation scale
    double alpha = 0.602;  // step decay exponent
    double gamma = 0.101;  // perturbation decay exponent
    std::size_t iterations = 100;  // SPSA steps per training stage
    std::uint64_t seed = 0;

    // Requires a, c > 0 and 0 < gamma < alpha <= 1; raises TrainingError.
    void validate() const;
};

using LossFn = std::function<double(const std::vector<double>&)>;

// One simultaneous-perturbation step: draw delta in {-1,+1}^dim from `rng`
// at counters k*dim .. k*dim+dim-1, estimate the gradient from exactly two
// loss evaluations at theta +- c_k*delta, and descend with step a_k, where
// a_k = a/(k+1)^alpha and c_k = c/(k+1)^gamma. When `active` is given,
// inactive coordinates are neither perturbed nor updated. A non-finite loss
// raises TrainingError naming the iteration and parameters.
std::vector<double> spsa_step(const std::vector<double>& theta, std::size_t k,
                              const SpsaConfig& cfg, const LossFn& loss_fn,
                              const CounterRng& rng,
                              const std::vector<bool>* active = nullptr);

// Deterministic test hook: the same update with a caller-chosen delta.
// Entries must be -1, 0 (skip the coordinate), or +1.
std::vector<double> spsa_step_with_delta(const std::vector<double>& theta,
                                         std::size_t k, const SpsaConfig& cfg,
                                         const LossFn& loss_fn,
                                         const std::vector<int>& delta);

// Probe every (a, c) pair in {0.01, 0.05, 0.1, 0.5} x {0.01, 0.05, 0.1}
// with `probe_iterations` steps from `theta` on `batch` and return `base`
// with a and c replaced by the pair reaching the lowest final loss (first
// in scan order on ties). All probes share one delta stream.
SpsaConfig grid_search_spsa(const SpsaConfig& base,
                            const std::vector<double>& theta,
                            const std::vector<LabeledCircuit>& batch,
                            std::size_t probe_iterations);

// ---------------------------------------------------------------------------
// incremental training

struct StageRow {
    std::size_t train_circuits = 0;  // training prefix length of this stage
    double train_accuracy = 0.0;     // percent, evaluable circuits only
    double test_accuracy = 0.0;
    double valid_accuracy = 0.0;
    double loss_value = 0.0;         // final-theta loss on the stage batch
    double seconds = 0.0;            // 0 unless timing is recorded
    std::size_t evaluable_test = 0;  // test circuits with all symbols live
};

struct TrainingTrace {
    std::vector<StageRow> rows;
};

// CSV with header exactly: train/circ,train/acc,test/acc,valid/acc,loss,seconds
std::string trace_csv(const TrainingTrace& trace);

// Evaluable-test over training-set size per row.
std::vector<double> test_train_ratio(const TrainingTrace& trace);

// CSV with header train/circ,test_train_ratio.
std::string ratio_csv(const TrainingTrace& trace);

// Stage-size ramp 5, 10, 20, 40, 80, 160, 320 clamped to n_train, with
// n_train itself as the final stage.
std::vector<std::size_t> auto_schedule(std::size_t n_train);

struct SplitCircuits {
    std::vector<LabeledCircuit> train;
    std::vector<LabeledCircuit> test;
    std::vector<LabeledCircuit> valid;
};

struct TrainOptions {
    SpsaConfig spsa;
    // Stage sizes over the training prefix; empty = auto_schedule. Must be
    // non-decreasing, start at >= 1, and stay within the training set.
    std::vector<std::size_t> schedule;
    bool record_timing = false;  // trace seconds stay 0 when off
    bool grid_search = false;    // tune a and c on the first stage batch
    std::size_t grid_probe_iterations = 25;
    // Called after each stage with the stage index and checkpoint document.
    std::function<void(std::size_t, const json&)> on_checkpoint;
};

struct TrainResult {
    std::vector<double> theta;       // over the full parameter space
    std::vector<bool> initialized;   // coordinates that went live
    TrainingTrace trace;
    std::size_t iterations = 0;      // total SPSA steps across stages
    SpsaConfig spsa;                 // config actually used (post grid search)
};

// Train the shared parameter vector over the schedule: stage s runs SPSA on
// the first schedule[s] training circuits, warm-starting from the previous
// stage; symbols joining the batch are initialized uniformly in [0, 2*pi)
// keyed by symbol name, and only live symbols are perturbed or updated.
// After each stage the trace records accuracies over the circuits of each
// split whose symbols are all live. Identical inputs produce bit-identical
// results.
TrainResult train_incremental(const ParamSpace& space,
                              const SplitCircuits& data,
                              const TrainOptions& options);

// Checkpoint document: {"symbols": {name: radians, ...}, "iteration": k}
// with one entry per live symbol, sorted by name.
json checkpoint_json(const ParamSpace& space, const std::vector<double>& theta,
                     const std::vector<bool>& initialized,
                     std::size_t iteration);

struct Checkpoint {
    std::vector<std::pair<std::string, double>> symbols;  // sorted by name
    std::size_t iteration = 0;
};

// Parse a checkpoint document; raises FormatError on shape errors.
Checkpoint checkpoint_from_json(const json& j);

}  // namespace s2c
