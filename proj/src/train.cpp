#include "s2c/train.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>

#include "s2c/error.hpp"
#include "s2c/parallel.hpp"

namespace s2c {

// ---------------------------------------------------------------------------
// binning

namespace {

// Indices of `values` in stable ascending value order.
std::vector<std::size_t> sorted_order(const std::vector<double>& values) {
    for (const double v : values)
        if (!std::isfinite(v))
            throw BinningError("label values must be finite");
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                         return values[a] < values[b];
                     });
    return order;
}

void check_binnable(const std::vector<double>& values, std::size_t n_classes) {
    if (n_classes == 0) throw BinningError("need at least one class");
    if (values.size() < n_classes)
        throw BinningError("fewer values (" + std::to_string(values.size()) +
                           ") than classes (" + std::to_string(n_classes) +
                           ")");
    std::set<double> distinct(values.begin(), values.end());
    if (distinct.size() < n_classes)
        throw BinningError("only " + std::to_string(distinct.size()) +
                           " distinct values for " +
                           std::to_string(n_classes) + " classes");
}

// Class of sorted position p out of n, for k classes.
std::size_t rank_class(std::size_t p, std::size_t n, std::size_t k) {
    return p * k / n;
}

}  // namespace

ClassBinning bin_labels(const std::vector<double>& values,
                        std::size_t n_classes) {
    check_binnable(values, n_classes);
    const std::vector<std::size_t> order = sorted_order(values);
    const std::size_t n = values.size();

    ClassBinning out;
    out.n_classes = n_classes;
    out.class_ranges.assign(n_classes, {0.0, 0.0});
    std::vector<bool> seen(n_classes, false);
    for (std::size_t p = 0; p < n; ++p) {
        const double v = values[order[p]];
        const std::size_t c = rank_class(p, n, n_classes);
        if (!seen[c]) {
            out.class_ranges[c] = {v, v};
            seen[c] = true;
        } else {
            out.class_ranges[c].second = v;
        }
    }
    for (std::size_t c = 1; c < n_classes; ++c)
        out.boundaries.push_back(out.class_ranges[c].first);
    return out;
}

std::vector<std::size_t> assign_classes(const std::vector<double>& values,
                                        std::size_t n_classes) {
    check_binnable(values, n_classes);
    const std::vector<std::size_t> order = sorted_order(values);
    std::vector<std::size_t> labels(values.size(), 0);
    for (std::size_t p = 0; p < order.size(); ++p)
        labels[order[p]] = rank_class(p, order.size(), n_classes);
    return labels;
}

std::size_t classify(const ClassBinning& binning, double value) {
    std::size_t cls = 0;
    for (const double b : binning.boundaries)
        if (b <= value) ++cls;
    return cls;
}

std::string class_bitstring(std::size_t cls, std::size_t qubits) {
    std::string out;
    for (std::size_t i = 0; i < qubits; ++i)
        out += (cls >> i) & 1 ? '1' : '0';
    return out;
}

// ---------------------------------------------------------------------------
// loss and accuracy

namespace {

void check_batch(const std::vector<double>& theta,
                 const std::vector<LabeledCircuit>& batch) {
    for (const LabeledCircuit& item : batch) {
        const std::size_t classes = std::size_t{1}
                                    << item.circuit.output_qubits.size();
        if (item.label >= classes)
            throw TrainingError("label " + std::to_string(item.label) +
                                " out of range for " +
                                std::to_string(classes) + " classes");
        for (const ResolvedGate& g : item.circuit.gates)
            if (g.symbolic && g.param >= theta.size())
                throw TrainingError(
                    "parameter vector too short for the batch");
    }
}

}  // namespace

double loss(const std::vector<double>& theta,
            const std::vector<LabeledCircuit>& batch) {
    if (batch.empty()) throw TrainingError("loss over an empty batch");
    check_batch(theta, batch);
    std::vector<double> terms(batch.size());
    parallel_for(batch.size(), [&](std::size_t i) {
        const OutputDistribution od =
            output_distribution(batch[i].circuit, theta);
        const double denom =
            1.0 + static_cast<double>(od.probs.size()) * kLossEps;
        const double p = (od.probs[batch[i].label] + kLossEps) / denom;
        terms[i] = -std::log(p);
    });
    const double total = deterministic_sum(
        batch.size(), [&](std::size_t i) { return terms[i]; });
    return total / static_cast<double>(batch.size());
}

double accuracy(const std::vector<double>& theta,
                const std::vector<LabeledCircuit>& batch) {
    if (batch.empty()) return 0.0;
    check_batch(theta, batch);
    std::vector<double> correct(batch.size());
    parallel_for(batch.size(), [&](std::size_t i) {
        const OutputDistribution od =
            output_distribution(batch[i].circuit, theta);
        std::size_t best = 0;
        for (std::size_t c = 1; c < od.probs.size(); ++c)
            if (od.probs[c] > od.probs[best]) best = c;
        correct[i] = best == batch[i].label ? 1.0 : 0.0;
    });
    const double hits = deterministic_sum(
        batch.size(), [&](std::size_t i) { return correct[i]; });
    return 100.0 * hits / static_cast<double>(batch.size());
}

// ---------------------------------------------------------------------------
// SPSA

void SpsaConfig::validate() const {
    if (!(a > 0.0) || !(c > 0.0))
        throw TrainingError("SPSA scales a and c must be positive");
    if (!(gamma > 0.0) || !(gamma < alpha) || !(alpha <= 1.0))
        throw TrainingError(
            "SPSA decay exponents need 0 < gamma < alpha <= 1");
}

namespace {

std::string theta_preview(const std::vector<double>& theta) {
    std::string out = "[";
    const std::size_t shown = std::min<std::size_t>(theta.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%s%.6g", i ? ", " : "", theta[i]);
        out += buf;
    }
    if (theta.size() > shown) out += ", ...";
    return out + "]";
}

std::vector<double> spsa_update(const std::vector<double>& theta,
                                std::size_t k, const SpsaConfig& cfg,
                                const LossFn& loss_fn,
                                const std::vector<int>& delta) {
    cfg.validate();
    const double ak = cfg.a / std::pow(static_cast<double>(k) + 1.0, cfg.alpha);
    const double ck = cfg.c / std::pow(static_cast<double>(k) + 1.0, cfg.gamma);

    std::vector<double> plus = theta;
    std::vector<double> minus = theta;
    for (std::size_t i = 0; i < theta.size(); ++i) {
        plus[i] += ck * delta[i];
        minus[i] -= ck * delta[i];
    }
    const double lp = loss_fn(plus);
    const double lm = loss_fn(minus);
    if (!std::isfinite(lp) || !std::isfinite(lm))
        throw TrainingError("non-finite loss at iteration " +
                            std::to_string(k) + "; theta = " +
                            theta_preview(theta));

    // g_i = (lp - lm) / (2 c_k delta_i); with delta_i = +-1 the division is
    // a multiplication, and delta_i = 0 leaves the coordinate untouched.
    const double scale = (lp - lm) / (2.0 * ck);
    std::vector<double> out = theta;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= ak * scale * delta[i];
    return out;
}

}  // namespace

std::vector<double> spsa_step(const std::vector<double>& theta, std::size_t k,
                              const SpsaConfig& cfg, const LossFn& loss_fn,
                              const CounterRng& rng,
                              const std::vector<bool>* active) {
    if (active && active->size() != theta.size())
        throw TrainingError("active mask size mismatch");
    std::vector<int> delta(theta.size(), 0);
    for (std::size_t i = 0; i < theta.size(); ++i) {
        if (active && !(*active)[i]) continue;
        delta[i] = rng.rademacher(k * theta.size() + i);
    }
    return spsa_update(theta, k, cfg, loss_fn, delta);
}

std::vector<double> spsa_step_with_delta(const std::vector<double>& theta,
                                         std::size_t k, const SpsaConfig& cfg,
                                         const LossFn& loss_fn,
                                         const std::vector<int>& delta) {
    if (delta.size() != theta.size())
        throw TrainingError("delta size mismatch");
    for (const int d : delta)
        if (d != -1 && d != 0 && d != 1)
            throw TrainingError("delta entries must be -1, 0, or +1");
    return spsa_update(theta, k, cfg, loss_fn, delta);
}

SpsaConfig grid_search_spsa(const SpsaConfig& base,
                            const std::vector<double>& theta,
                            const std::vector<LabeledCircuit>& batch,
                            std::size_t probe_iterations) {
    static const double kAs[] = {0.01, 0.05, 0.1, 0.5};
    static const double kCs[] = {0.01, 0.05, 0.1};
    const CounterRng rng(base.seed, fnv1a("spsa-grid"));
    const LossFn fn = [&](const std::vector<double>& th) {
        return loss(th, batch);
    };

    SpsaConfig best = base;
    double best_loss = 0.0;
    bool first = true;
    for (const double a : kAs) {
        for (const double c : kCs) {
            SpsaConfig probe = base;
            probe.a = a;
            probe.c = c;
            std::vector<double> th = theta;
            for (std::size_t k = 0; k < probe_iterations; ++k)
                th = spsa_step(th, k, probe, fn, rng);
            const double final_loss = loss(th, batch);
            if (first || final_loss < best_loss) {
                best = probe;
                best_loss = final_loss;
                first = false;
            }
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// incremental training

std::vector<std::size_t> auto_schedule(std::size_t n_train) {
    static const std::size_t kRamp[] = {5, 10, 20, 40, 80, 160, 320};
    std::vector<std::size_t> out;
    if (n_train == 0) return out;
    for (const std::size_t step : kRamp)
        if (step < n_train) out.push_back(step);
    out.push_back(n_train);
    return out;
}

namespace {

std::vector<std::size_t> symbol_indices(const ResolvedCircuit& circuit) {
    std::set<std::size_t> seen;
    for (const ResolvedGate& g : circuit.gates)
        if (g.symbolic) seen.insert(g.param);
    return {seen.begin(), seen.end()};
}

bool evaluable(const ResolvedCircuit& circuit,
               const std::vector<bool>& initialized) {
    for (const ResolvedGate& g : circuit.gates)
        if (g.symbolic && !initialized[g.param]) return false;
    return true;
}

// Accuracy over the evaluable subset of a split; empty subset scores 0.
std::pair<double, std::size_t> filtered_accuracy(
    const std::vector<double>& theta,
    const std::vector<LabeledCircuit>& split,
    const std::vector<bool>& initialized) {
    std::vector<LabeledCircuit> live;
    for (const LabeledCircuit& item : split)
        if (evaluable(item.circuit, initialized)) live.push_back(item);
    return {accuracy(theta, live), live.size()};
}

void check_schedule(const std::vector<std::size_t>& schedule,
                    std::size_t n_train) {
    if (schedule.empty()) throw TrainingError("empty training schedule");
    if (schedule.front() == 0)
        throw TrainingError("the first stage must train at least 1 circuit");
    for (std::size_t s = 1; s < schedule.size(); ++s)
        if (schedule[s] < schedule[s - 1])
            throw TrainingError("training schedule must be non-decreasing");
    if (schedule.back() > n_train)
        throw TrainingError("schedule stage " +
                            std::to_string(schedule.back()) +
                            " exceeds the training set of " +
                            std::to_string(n_train));
}

}  // namespace

TrainResult train_incremental(const ParamSpace& space,
                              const SplitCircuits& data,
                              const TrainOptions& options) {
    options.spsa.validate();
    if (data.train.empty()) throw TrainingError("empty training set");
    const std::vector<std::size_t> schedule = options.schedule.empty()
                                                  ? auto_schedule(
                                                        data.train.size())
                                                  : options.schedule;
    check_schedule(schedule, data.train.size());

    TrainResult result;
    result.theta.assign(space.size(), 0.0);
    result.initialized.assign(space.size(), false);
    result.spsa = options.spsa;

    const CounterRng init_rng(options.spsa.seed, fnv1a("param-init"));
    std::vector<LabeledCircuit> batch;
    std::size_t covered = 0;

    for (std::size_t s = 0; s < schedule.size(); ++s) {
        // Extend the stage batch; symbols joining the batch go live with a
        // uniform angle keyed by their name, so initialization does not
        // depend on the order circuits reach it.
        for (; covered < schedule[s]; ++covered) {
            const LabeledCircuit& item = data.train[covered];
            batch.push_back(item);
            for (const std::size_t idx : symbol_indices(item.circuit)) {
                if (result.initialized[idx]) continue;
                result.theta[idx] = init_rng.angle(fnv1a(space.names()[idx]));
                result.initialized[idx] = true;
            }
        }

        if (s == 0 && options.grid_search)
            result.spsa = grid_search_spsa(result.spsa, result.theta, batch,
                                           options.grid_probe_iterations);

        const auto t0 = std::chrono::steady_clock::now();
        const CounterRng delta_rng(
            result.spsa.seed, fnv1a("spsa-delta/stage-" + std::to_string(s)));
        const LossFn fn = [&](const std::vector<double>& th) {
            return loss(th, batch);
        };
        for (std::size_t k = 0; k < result.spsa.iterations; ++k)
            result.theta = spsa_step(result.theta, k, result.spsa, fn,
                                     delta_rng, &result.initialized);
        result.iterations += result.spsa.iterations;
        const auto t1 = std::chrono::steady_clock::now();

        StageRow row;
        row.train_circuits = schedule[s];
        row.loss_value = loss(result.theta, batch);
        row.train_accuracy =
            filtered_accuracy(result.theta, data.train, result.initialized)
                .first;
        const auto [test_acc, test_n] =
            filtered_accuracy(result.theta, data.test, result.initialized);
        row.test_accuracy = test_acc;
        row.evaluable_test = test_n;
        row.valid_accuracy =
            filtered_accuracy(result.theta, data.valid, result.initialized)
                .first;
        if (options.record_timing)
            row.seconds = std::chrono::duration<double>(t1 - t0).count();
        result.trace.rows.push_back(row);

        if (options.on_checkpoint)
            options.on_checkpoint(
                s, checkpoint_json(space, result.theta, result.initialized,
                                   result.iterations));
    }
    return result;
}

// ---------------------------------------------------------------------------
// trace output

std::string trace_csv(const TrainingTrace& trace) {
    std::string out = "train/circ,train/acc,test/acc,valid/acc,loss,seconds\n";
    for (const StageRow& row : trace.rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%zu,%.2f,%.2f,%.2f,%.6f,%.3f\n",
                      row.train_circuits, row.train_accuracy,
                      row.test_accuracy, row.valid_accuracy, row.loss_value,
                      row.seconds);
        out += line;
    }
    return out;
}

std::vector<double> test_train_ratio(const TrainingTrace& trace) {
    std::vector<double> out;
    for (const StageRow& row : trace.rows)
        out.push_back(static_cast<double>(row.evaluable_test) /
                      static_cast<double>(row.train_circuits));
    return out;
}

std::string ratio_csv(const TrainingTrace& trace) {
    const std::vector<double> ratios = test_train_ratio(trace);
    std::string out = "train/circ,test_train_ratio\n";
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        char line[64];
        std::snprintf(line, sizeof line, "%zu,%.6f\n",
                      trace.rows[i].train_circuits, ratios[i]);
        out += line;
    }
    return out;
}

// ---------------------------------------------------------------------------
// checkpoints

json checkpoint_json(const ParamSpace& space, const std::vector<double>& theta,
                     const std::vector<bool>& initialized,
                     std::size_t iteration) {
    json symbols = json::object();
    for (std::size_t i = 0; i < space.size(); ++i)
        if (initialized[i]) symbols[space.names()[i]] = theta[i];
    json out;
    out["symbols"] = std::move(symbols);
    out["iteration"] = iteration;
    return out;
}

Checkpoint checkpoint_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("/: expected object");
    if (!j.contains("symbols") || !j["symbols"].is_object())
        throw FormatError("/symbols: expected object");
    if (!j.contains("iteration") || !j["iteration"].is_number_unsigned())
        throw FormatError("/iteration: expected non-negative integer");
    Checkpoint out;
    for (const auto& [name, value] : j["symbols"].items()) {
        if (!value.is_number())
            throw FormatError("/symbols/" + name + ": expected number");
        out.symbols.emplace_back(name, value.get<double>());
    }
    std::sort(out.symbols.begin(), out.symbols.end());
    out.iteration = j["iteration"].get<std::size_t>();
    return out;
}

}  // namespace s2c
