#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "s2c/ansatz.hpp"
#include "s2c/circuit.hpp"
#include "s2c/error.hpp"
#include "s2c/grammar.hpp"
#include "s2c/jsonio.hpp"
#include "s2c/sql.hpp"

using namespace s2c;

namespace {

const std::string kExample1 =
    "SELECT cat_name, favourite_food FROM cats WHERE cat_name = 'Whiskers';";

const TypeFactor kN{"n", 0};
const TypeFactor kNl{"n", -1};
const TypeFactor kS{"s", 0};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

Diagram capless_for(const std::string& sql) {
    return remove_caps(cfg_to_pregroup(ast_to_cfg_diagram(parse_sql(sql)), {}));
}

// Compact one-line gate description used to freeze whole gate lists.
std::string gate_sig(const Gate& g) {
    std::string out = gate_kind_name(g.kind);
    for (std::size_t i = 0; i < g.qubits.size(); ++i)
        out += (i ? "," : " ") + std::to_string(g.qubits[i]);
    if (g.angle) {
        if (g.angle->symbolic) {
            out += " " + g.angle->symbol;
        } else {
            char buf[32];
            std::snprintf(buf, sizeof buf, " const:%.4f", g.angle->value);
            out += buf;
        }
    }
    return out;
}

std::vector<std::string> gate_sigs(const Circuit& c) {
    std::vector<std::string> out;
    for (const Gate& g : c.gates) out.push_back(gate_sig(g));
    return out;
}

std::map<GateKind, std::size_t> gate_counts(const Circuit& c) {
    std::map<GateKind, std::size_t> counts;
    for (const Gate& g : c.gates) ++counts[g.kind];
    return counts;
}

}  // namespace

// ---------------------------------------------------------------------------
// build_circuit on the running example

TEST_CASE("lowering the running example produces the frozen circuit") {
    const Circuit c = build_circuit(capless_for(kExample1), {});

    CHECK(c.n_qubits == 6);
    CHECK(c.postselect ==
          std::map<std::size_t, int>{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}});
    CHECK(c.output_qubits == std::vector<std::size_t>{0});

    const auto counts = gate_counts(c);
    CHECK(counts.at(GateKind::h) == 7);
    CHECK(counts.at(GateKind::rx) == 10);
    CHECK(counts.at(GateKind::rz) == 5);
    CHECK(counts.at(GateKind::crz) == 5);
    CHECK(collect_symbols(c).size() == 20);

    const std::vector<std::string> expected = {
        "H 0",
        "H 1",
        "H 2",
        "H 3",
        "H 4",
        "CRZ 0,1 SELECT__I__s@n.l@n.l@n.l@n.l__0",
        "CRZ 1,2 SELECT__I__s@n.l@n.l@n.l@n.l__1",
        "CRZ 2,3 SELECT__I__s@n.l@n.l@n.l@n.l__2",
        "CRZ 3,4 SELECT__I__s@n.l@n.l@n.l@n.l__3",
        "RX 4 cat_name__n.l__I__0",
        "RZ 4 cat_name__n.l__I__1",
        "RX 4 cat_name__n.l__I__2",
        "RX 3 favourite_food__n.l__I__0",
        "RZ 3 favourite_food__n.l__I__1",
        "RX 3 favourite_food__n.l__I__2",
        "RX 2 cats__n.l__I__0",
        "RZ 2 cats__n.l__I__1",
        "RX 2 cats__n.l__I__2",
        "RX 5 cat_name__I__n__0",
        "RZ 5 cat_name__I__n__1",
        "RX 5 cat_name__I__n__2",
        "H 1",
        "H 5",
        "CRZ 1,5 =__n.l@n__n.l__0",
        "RX 1 'Whiskers'__n.l__I__0",
        "RZ 1 'Whiskers'__n.l__I__1",
        "RX 1 'Whiskers'__n.l__I__2",
    };
    CHECK(gate_sigs(c) == expected);
}

TEST_CASE("the two cat_name occurrences have distinct roles and symbols") {
    // One occurrence consumes a select-item wire, the other is the literal
    // comparison operand; their boundaries differ, so they must not share
    // parameters even though the word is the same.
    const Circuit c = build_circuit(capless_for(kExample1), {});
    const auto symbols = collect_symbols(c);
    auto has = [&](const std::string& name) {
        return std::find(symbols.begin(), symbols.end(), name) != symbols.end();
    };
    CHECK(has("cat_name__n.l__I__0"));
    CHECK(has("cat_name__I__n__0"));
    CHECK(has("=__n.l@n__n.l__0"));
    CHECK(has("SELECT__I__s@n.l@n.l@n.l@n.l__3"));
    CHECK(!has("cat_name__n.l__I__3"));
}

TEST_CASE("equal words share parameters across circuits") {
    const Circuit ct = build_circuit(capless_for("SELECT a FROM t"), {});
    const Circuit cu = build_circuit(capless_for("SELECT a FROM u"), {});

    // Each circuit: SELECT over three wires (2 symbols) plus two one-wire
    // words (3 rotations each).
    CHECK(collect_symbols(ct).size() == 8);
    CHECK(collect_symbols(cu).size() == 8);

    const ParamSpace space({ct, cu});
    // SELECT and the shared item `a` overlap; only t/u differ.
    CHECK(space.size() == 11);
    CHECK(space.contains("SELECT__I__s@n.l@n.l__0"));
    CHECK(space.contains("a__n.l__I__2"));
    CHECK(space.contains("t__n.l__I__0"));
    CHECK(space.contains("u__n.l__I__0"));
    CHECK(!space.contains("a__n.l__I__3"));
}

TEST_CASE("wire width and entangling depth scale with the knobs") {
    CircuitParams params;
    params.qubits_per_wire = 2;
    params.layers = 2;
    const Circuit c = build_circuit(capless_for(kExample1), params);

    CHECK(c.n_qubits == 12);
    CHECK(c.postselect.size() == 10);
    CHECK(c.output_qubits == std::vector<std::size_t>{0, 1});
    for (const auto& [qubit, bit] : c.postselect) {
        CHECK(qubit >= 2);
        CHECK(bit == 0);
    }

    // Every box now spans at least two qubits, so rotations disappear and
    // each box runs `layers` blocks of an h column plus a crz ladder.
    const auto counts = gate_counts(c);
    CHECK(counts.at(GateKind::h) == 48);
    CHECK(counts.at(GateKind::crz) == 34);
    CHECK(counts.count(GateKind::rx) == 0);
    CHECK(counts.count(GateKind::rz) == 0);
    CHECK(collect_symbols(c).size() == 34);
}

TEST_CASE("one-wire boxes ignore layers and follow rotations") {
    const Diagram word(PregroupType{},
                       {Layer{0, Box{"w", PregroupType{}, PregroupType{kS}}}});
    CircuitParams params;
    params.rotations = 4;
    params.layers = 9;
    const Circuit c = build_circuit(word, params);

    CHECK(c.n_qubits == 1);
    CHECK(c.postselect.empty());
    CHECK(c.output_qubits == std::vector<std::size_t>{0});
    const std::vector<std::string> expected = {
        "RX 0 w__I__s__0",
        "RZ 0 w__I__s__1",
        "RX 0 w__I__s__2",
        "RZ 0 w__I__s__3",
    };
    CHECK(gate_sigs(c) == expected);
}

TEST_CASE("cup boxes lower to the constant-angle Bell effect") {
    const Diagram d(PregroupType{},
                    {Layer{0, Box{"f", PregroupType{}, PregroupType{kS, kNl}}},
                     Layer{2, Box{"g", PregroupType{}, PregroupType{kN}}},
                     Layer{1, cup(kNl)}});
    const Circuit c = build_circuit(d, {});

    CHECK(c.n_qubits == 3);
    CHECK(c.postselect == std::map<std::size_t, int>{{1, 0}, {2, 0}});
    CHECK(c.output_qubits == std::vector<std::size_t>{0});

    const std::vector<std::string> expected = {
        "H 0",
        "H 1",
        "CRZ 0,1 f__I__s@n.l__0",
        "RX 2 g__I__n__0",
        "RZ 2 g__I__n__1",
        "RX 2 g__I__n__2",
        "H 2",
        "RZ 1 const:1.5708",
        "CRZ 1,2 const:3.1416",
        "H 2",
        "H 1",
    };
    CHECK(gate_sigs(c) == expected);

    // The contraction gates carry fixed angles, not parameters.
    for (std::size_t i = 6; i < c.gates.size(); ++i) {
        REQUIRE(!(c.gates[i].angle && c.gates[i].angle->symbolic));
    }
    CHECK(c.gates[7].angle->value == doctest::Approx(std::acos(0.0)));
    CHECK(c.gates[8].angle->value == doctest::Approx(2 * std::acos(0.0)));
}

TEST_CASE("caps are rejected with NotCaplessError") {
    const Diagram d(PregroupType{},
                    {Layer{0, cap(kNl)},
                     Layer{1, Box{"g", PregroupType{kNl}, PregroupType{}}},
                     Layer{0, Box{"w", PregroupType{kN}, PregroupType{kS}}}});
    REQUIRE(d.cod() == PregroupType{kS});
    CHECK_THROWS_AS(build_circuit(d, {}), const NotCaplessError&);
    const std::string msg = [&] {
        try {
            build_circuit(d, {});
        } catch (const NotCaplessError& e) {
            return std::string(e.what());
        }
        return std::string();
    }();
    CHECK(contains(msg, "cap_n"));
    CHECK(contains(msg, "eliminate caps"));
}

TEST_CASE("the codomain must be exactly one sentence wire") {
    const Box word_n{"w", PregroupType{}, PregroupType{kN}};
    const Box word_s{"w", PregroupType{}, PregroupType{kS}};

    CHECK_THROWS_AS(
        build_circuit(Diagram(PregroupType{}, {Layer{0, word_n}}), {}),
        const ArityError&);
    CHECK_THROWS_AS(build_circuit(Diagram(PregroupType{},
                                          {Layer{0, word_s}, Layer{1, word_s}}),
                                  {}),
                    const ArityError&);

    CircuitParams sigma;
    sigma.sentence_base = "sigma";
    CHECK_THROWS_AS(
        build_circuit(Diagram(PregroupType{}, {Layer{0, word_s}}), sigma),
        const ArityError&);

    CircuitParams zero;
    zero.qubits_per_wire = 0;
    CHECK_THROWS_AS(
        build_circuit(Diagram(PregroupType{}, {Layer{0, word_s}}), zero),
        const ArityError&);
}

TEST_CASE("a malformed cup-named box is rejected") {
    const Diagram d(
        PregroupType{},
        {Layer{0, Box{"w", PregroupType{}, PregroupType{kS, kN}}},
         Layer{1, Box{"cup_x", PregroupType{kN}, PregroupType{}}}});
    CHECK_THROWS_AS(build_circuit(d, {}), const ArityError&);
}

// ---------------------------------------------------------------------------
// circuit JSON

TEST_CASE("circuits round-trip through JSON") {
    const Circuit c = build_circuit(capless_for(kExample1), {});
    CHECK(deserialize_circuit(serialize_circuit(c)) == c);

    CircuitParams wide;
    wide.qubits_per_wire = 2;
    const Circuit c2 = build_circuit(capless_for("SELECT a FROM t"), wide);
    CHECK(deserialize_circuit(serialize_circuit(c2)) == c2);
}

TEST_CASE("circuit JSON uses the documented field layout") {
    Circuit c;
    c.n_qubits = 2;
    c.gates.push_back({GateKind::h, {0}, {}});
    c.gates.push_back({GateKind::rx, {1}, AngleRef::sym("w__I__n__0")});
    c.gates.push_back({GateKind::crz, {0, 1}, AngleRef::constant(0.5)});
    c.postselect[1] = 0;
    c.output_qubits = {0};

    const json j = circuit_to_json(c);
    CHECK(j["n_qubits"] == 2);
    CHECK(j["gates"].size() == 3);
    CHECK(!j["gates"][0].contains("angle"));
    CHECK(j["gates"][1]["angle"]["sym"] == "w__I__n__0");
    CHECK(j["gates"][2]["angle"]["const"] == 0.5);
    CHECK(j["postselect"]["1"] == 0);
    CHECK(j["output_qubits"][0] == 0);
    CHECK(circuit_from_json(j) == c);

    const std::string text = serialize_circuit(c);
    CHECK(contains(text, "\"kind\": \"CRZ\""));
    CHECK(text.back() == '\n');
}

TEST_CASE("circuit JSON rejects malformed documents") {
    auto reject = [](const std::string& text, const std::string& needle) {
        try {
            deserialize_circuit(text);
            FAIL_CHECK("expected FormatError for ", text);
        } catch (const FormatError& e) {
            CHECK_MESSAGE(contains(e.what(), needle), e.what());
        }
    };

    reject(R"({"gates": [], "postselect": {}, "output_qubits": []})",
           "n_qubits");
    reject(R"({"n_qubits": 1, "gates": [{"kind": "swap", "qubits": [0]}],
               "postselect": {}, "output_qubits": []})",
           "unknown gate kind");
    reject(R"({"n_qubits": 2, "gates": [{"kind": "CRZ", "qubits": [0]}],
               "postselect": {}, "output_qubits": []})",
           "arity");
    reject(R"({"n_qubits": 1, "gates": [{"kind": "H", "qubits": [3]}],
               "postselect": {}, "output_qubits": []})",
           "out of range");
    reject(R"({"n_qubits": 1,
               "gates": [{"kind": "H", "qubits": [0], "angle": {"const": 1}}],
               "postselect": {}, "output_qubits": []})",
           "H takes no angle");
    reject(R"({"n_qubits": 1, "gates": [{"kind": "RX", "qubits": [0]}],
               "postselect": {}, "output_qubits": []})",
           "angle");
    reject(R"({"n_qubits": 1,
               "gates": [{"kind": "RX", "qubits": [0], "angle": {"mu": 1}}],
               "postselect": {}, "output_qubits": []})",
           "angle");
    reject(R"({"n_qubits": 1, "gates": [], "postselect": {"x": 0},
               "output_qubits": []})",
           "bad qubit key");
    reject(R"({"n_qubits": 1, "gates": [], "postselect": {"0": 2},
               "output_qubits": []})",
           "bit must be 0 or 1");
    reject(R"({"n_qubits": 2, "gates": [], "postselect": {"0": 0},
               "output_qubits": [0]})",
           "post-selected");
}

// ---------------------------------------------------------------------------
// parameter spaces

TEST_CASE("ParamSpace is the sorted union of circuit symbols") {
    Circuit a;
    a.n_qubits = 1;
    a.gates.push_back({GateKind::rx, {0}, AngleRef::sym("beta")});
    a.gates.push_back({GateKind::rz, {0}, AngleRef::sym("alpha")});
    Circuit b;
    b.n_qubits = 1;
    b.gates.push_back({GateKind::rx, {0}, AngleRef::sym("beta")});
    b.gates.push_back({GateKind::rz, {0}, AngleRef::sym("gamma")});
    b.gates.push_back({GateKind::rz, {0}, AngleRef::constant(1.0)});

    const ParamSpace space({a, b});
    CHECK(space.names() ==
          std::vector<std::string>{"alpha", "beta", "gamma"});
    CHECK(space.size() == 3);
    CHECK(space.index_of("alpha") == 0);
    CHECK(space.index_of("gamma") == 2);
    CHECK(space.contains("beta"));
    CHECK(!space.contains("delta"));
    try {
        space.index_of("delta");
        FAIL_CHECK("expected SimulationError");
    } catch (const SimulationError& e) {
        CHECK(contains(e.what(), "'delta'"));
        CHECK(contains(e.what(), "not in the parameter space"));
    }
}

TEST_CASE("collect_symbols is sorted and deduplicated") {
    Circuit c;
    c.n_qubits = 2;
    c.gates.push_back({GateKind::rz, {1}, AngleRef::sym("b")});
    c.gates.push_back({GateKind::rx, {0}, AngleRef::sym("a")});
    c.gates.push_back({GateKind::rz, {0}, AngleRef::sym("b")});
    c.gates.push_back({GateKind::h, {0}, {}});
    CHECK(collect_symbols(c) == std::vector<std::string>{"a", "b"});
}

// ---------------------------------------------------------------------------
// depth and stats

TEST_CASE("circuit_depth follows the longest chain through any qubit") {
    Circuit c;
    c.n_qubits = 3;
    CHECK(circuit_depth(c) == 0);

    c.gates.push_back({GateKind::h, {0}, {}});
    c.gates.push_back({GateKind::h, {1}, {}});
    c.gates.push_back({GateKind::h, {2}, {}});
    CHECK(circuit_depth(c) == 1);  // all three commute

    c.gates.push_back({GateKind::crz, {0, 1}, AngleRef::constant(1.0)});
    CHECK(circuit_depth(c) == 2);  // waits on both wires

    c.gates.push_back({GateKind::rx, {0}, AngleRef::sym("a")});
    CHECK(circuit_depth(c) == 3);

    c.gates.push_back({GateKind::rz, {2}, AngleRef::sym("b")});
    CHECK(circuit_depth(c) == 3);  // the free wire lags behind
}

TEST_CASE("circuit_stats aggregates gate totals and per-circuit means") {
    const Circuit a = build_circuit(capless_for(kExample1), {});
    const Circuit b = build_circuit(capless_for("SELECT a FROM t"), {});
    const CircuitStats stats = circuit_stats({a, b});

    CHECK(stats.circuits == 2);
    CHECK(stats.params == ParamSpace({a, b}).size());
    CHECK(stats.avg_qubits == doctest::Approx((6.0 + 3.0) / 2));
    const double depth_mean =
        (static_cast<double>(circuit_depth(a)) +
         static_cast<double>(circuit_depth(b))) /
        2;
    CHECK(stats.avg_depth == doctest::Approx(depth_mean));
    CHECK(stats.h == 7 + 3);
    CHECK(stats.rx == 10 + 4);
    CHECK(stats.rz == 5 + 2);
    CHECK(stats.crz == 5 + 2);

    const std::string csv = circuit_stats_csv(stats);
    CHECK(csv.rfind("circuits,params,avg_depth,avg_qubits,h,rx,rz,crz\n", 0) ==
          0);
    CHECK(contains(csv, "\n2,"));
    CHECK(csv.back() == '\n');
}
