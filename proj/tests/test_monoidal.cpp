#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <string>

#include "s2c/diagram.hpp"
#include "s2c/diagram_json.hpp"
#include "s2c/error.hpp"
#include "s2c/functor.hpp"
#include "s2c/pregroup.hpp"
#include "support/gen.hpp"

using namespace s2c;
using test::Gen;

namespace {

std::string msg_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("type factors: printing and adjoint steps") {
    TypeFactor n{"n", 0};
    CHECK(n.str() == "n");
    CHECK(n.left().str() == "n.l");
    CHECK(n.right().str() == "n.r");
    CHECK(n.left().left().str() == "n.l.l");
    CHECK(n.right().right().str() == "n.r.r");
    CHECK(n.left().right() == n);
    CHECK(n.right().left() == n);
}

TEST_CASE("type factors: contractibility") {
    TypeFactor a{"a", 0};
    CHECK(contractible(a.left(), a));   // a.l (x) a
    CHECK(contractible(a, a.right()));  // a (x) a.r
    CHECK_FALSE(contractible(a.right(), a));
    CHECK_FALSE(contractible(a, a.left()));
    CHECK_FALSE(contractible(a, a));
    CHECK_FALSE(contractible({"a", 0}, {"b", 1}));
    CHECK(contractible({"a", 2}, {"a", 3}));
}

TEST_CASE("types: unit, tensor and printing") {
    PregroupType unit;
    CHECK(unit.str() == "I");
    CHECK(unit.empty());

    PregroupType n = PregroupType::base("n");
    PregroupType s = PregroupType::base("s");
    CHECK(n.tensor(s).str() == "n@s");
    CHECK(unit.tensor(n) == n);
    CHECK(n.tensor(unit) == n);

    PregroupType t{{"n", 1}, {"n", 0}, {"s", -1}};
    CHECK(t.str() == "n.r@n@s.l");
    CHECK(t.slice(1, 2).str() == "n@s.l");
    CHECK(t.slice(0, 0) == unit);
}

TEST_CASE("types: adjoints reverse order and shift windings") {
    PregroupType t{{"a", 0}, {"b", 1}};
    CHECK(t.left_adjoint() == PregroupType{{"b", 0}, {"a", -1}});
    CHECK(t.right_adjoint() == PregroupType{{"b", 2}, {"a", 1}});
    CHECK(t.left_adjoint().right_adjoint() == t);
    CHECK(t.right_adjoint().left_adjoint() == t);
    CHECK(adjoint(t, Side::left) == t.left_adjoint());
    CHECK(adjoint(t, Side::right) == t.right_adjoint());
}

TEST_CASE("types: iterated adjoint equals folded single steps") {
    Gen g(7);
    for (int trial = 0; trial < 50; ++trial) {
        const PregroupType t = test::random_type(g);
        for (int steps = -3; steps <= 3; ++steps) {
            PregroupType folded = t;
            for (int i = 0; i < steps; ++i) folded = folded.right_adjoint();
            for (int i = 0; i > steps; --i) folded = folded.left_adjoint();
            CHECK(t.iterated_adjoint(steps) == folded);
        }
    }
}

TEST_CASE("cups and caps") {
    TypeFactor n{"n", 0};
    Box cup_n = cup(n);
    CHECK(cup_n.name == "cup_n");
    CHECK(cup_n.dom == PregroupType{n, n.right()});
    CHECK(cup_n.cod == PregroupType{});
    Box cap_n = cap(n);
    CHECK(cap_n.name == "cap_n");
    CHECK(cap_n.dom == PregroupType{});
    CHECK(cap_n.cod == PregroupType{n.right(), n});

    CHECK(is_cup(cup_n));
    CHECK_FALSE(is_cap(cup_n));
    CHECK(is_cap(cap_n));
    CHECK_FALSE(is_cup(cap_n));

    // A cup of n.l contracts n.l (x) n.
    Box cup_l = cup(n.left());
    CHECK(cup_l.dom == PregroupType{n.left(), n});
    CHECK(contractible(cup_l.dom[0], cup_l.dom[1]));
}

TEST_CASE("diagram construction validates layers") {
    PregroupType n = PregroupType::base("n");
    Box f{"f", n, n.tensor(n)};

    CHECK_NOTHROW(Diagram(n, {{0, f}}));
    // Offset out of range.
    const std::string m1 = msg_of([&] { Diagram d(n, {{1, f}}); });
    CHECK(contains(m1, "layer 0"));
    CHECK(contains(m1, "'f'"));
    // Wrong wire type under the box.
    Box g{"g", PregroupType::base("s"), n};
    const std::string m2 = msg_of([&] { Diagram d(n, {{0, g}}); });
    CHECK(contains(m2, "layer 0"));
    CHECK(contains(m2, "expects s"));
    CHECK(contains(m2, "are n"));
    CHECK_THROWS_AS(Diagram(n, {{0, g}}), CompositionError);
}

TEST_CASE("composition: boundaries, identities, associativity") {
    Gen g(11);
    for (int trial = 0; trial < 30; ++trial) {
        const PregroupType dom = test::random_type(g);
        const Diagram a = test::random_diagram(g, dom, 3);
        const Diagram b = test::random_diagram(g, a.cod(), 3);
        const Diagram c = test::random_diagram(g, b.cod(), 3);

        CHECK(Diagram::id(dom).then(a) == a);
        CHECK(a.then(Diagram::id(a.cod())) == a);
        CHECK(a.then(b).then(c) == a.then(b.then(c)));
        CHECK(a.then(b).dom() == a.dom());
        CHECK(a.then(b).cod() == b.cod());
    }
}

TEST_CASE("composition mismatch names both boundary types") {
    Diagram a = Diagram::from_box({"f", PregroupType::base("a"),
                                   PregroupType::base("b")});
    Diagram b = Diagram::from_box({"g", PregroupType::base("c"),
                                   PregroupType::base("a")});
    CHECK_THROWS_AS(a.then(b), CompositionError);
    const std::string m = msg_of([&] { a.then(b); });
    CHECK(contains(m, "codomain b"));
    CHECK(contains(m, "domain c"));
}

TEST_CASE("tensor: unit, associativity, boundaries") {
    Gen g(13);
    const Diagram unit = Diagram::id(PregroupType{});
    for (int trial = 0; trial < 30; ++trial) {
        const Diagram a = test::random_diagram(g, test::random_type(g), 2);
        const Diagram b = test::random_diagram(g, test::random_type(g), 2);
        const Diagram c = test::random_diagram(g, test::random_type(g), 2);

        CHECK(tensor(unit, a) == a);
        CHECK(tensor(a, unit) == a);
        CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
        CHECK(tensor(a, b).dom() == a.dom().tensor(b.dom()));
        CHECK(tensor(a, b).cod() == a.cod().tensor(b.cod()));
    }
}

TEST_CASE("tensor agrees with left-then-right sequential execution") {
    Gen g(17);
    for (int trial = 0; trial < 30; ++trial) {
        const Diagram f = test::random_diagram(g, test::random_type(g), 3);
        const Diagram h = test::random_diagram(g, test::random_type(g), 3);
        const Diagram lhs = tensor(f, Diagram::id(h.dom()))
                                .then(tensor(Diagram::id(f.cod()), h));
        CHECK(lhs == tensor(f, h));
    }
}

TEST_CASE("interchange: both execution orders share a normal form") {
    // Anchored diagrams only: state boxes have no input wires to pin down
    // their lateral position, so normal_form is canonical only when every
    // box consumes at least one wire.
    Gen g(19);
    for (int trial = 0; trial < 30; ++trial) {
        const Diagram f = test::random_anchored_diagram(g, 3);
        const Diagram h = test::random_anchored_diagram(g, 3);
        const Diagram left_first = tensor(f, Diagram::id(h.dom()))
                                       .then(tensor(Diagram::id(f.cod()), h));
        const Diagram right_first = tensor(Diagram::id(f.dom()), h)
                                        .then(tensor(f, Diagram::id(h.cod())));
        CHECK(left_first.normal_form() == right_first.normal_form());
    }
}

TEST_CASE("normal form: explicit bubble, idempotence, boundary safety") {
    PregroupType a = PregroupType::base("a");
    Box wide{"wide", a, a.tensor(a)};   // 1 -> 2 wires
    Box lone{"lone", a, PregroupType{}};  // 1 -> 0 wires

    // `lone` acts strictly left of `wide`, so it hoists above it; `wide`'s
    // offset shrinks by the width `lone` removed.
    Diagram d(a.tensor(a), {{1, wide}, {0, lone}});
    Diagram nf = d.normal_form();
    REQUIRE(nf.layers().size() == 2);
    CHECK(nf.layers()[0].box == lone);
    CHECK(nf.layers()[0].offset == 0);
    CHECK(nf.layers()[1].box == wide);
    CHECK(nf.layers()[1].offset == 0);
    CHECK(nf.dom() == d.dom());
    CHECK(nf.cod() == d.cod());
    CHECK(nf.normal_form() == nf);

    Gen g(23);
    for (int trial = 0; trial < 50; ++trial) {
        const Diagram r = test::random_diagram(g, test::random_type(g), 5);
        const Diagram n1 = r.normal_form();
        CHECK(n1.normal_form() == n1);
        CHECK(n1.dom() == r.dom());
        CHECK(n1.cod() == r.cod());
    }
}

TEST_CASE("dagger: involution, boundary swap, cup/cap renaming") {
    PregroupType n = PregroupType::base("n");
    Box f{"f", n, n.tensor(n)};
    Diagram d = Diagram::from_box(f);
    Diagram dg = d.dagger();
    CHECK(dg.dom() == d.cod());
    CHECK(dg.cod() == d.dom());
    CHECK(dg.layers()[0].box.name == "f");
    CHECK(dg.dagger() == d);

    // Cup names flip to cap names and back.
    TypeFactor nf{"n", 0};
    Diagram cup_d = Diagram::from_box(cup(nf));
    Diagram cup_dg = cup_d.dagger();
    CHECK(cup_dg.layers()[0].box.name == "cap_n");
    CHECK(is_cap(cup_dg.layers()[0].box));
    CHECK(cup_dg.layers()[0].box.dom == PregroupType{});
    CHECK(cup_dg.layers()[0].box.cod == cup(nf).dom);
    CHECK(cup_dg.dagger() == cup_d);

    Diagram cap_d = Diagram::from_box(cap(nf));
    CHECK(cap_d.dagger().layers()[0].box.name == "cup_n");
    CHECK(cap_d.dagger().dagger() == cap_d);
}

TEST_CASE("dagger distributes contravariantly over composition") {
    Gen g(29);
    for (int trial = 0; trial < 30; ++trial) {
        const Diagram a = test::random_diagram(g, test::random_type(g), 3);
        const Diagram b = test::random_diagram(g, a.cod(), 3);
        CHECK(a.then(b).dagger() == b.dagger().then(a.dagger()));
        CHECK(a.dagger().dagger() == a);
    }
}

TEST_CASE("diagram json: round trip and text shape") {
    Gen g(31);
    for (int trial = 0; trial < 30; ++trial) {
        const Diagram d = test::random_diagram(g, test::random_type(g), 4);
        const std::string text = serialize_diagram(d);
        CHECK(text.back() == '\n');
        CHECK(deserialize_diagram(text) == d);
    }
}

TEST_CASE("diagram json: malformed documents point at the fault") {
    CHECK_THROWS_AS(deserialize_diagram("not json"), FormatError);

    const std::string missing =
        msg_of([] { deserialize_diagram("{\"cod\": [], \"layers\": []}"); });
    CHECK(contains(missing, "/dom"));

    const std::string neg = msg_of([] {
        deserialize_diagram(
            "{\"dom\": [], \"cod\": [], \"layers\": ["
            "{\"offset\": -1, \"name\": \"f\", \"dom\": [], \"cod\": []}]}");
    });
    CHECK(contains(neg, "/layers/0/offset"));

    // Declared codomain disagrees with the one the layers compute.
    const std::string codm = msg_of([] {
        deserialize_diagram(
            "{\"dom\": [[\"n\", 0]], \"cod\": [], \"layers\": []}");
    });
    CHECK(contains(codm, "/cod"));

    // Ill-typed layer surfaces as a format error, not a composition error.
    CHECK_THROWS_AS(
        deserialize_diagram(
            "{\"dom\": [], \"cod\": [], \"layers\": ["
            "{\"offset\": 0, \"name\": \"f\", \"dom\": [[\"n\", 0]], "
            "\"cod\": []}]}"),
        FormatError);
}

TEST_CASE("functor: identity, laws, adjoint-compatible object map") {
    Gen g(37);
    for (int trial = 0; trial < 20; ++trial) {
        const PregroupType dom = test::random_type(g);
        const Diagram a = test::random_diagram(g, dom, 3);
        const Diagram b = test::random_diagram(g, a.cod(), 3);

        CHECK(apply_functor(test::identity_functor(a), a) == a);

        const Diagram ab = a.then(b);
        const FunctorSpec spec = test::random_functor(g, ab);
        CHECK(apply_functor(spec, ab) ==
              apply_functor(spec, a).then(apply_functor(spec, b)));
        CHECK(apply_functor(spec, Diagram::id(dom)) ==
              Diagram::id(spec.apply(dom)));
    }
}

TEST_CASE("functor: tensor law") {
    Gen g(41);
    for (int trial = 0; trial < 20; ++trial) {
        const Diagram a = test::random_diagram(g, test::random_type(g), 3);
        const Diagram b = test::random_diagram(g, test::random_type(g), 3);
        const Diagram ab = tensor(a, b);
        const FunctorSpec spec = test::random_functor(g, ab);
        CHECK(apply_functor(spec, ab) ==
              tensor(apply_functor(spec, a), apply_functor(spec, b)));
    }
}

TEST_CASE("functor: object map extends to adjoint windings") {
    FunctorSpec spec;
    spec.map_object("n", PregroupType{{"q", 0}, {"q", 0}});
    const PregroupType img =
        spec.apply(PregroupType{{"n", -1}});
    CHECK(img == PregroupType{{"q", -1}, {"q", -1}});
    const PregroupType img2 = spec.apply(PregroupType{{"n", 2}});
    CHECK(img2 == PregroupType{{"q", 2}, {"q", 2}});
}

TEST_CASE("functor: missing mappings are reported eagerly by name") {
    Diagram a = Diagram::from_box({"known", PregroupType::base("a"),
                                   PregroupType::base("a")});
    Diagram unmapped = Diagram::from_box({"mystery", PregroupType::base("a"),
                                          PregroupType::base("a")});
    FunctorSpec spec = test::identity_functor(a);

    CHECK_THROWS_AS(apply_functor(spec, unmapped), MissingMappingError);
    const std::string m = msg_of([&] { apply_functor(spec, unmapped); });
    CHECK(contains(m, "mystery"));

    const std::string mo =
        msg_of([&] { spec.apply(PregroupType::base("zeta")); });
    CHECK(contains(mo, "zeta"));
}

TEST_CASE("functor: image boundary mismatches rejected at registration") {
    FunctorSpec spec;
    spec.map_object("a", PregroupType::base("x"));
    Box f{"f", PregroupType::base("a"), PregroupType::base("a")};
    Diagram bad = Diagram::from_box({"Ff", PregroupType::base("x"),
                                     PregroupType{{"x", 0}, {"x", 0}}});
    CHECK_THROWS_AS(spec.map_box(f, bad), CompositionError);
    const std::string m = msg_of([&] { spec.map_box(f, bad); });
    CHECK(contains(m, "'f'"));
}

TEST_CASE("law suite: 1000 randomized iterations") {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Gen g(seed);
        const PregroupType dom = test::random_type(g);
        const Diagram d = test::random_diagram(g, dom, 1 + g.u(5));

        REQUIRE(d.dagger().dagger() == d);
        REQUIRE(d.normal_form().normal_form() == d.normal_form());
        REQUIRE(d.normal_form().cod() == d.cod());
        REQUIRE(deserialize_diagram(serialize_diagram(d)) == d);
        REQUIRE(Diagram::id(dom).then(d) == d);
        REQUIRE(apply_functor(test::identity_functor(d), d) == d);

        const Diagram e = test::random_diagram(g, d.cod(), 1 + g.u(3));
        REQUIRE(d.then(e).dagger() == e.dagger().then(d.dagger()));
        const FunctorSpec spec = test::random_functor(g, d.then(e));
        REQUIRE(apply_functor(spec, d.then(e)) ==
                apply_functor(spec, d).then(apply_functor(spec, e)));

        const Diagram p = test::random_anchored_diagram(g, 3);
        const Diagram q = test::random_anchored_diagram(g, 3);
        const Diagram pq_left = tensor(p, Diagram::id(q.dom()))
                                    .then(tensor(Diagram::id(p.cod()), q));
        const Diagram pq_right = tensor(Diagram::id(p.dom()), q)
                                     .then(tensor(p, Diagram::id(q.cod())));
        REQUIRE(pq_left.normal_form() == pq_right.normal_form());
    }
}
