#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "s2c/error.hpp"
#include "s2c/grammar.hpp"

namespace s2c {

namespace {

struct PortRef {
    enum class Kind { box_in, box_out, boundary_dom, boundary_cod };
    Kind kind = Kind::boundary_dom;
    std::size_t box = 0;   // layer index, for box_in / box_out
    std::size_t slot = 0;  // port slot or boundary position
};

bool is_producer(const PortRef& p) {
    return p.kind == PortRef::Kind::box_out ||
           p.kind == PortRef::Kind::boundary_dom;
}

bool is_boundary(const PortRef& p) {
    return p.kind == PortRef::Kind::boundary_dom ||
           p.kind == PortRef::Kind::boundary_cod;
}

}  // namespace

Diagram remove_caps(const Diagram& diagram) {
    const std::vector<Layer>& layers = diagram.layers();
    const std::size_t n = layers.size();

    auto cup_connector = [](const Box& b) {
        return is_cup(b) && b.dom.size() == 2 && b.cod.empty();
    };
    auto cap_connector = [](const Box& b) {
        return is_cap(b) && b.dom.empty() && b.cod.size() == 2;
    };
    auto connector = [&](std::size_t li) {
        return cup_connector(layers[li].box) || cap_connector(layers[li].box);
    };

    bool any = false;
    for (std::size_t li = 0; li < n && !any; ++li) any = connector(li);
    if (!any) return diagram;

    // --- trace every wire to its producer and consumer port -------------
    struct Wire {
        TypeFactor type;
        PortRef from;
        PortRef to;
    };
    std::vector<Wire> wires;
    std::vector<std::size_t> running;
    for (std::size_t i = 0; i < diagram.dom().size(); ++i) {
        wires.push_back({diagram.dom()[i],
                         {PortRef::Kind::boundary_dom, 0, i},
                         {}});
        running.push_back(i);
    }
    for (std::size_t li = 0; li < n; ++li) {
        const Box& b = layers[li].box;
        const std::size_t off = layers[li].offset;
        for (std::size_t s = 0; s < b.dom.size(); ++s)
            wires[running[off + s]].to = {PortRef::Kind::box_in, li, s};
        std::vector<std::size_t> created;
        for (std::size_t s = 0; s < b.cod.size(); ++s) {
            wires.push_back({b.cod[s], {PortRef::Kind::box_out, li, s}, {}});
            created.push_back(wires.size() - 1);
        }
        running.erase(running.begin() + static_cast<std::ptrdiff_t>(off),
                      running.begin() +
                          static_cast<std::ptrdiff_t>(off + b.dom.size()));
        running.insert(running.begin() + static_cast<std::ptrdiff_t>(off),
                       created.begin(), created.end());
    }
    for (std::size_t i = 0; i < running.size(); ++i)
        wires[running[i]].to = {PortRef::Kind::boundary_cod, 0, i};

    // --- resolve cup/cap chains to their two terminal ports -------------
    std::map<std::size_t, std::array<std::size_t, 2>> conn_wires;
    for (std::size_t w = 0; w < wires.size(); ++w) {
        const PortRef& to = wires[w].to;
        if (to.kind == PortRef::Kind::box_in && connector(to.box))
            conn_wires[to.box][to.slot] = w;
        const PortRef& from = wires[w].from;
        if (from.kind == PortRef::Kind::box_out && connector(from.box))
            conn_wires[from.box][from.slot] = w;
    }

    auto is_conn_port = [&](const PortRef& p) {
        return (p.kind == PortRef::Kind::box_in ||
                p.kind == PortRef::Kind::box_out) &&
               connector(p.box);
    };
    std::set<std::size_t> chain_wires;
    auto walk = [&](std::size_t w, bool toward_to,
                    std::set<std::size_t>& conns) -> PortRef {
        for (;;) {
            chain_wires.insert(w);
            const PortRef end = toward_to ? wires[w].to : wires[w].from;
            if (!is_conn_port(end)) return end;
            if (!conns.insert(end.box).second)
                throw RewriteError("closed cup/cap loop cannot be rewritten");
            const auto& pair = conn_wires.at(end.box);
            w = pair[0] == w ? pair[1] : pair[0];
            // Leaving a cup we continue toward the other wire's producer;
            // leaving a cap, toward its consumer.
            toward_to = cap_connector(layers[end.box].box);
        }
    };

    struct Chain {
        PortRef a;
        PortRef b;
    };
    std::vector<Chain> chains;
    std::set<std::size_t> processed;
    for (std::size_t li = 0; li < n; ++li) {
        if (!connector(li) || processed.count(li)) continue;
        std::set<std::size_t> conns{li};
        const auto& pair = conn_wires.at(li);
        const bool via_to = cap_connector(layers[li].box);
        const PortRef a = walk(pair[0], via_to, conns);
        const PortRef b = walk(pair[1], via_to, conns);
        processed.insert(conns.begin(), conns.end());
        chains.push_back({a, b});
    }

    // --- decide transpositions and build the final wire set -------------
    struct BoxPlan {
        std::map<std::size_t, std::size_t> in_kept;    // in slot  -> wire
        std::map<std::size_t, std::size_t> in_to_cod;  // in slot  -> wire
        std::map<std::size_t, std::size_t> out_kept;   // out slot -> wire
        std::map<std::size_t, std::size_t> out_to_dom; // out slot -> wire
    };
    std::vector<TypeFactor> final_types;
    std::vector<BoxPlan> plans(n);
    std::map<std::size_t, std::size_t> dom_boundary_wire;

    auto new_wire = [&](const TypeFactor& t) {
        final_types.push_back(t);
        return final_types.size() - 1;
    };
    auto port_type = [&](const PortRef& p) -> const TypeFactor& {
        switch (p.kind) {
            case PortRef::Kind::box_in: return layers[p.box].box.dom[p.slot];
            case PortRef::Kind::box_out: return layers[p.box].box.cod[p.slot];
            case PortRef::Kind::boundary_dom: return diagram.dom()[p.slot];
            case PortRef::Kind::boundary_cod: return diagram.cod()[p.slot];
        }
        return diagram.dom()[0];  // unreachable
    };
    // Layer-order key; the domain boundary precedes all boxes, the codomain
    // boundary follows them.
    auto order_key = [&](const PortRef& p) -> std::ptrdiff_t {
        if (p.kind == PortRef::Kind::boundary_dom) return -1;
        if (p.kind == PortRef::Kind::boundary_cod)
            return static_cast<std::ptrdiff_t>(n);
        return static_cast<std::ptrdiff_t>(p.box);
    };
    auto attach_producer = [&](const PortRef& p, std::size_t wire) {
        if (p.kind == PortRef::Kind::boundary_dom)
            dom_boundary_wire[p.slot] = wire;
        else
            plans[p.box].out_kept[p.slot] = wire;
    };
    auto attach_consumer = [&](const PortRef& p, std::size_t wire) {
        if (p.kind == PortRef::Kind::box_in)
            plans[p.box].in_kept[p.slot] = wire;
        // boundary_cod: the wire simply stays open.
    };

    for (std::size_t w = 0; w < wires.size(); ++w) {
        if (chain_wires.count(w)) continue;
        const std::size_t id = new_wire(wires[w].type);
        attach_producer(wires[w].from, id);
        attach_consumer(wires[w].to, id);
    }
    for (const Chain& c : chains) {
        const bool a_prod = is_producer(c.a);
        const bool b_prod = is_producer(c.b);
        if (a_prod == b_prod && is_boundary(c.a) && is_boundary(c.b))
            throw IrreducibleCapError(
                "cup/cap chain has both legs on the same diagram boundary");
        if (!is_boundary(c.a) && !is_boundary(c.b) && c.a.box == c.b.box)
            throw RewriteError("cup/cap chain connects a box to itself");
        if (a_prod && b_prod) {
            const bool a_earlier = order_key(c.a) < order_key(c.b);
            const PortRef& earlier = a_earlier ? c.a : c.b;
            const PortRef& later = a_earlier ? c.b : c.a;
            const std::size_t id = new_wire(port_type(earlier));
            attach_producer(earlier, id);
            plans[later.box].out_to_dom[later.slot] = id;
        } else if (!a_prod && !b_prod) {
            const bool a_earlier = order_key(c.a) < order_key(c.b);
            const PortRef& earlier = a_earlier ? c.a : c.b;
            const PortRef& later = a_earlier ? c.b : c.a;
            const std::size_t id = new_wire(port_type(later));
            plans[earlier.box].in_to_cod[earlier.slot] = id;
            attach_consumer(later, id);
        } else {
            const PortRef& prod = a_prod ? c.a : c.b;
            const PortRef& cons = a_prod ? c.b : c.a;
            if (order_key(prod) >= order_key(cons))
                throw RewriteError(
                    "straightened wire would run against the layer order");
            const std::size_t id = new_wire(port_type(prod));
            attach_producer(prod, id);
            attach_consumer(cons, id);
        }
    }

    // --- rebuild the diagram box by box in the original order -----------
    std::vector<std::size_t> run;
    for (std::size_t i = 0; i < diagram.dom().size(); ++i)
        run.push_back(dom_boundary_wire.at(i));

    std::vector<Layer> out_layers;
    for (std::size_t li = 0; li < n; ++li) {
        if (connector(li)) continue;
        const BoxPlan& plan = plans[li];
        std::set<std::size_t> consumed;
        for (const auto& [slot, id] : plan.in_kept) consumed.insert(id);
        for (const auto& [slot, id] : plan.out_to_dom) consumed.insert(id);

        std::size_t offset;
        std::vector<TypeFactor> dom_factors;
        if (consumed.empty()) {
            offset = run.size();
        } else {
            std::vector<std::size_t> pos;
            for (std::size_t i = 0; i < run.size(); ++i)
                if (consumed.count(run[i])) pos.push_back(i);
            if (pos.size() != consumed.size())
                throw RewriteError("box input wire is not available yet");
            if (pos.back() - pos.front() + 1 != pos.size())
                throw RewriteError(
                    "box inputs are not adjacent after rewriting");
            offset = pos.front();
            for (const std::size_t i : pos)
                dom_factors.push_back(final_types[run[i]]);
            run.erase(run.begin() + static_cast<std::ptrdiff_t>(pos.front()),
                      run.begin() +
                          static_cast<std::ptrdiff_t>(pos.back() + 1));
        }

        std::vector<TypeFactor> cod_factors;
        std::vector<std::size_t> produced;
        for (const auto& [slot, id] : plan.in_to_cod) {
            cod_factors.push_back(final_types[id]);
            produced.push_back(id);
        }
        for (const auto& [slot, id] : plan.out_kept) {
            cod_factors.push_back(final_types[id]);
            produced.push_back(id);
        }
        run.insert(run.begin() + static_cast<std::ptrdiff_t>(offset),
                   produced.begin(), produced.end());
        out_layers.push_back(
            {offset, Box{layers[li].box.name, PregroupType(dom_factors),
                         PregroupType(cod_factors)}});
    }

    if (run.size() != diagram.cod().size())
        throw RewriteError("rewrite changed the codomain width");
    for (std::size_t i = 0; i < run.size(); ++i)
        if (final_types[run[i]] != diagram.cod()[i])
            throw RewriteError("rewrite changed the codomain type");
    return Diagram(diagram.dom(), std::move(out_layers));
}

}  // namespace s2c
