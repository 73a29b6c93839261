#include "s2c/diagram_json.hpp"

#include <utility>
#include <vector>

#include "s2c/error.hpp"

namespace s2c {

namespace {

json type_to_json(const PregroupType& t) {
    json out = json::array();
    for (const TypeFactor& f : t.factors())
        out.push_back(json::array({f.base, f.z}));
    return out;
}

PregroupType type_from_json(const json& j, const std::string& path) {
    if (!j.is_array())
        throw FormatError(path + ": expected array of [base, winding] pairs");
    std::vector<TypeFactor> factors;
    factors.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& f = j[i];
        if (!f.is_array() || f.size() != 2 || !f[0].is_string() ||
            !f[1].is_number_integer())
            throw FormatError(path + "/" + std::to_string(i) +
                              ": expected [base, winding]");
        factors.push_back({f[0].get<std::string>(), f[1].get<int>()});
    }
    return PregroupType(std::move(factors));
}

}  // namespace

json diagram_to_json(const Diagram& diagram) {
    json layers = json::array();
    for (const Layer& l : diagram.layers()) {
        json jl;
        jl["offset"] = l.offset;
        jl["name"] = l.box.name;
        jl["dom"] = type_to_json(l.box.dom);
        jl["cod"] = type_to_json(l.box.cod);
        layers.push_back(std::move(jl));
    }
    json out;
    out["dom"] = type_to_json(diagram.dom());
    out["cod"] = type_to_json(diagram.cod());
    out["layers"] = std::move(layers);
    return out;
}

std::string serialize_diagram(const Diagram& diagram) {
    return dump_json(diagram_to_json(diagram));
}

Diagram diagram_from_json(const json& j, const std::string& path_prefix) {
    const std::string& root = path_prefix;
    if (!j.is_object())
        throw FormatError((root.empty() ? std::string("/") : root) +
                          ": expected object");
    auto need = [&](const char* key) -> const json& {
        if (!j.contains(key))
            throw FormatError(root + "/" + key + ": missing");
        return j.at(key);
    };

    PregroupType dom = type_from_json(need("dom"), root + "/dom");
    const PregroupType declared_cod =
        type_from_json(need("cod"), root + "/cod");

    const json& jlayers = need("layers");
    if (!jlayers.is_array())
        throw FormatError(root + "/layers: expected array");
    std::vector<Layer> layers;
    layers.reserve(jlayers.size());
    for (std::size_t i = 0; i < jlayers.size(); ++i) {
        const json& jl = jlayers[i];
        const std::string lpath = root + "/layers/" + std::to_string(i);
        if (!jl.is_object())
            throw FormatError(lpath + ": expected object");
        if (!jl.contains("offset") || !jl["offset"].is_number_integer())
            throw FormatError(lpath + "/offset: expected integer");
        if (jl["offset"].get<long long>() < 0)
            throw FormatError(lpath + "/offset: negative offset");
        if (!jl.contains("name") || !jl["name"].is_string())
            throw FormatError(lpath + "/name: expected string");
        if (!jl.contains("dom"))
            throw FormatError(lpath + "/dom: missing");
        if (!jl.contains("cod"))
            throw FormatError(lpath + "/cod: missing");
        Box box{jl["name"].get<std::string>(),
                type_from_json(jl["dom"], lpath + "/dom"),
                type_from_json(jl["cod"], lpath + "/cod")};
        layers.push_back(
            {static_cast<std::size_t>(jl["offset"].get<long long>()),
             std::move(box)});
    }

    try {
        Diagram out(std::move(dom), std::move(layers));
        if (out.cod() != declared_cod)
            throw FormatError(root + "/cod: declared codomain " +
                              declared_cod.str() +
                              " does not match computed " + out.cod().str());
        return out;
    } catch (const CompositionError& e) {
        throw FormatError(root + "/layers: " + e.what());
    }
}

Diagram deserialize_diagram(const std::string& text) {
    return diagram_from_json(parse_json_text(text, "diagram"));
}

}  // namespace s2c
