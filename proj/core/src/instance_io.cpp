#include "morseb/instance_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace morseb {

using ordered_json = nlohmann::ordered_json;

Instance instance_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("bad instance JSON: ") + e.what());
    }

    try {
        Instance out;
        out.name = j.value("name", std::string("unnamed"));
        const int dimension = j.at("dimension").get<int>();

        std::vector<VertexRecord> vertices;
        for (const auto& v : j.at("vertices")) {
            VertexRecord rec;
            rec.id = v.at("id").get<int>();
            if (v.contains("coords")) rec.coords = v.at("coords").get<std::vector<double>>();
            if (v.contains("f")) rec.f = v.at("f").get<double>();
            vertices.push_back(std::move(rec));
        }
        std::vector<Simplex> tops;
        for (const auto& t : j.at("top_simplices")) tops.push_back(t.get<Simplex>());

        out.complex = build_complex(std::move(tops), std::move(vertices));
        if (out.complex.n != dimension)
            throw ParseError("declared dimension " + std::to_string(dimension) +
                             " does not match the top simplices");

        const auto components = detect_boundary(out.complex);
        out.labels.assign(components.size(), BoundaryClass::APlus);
        std::vector<bool> seen(components.size(), false);
        if (j.contains("boundary_labels")) {
            for (const auto& l : j.at("boundary_labels")) {
                const int id = l.at("component").get<int>();
                if (id < 0 || id >= static_cast<int>(components.size()))
                    throw ParseError("boundary label for unknown component " + std::to_string(id));
                out.labels[id] = boundary_class_from_string(l.at("class").get<std::string>());
                seen[id] = true;
            }
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i])
                throw ParseError("boundary component " + std::to_string(i) + " carries no label");

        if (j.contains("critical_points")) {
            for (const auto& cp : j.at("critical_points"))
                out.critical_points.push_back(
                    {cp.at("vertex").get<int>(), cp.at("index").get<int>()});
        }
        if (j.contains("boundary_morse")) {
            BoundaryMorseData data;
            const std::string mode = j.at("boundary_morse").at("mode").get<std::string>();
            if (mode == "bott")
                data.mode = BoundaryMorseMode::Bott;
            else if (mode == "general")
                data.mode = BoundaryMorseMode::General;
            else
                throw ParseError("boundary_morse mode must be 'bott' or 'general'");
            if (j.at("boundary_morse").contains("inventory")) {
                for (const auto& e : j.at("boundary_morse").at("inventory")) {
                    BoundaryCriticalEntry entry;
                    entry.component = e.at("component").get<int>();
                    entry.k = e.at("k").get<int>();
                    entry.k_prime = e.at("k_prime").get<int>();
                    entry.count = e.at("count").get<long long>();
                    data.inventory.push_back(entry);
                }
            }
            out.boundary_morse = std::move(data);
        }
        return out;
    } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("bad instance JSON: ") + e.what());
    }
}

std::string instance_to_json(const Instance& instance) {
    ordered_json j;
    j["name"] = instance.name;
    j["dimension"] = instance.complex.n;
    j["vertices"] = ordered_json::array();
    for (const VertexRecord& v : instance.complex.vertices) {
        ordered_json rec;
        rec["id"] = v.id;
        if (!v.coords.empty()) rec["coords"] = v.coords;
        if (v.f) rec["f"] = *v.f;
        j["vertices"].push_back(rec);
    }
    j["top_simplices"] = instance.complex.top_simplices;
    j["boundary_labels"] = ordered_json::array();
    for (std::size_t i = 0; i < instance.labels.size(); ++i)
        j["boundary_labels"].push_back(
            ordered_json{{"component", i}, {"class", to_string(instance.labels[i])}});
    if (!instance.critical_points.empty()) {
        j["critical_points"] = ordered_json::array();
        for (const auto& [vertex, index] : instance.critical_points)
            j["critical_points"].push_back(ordered_json{{"vertex", vertex}, {"index", index}});
    }
    if (instance.boundary_morse) {
        ordered_json bm;
        bm["mode"] = instance.boundary_morse->mode == BoundaryMorseMode::Bott ? "bott" : "general";
        bm["inventory"] = ordered_json::array();
        for (const auto& e : instance.boundary_morse->inventory)
            bm["inventory"].push_back(ordered_json{{"component", e.component},
                                                   {"k", e.k},
                                                   {"k_prime", e.k_prime},
                                                   {"count", e.count}});
        j["boundary_morse"] = bm;
    }
    return j.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return instance_from_json(buffer.str());
}

void save_instance(const Instance& instance, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << instance_to_json(instance);
}

} // namespace morseb
