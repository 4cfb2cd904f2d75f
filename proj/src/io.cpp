#include "geotrans/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "geotrans/errors.hpp"

namespace geotrans {

namespace {

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw InvalidInput(std::string("missing or non-integer field \"") + key + "\"");
    return j[key].get<int>();
}

}  // namespace

json graph_to_json(const Graph& g) {
    json j;
    j["schema"] = 1;
    j["n"] = g.n();
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object()) throw InvalidInput("graph document must be a JSON object");
    int n = require_int(j, "n");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw InvalidInput("missing or non-array field \"edges\"");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw InvalidInput("each edge must be a two-integer array");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(n, edges);
}

json group_to_json(const PermGroup& g) {
    json j;
    j["schema"] = 1;
    j["degree"] = g.degree();
    json gens = json::array();
    for (const auto& p : g.generators()) gens.push_back(p.images());
    j["generators"] = std::move(gens);
    return j;
}

std::vector<Permutation> generators_from_json(const json& j) {
    if (!j.is_object()) throw InvalidInput("group document must be a JSON object");
    int degree = require_int(j, "degree");
    if (degree < 0) throw InvalidInput("group degree must be nonnegative");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw InvalidInput("missing or non-array field \"generators\"");
    std::vector<Permutation> gens;
    for (const auto& images : j["generators"]) {
        if (!images.is_array())
            throw InvalidInput("each generator must be an array of images");
        std::vector<int> img;
        for (const auto& x : images) {
            if (!x.is_number_integer()) throw InvalidInput("generator images must be integers");
            img.push_back(x.get<int>());
        }
        if (static_cast<int>(img.size()) != degree)
            throw InvalidInput("generator length disagrees with the declared degree");
        gens.emplace_back(std::move(img));  // validates bijectivity
    }
    return gens;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw InvalidInput("malformed JSON in " + path);
    return j;
}

void write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << j.dump(2) << '\n';
}

Graph read_graph_file(const std::string& path) { return graph_from_json(read_json_file(path)); }

std::vector<Permutation> read_generators_file(const std::string& path) {
    return generators_from_json(read_json_file(path));
}

Graph read_graph_asset(const std::string& path) {
    json j = read_json_file(path);
    Graph g = graph_from_json(j);
    if (!j.contains("checks") || !j["checks"].is_object())
        throw AssetCorrupt(path + ": missing checks block");
    const json& c = j["checks"];
    auto expect = [&](const char* key, int actual) {
        int want = require_int(c, key);
        if (want != actual)
            throw AssetCorrupt(path + ": " + key + " is " + std::to_string(actual) +
                               ", expected " + std::to_string(want));
    };
    expect("n", g.n());
    expect("valency", g.regular_valency().value_or(-1));
    expect("girth", girth(g));
    expect("diameter", diameter(g));
    return g;
}

Caps caps_from_string(const std::string& text) {
    Caps caps;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw InvalidInput("caps entry needs key=value: " + item);
        std::string key = item.substr(0, eq);
        long long value = 0;
        try {
            std::size_t used = 0;
            value = std::stoll(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw InvalidInput("caps value must be an integer: " + item);
        }
        if (value <= 0) throw InvalidInput("caps must be positive: " + item);
        if (key == "element_enumeration_cap")
            caps.element_enumeration_cap = value;
        else if (key == "aut_vertex_cap")
            caps.aut_vertex_cap = value;
        else if (key == "tuple_int_cap")
            caps.tuple_int_cap = value;
        else
            throw InvalidInput("unknown caps key: " + key);
    }
    return caps;
}

Caps caps_from_env() {
    const char* text = std::getenv("GEOTRANS_CAPS");
    if (text == nullptr) return Caps{};
    return caps_from_string(text);
}

}  // namespace geotrans
