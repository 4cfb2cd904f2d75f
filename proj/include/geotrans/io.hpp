#ifndef GEOTRANS_IO_HPP
#define GEOTRANS_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "geotrans/graph.hpp"
#include "geotrans/perm_group.hpp"

namespace geotrans {

// ordered_json keeps insertion order, so serialized reports are byte-stable
// across runs
using json = nlohmann::ordered_json;

// {"schema": 1, "n": ..., "edges": [[u, v], ...]} with u < v, sorted
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// {"schema": 1, "degree": ..., "generators": [[images], ...]}
json group_to_json(const PermGroup& g);
std::vector<Permutation> generators_from_json(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const json& j, const std::string& path);

Graph read_graph_file(const std::string& path);
std::vector<Permutation> read_generators_file(const std::string& path);

// Bundled graph assets carry a "checks" object (n, valency, girth, diameter).
// The loaded graph is re-measured against it; any mismatch throws
// AssetCorrupt. A regular graph reports its valency, -1 stands in for
// "irregular"; girth and diameter use -1 for acyclic and disconnected.
Graph read_graph_asset(const std::string& path);

// "element_enumeration_cap=N,aut_vertex_cap=N,tuple_int_cap=N", any subset,
// unknown keys rejected
Caps caps_from_string(const std::string& text);
// reads GEOTRANS_CAPS; absent or empty means defaults
Caps caps_from_env();

}  // namespace geotrans

#endif
