#pragma once

#include <json.hpp>

#include "groves/double_dimer.hpp"
#include "groves/network.hpp"

namespace groves {

// Stable key order everywhere: golden files and cross-command round-trips
// depend on byte-identical output.
using Json = nlohmann::ordered_json;

// {"vertices": int, "nodes": [int,...], "edges": [[u,v,"p/q"],...]}
Network network_from_json(const Json& j);
Json network_to_json(const Network& net);

// Network format plus "coloring": ["B","W",...] and "faces": [[v,...],...]
BipartiteNetwork bipartite_from_json(const Json& j);
Json bipartite_to_json(const BipartiteNetwork& g);

// {"n": int, "L": [["p/q",...],...]}
ResponseMatrix response_from_json(const Json& j);
Json response_to_json(const ResponseMatrix& L);

Json matrix_to_json(const Matrix<Rational>& m);

Json parse_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

}  // namespace groves
