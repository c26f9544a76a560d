#include "groves/json_io.hpp"

#include <fstream>
#include <sstream>

#include "groves/errors.hpp"

namespace groves {

namespace {

Rational rational_field(const Json& j, const char* what) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return rational_from_string(j.get<std::string>());
    throw ParseError(std::string("expected a fraction string for ") + what);
}

int int_field(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("missing integer field \"") + key + "\"");
    return j[key].get<int>();
}

}  // namespace

Network network_from_json(const Json& j) {
    Network net;
    net.vertex_count = int_field(j, "vertices");
    if (!j.contains("nodes") || !j["nodes"].is_array()) throw ParseError("missing \"nodes\" array");
    for (const auto& v : j["nodes"]) {
        if (!v.is_number_integer()) throw ParseError("node ids must be integers");
        net.nodes.push_back(v.get<int>());
    }
    if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("missing \"edges\" array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3) throw ParseError("edges must be [u, v, \"p/q\"] triples");
        if (!e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("edge endpoints must be integers");
        net.edges.push_back({e[0].get<int>(), e[1].get<int>(), rational_field(e[2], "conductance")});
    }
    try {
        net.validate();
    } catch (const ShapeError& err) {
        throw ParseError(std::string("invalid network: ") + err.what());
    }
    return net;
}

Json network_to_json(const Network& net) {
    Json j;
    j["vertices"] = net.vertex_count;
    j["nodes"] = net.nodes;
    Json edges = Json::array();
    for (const auto& e : net.edges) edges.push_back({e.u, e.v, to_string(e.conductance)});
    j["edges"] = edges;
    return j;
}

BipartiteNetwork bipartite_from_json(const Json& j) {
    BipartiteNetwork g;
    g.vertex_count = int_field(j, "vertices");
    if (!j.contains("coloring") || !j["coloring"].is_array())
        throw ParseError("missing \"coloring\" array");
    for (const auto& c : j["coloring"]) {
        const std::string s = c.get<std::string>();
        if (s != "B" && s != "W") throw ParseError("coloring entries must be \"B\" or \"W\"");
        g.color.push_back(s[0]);
    }
    if (!j.contains("nodes") || !j["nodes"].is_array()) throw ParseError("missing \"nodes\" array");
    for (const auto& v : j["nodes"]) g.nodes.push_back(v.get<int>());
    if (!j.contains("edges") || !j["edges"].is_array()) throw ParseError("missing \"edges\" array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3) throw ParseError("edges must be [u, v, \"p/q\"] triples");
        g.edges.push_back({e[0].get<int>(), e[1].get<int>(), rational_field(e[2], "weight")});
    }
    if (!j.contains("faces") || !j["faces"].is_array()) throw ParseError("missing \"faces\" array");
    for (const auto& f : j["faces"]) {
        std::vector<int> face;
        for (const auto& v : f) face.push_back(v.get<int>());
        g.faces.push_back(std::move(face));
    }
    try {
        g.validate();
    } catch (const ShapeError& err) {
        throw ParseError(std::string("invalid bipartite network: ") + err.what());
    }
    return g;
}

Json bipartite_to_json(const BipartiteNetwork& g) {
    Json j;
    j["vertices"] = g.vertex_count;
    Json coloring = Json::array();
    for (char c : g.color) coloring.push_back(std::string(1, c));
    j["coloring"] = coloring;
    j["nodes"] = g.nodes;
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back({e.u, e.v, to_string(e.weight)});
    j["edges"] = edges;
    j["faces"] = g.faces;
    return j;
}

ResponseMatrix response_from_json(const Json& j) {
    const int n = int_field(j, "n");
    if (n < 1) throw ParseError("\"n\" must be positive");
    if (!j.contains("L") || !j["L"].is_array() || j["L"].size() != static_cast<std::size_t>(n))
        throw ParseError("\"L\" must be an n x n array");
    ResponseMatrix out{Matrix<Rational>(static_cast<std::size_t>(n), static_cast<std::size_t>(n))};
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        const auto& row = j["L"][i];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw ParseError("\"L\" must be an n x n array");
        for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k)
            out.m(i, k) = rational_field(row[k], "response entry");
    }
    try {
        out.validate();
    } catch (const InvariantError& err) {
        throw ParseError(std::string("invalid response matrix: ") + err.what());
    }
    return out;
}

Json matrix_to_json(const Matrix<Rational>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json response_to_json(const ResponseMatrix& L) {
    Json j;
    j["n"] = L.n();
    j["L"] = matrix_to_json(L.m);
    return j;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

}  // namespace groves
