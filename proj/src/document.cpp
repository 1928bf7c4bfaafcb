#include "spinpst/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace spinpst {

namespace {

using nlohmann::json;

json require_field(const json& doc, const char* name) {
    if (!doc.contains(name)) throw DocumentError(std::string("missing required field '") + name + "'");
    return doc.at(name);
}

}  // namespace

SpinNetwork parse_network_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("document is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw DocumentError("document root must be an object");

    const json vertices = require_field(doc, "vertices");
    if (!vertices.is_number_integer() || vertices.get<long long>() < 1)
        throw DocumentError("field 'vertices' must be a positive integer");
    const int n = vertices.get<int>();

    const json edge_list = require_field(doc, "edges");
    if (!edge_list.is_array()) throw DocumentError("field 'edges' must be a list of [i, j, J] triples");
    std::vector<Edge> edges;
    edges.reserve(edge_list.size());
    for (const json& item : edge_list) {
        if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() || !item[1].is_number_integer() ||
            !item[2].is_number())
            throw DocumentError("field 'edges' must contain [i, j, J] triples of two integers and a real");
        edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
    }

    int reference = 1;
    if (doc.contains("reference")) {
        if (!doc["reference"].is_number_integer()) throw DocumentError("field 'reference' must be an integer");
        reference = doc["reference"].get<int>();
        if (reference < 1 || reference > n) throw DocumentError("field 'reference' out of range 1..vertices");
    }
    double scale = 1.0;
    if (doc.contains("scale")) {
        if (!doc["scale"].is_number()) throw DocumentError("field 'scale' must be a real number");
        scale = doc["scale"].get<double>();
        if (!(scale > 0.0)) throw DocumentError("field 'scale' must be positive");
    }
    bool adjacency_mode = false;
    if (doc.contains("adjacency_mode")) {
        if (!doc["adjacency_mode"].is_boolean()) throw DocumentError("field 'adjacency_mode' must be a boolean");
        adjacency_mode = doc["adjacency_mode"].get<bool>();
    }

    try {
        return from_edge_list(n, edges, reference, scale, adjacency_mode);
    } catch (const InvalidEdgeError& e) {
        throw DocumentError(std::string("field 'edges': ") + e.what());
    } catch (const DisconnectedGraphError& e) {
        throw DocumentError(std::string("field 'edges': ") + e.what());
    }
}

SpinNetwork load_network_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open network document: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_network_document(buffer.str());
}

std::string write_network_document(const SpinNetwork& net) {
    json doc;
    doc["vertices"] = net.vertex_count();
    json edges = json::array();
    for (const Edge& e : net.edges()) edges.push_back(json::array({e.a, e.b, e.coupling}));
    doc["edges"] = std::move(edges);
    doc["reference"] = net.reference();
    doc["scale"] = net.scale();
    doc["adjacency_mode"] = net.adjacency_mode();
    return doc.dump(2) + "\n";
}

}  // namespace spinpst
