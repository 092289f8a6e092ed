#include "mpcx/graph_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

namespace mpcx {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
    raise(ErrorCode::ParseError, path + ": " + what);
}

std::int64_t require_int(const json& j, const std::string& path, const std::string& field) {
    if (!j.is_number_integer()) parse_fail(path, field + ": integer expected");
    return j.get<std::int64_t>();
}

Role role_from_string(const std::string& name, const std::string& path) {
    for (Role r : {Role::Original, Role::Virtual, Role::EdgeCell, Role::RingCell, Role::Fragment,
                   Role::Readout})
        if (name == role_name(r)) return r;
    parse_fail(path, "roles: unknown role '" + name + "'");
}

} // namespace

LoadedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::IoError, "cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        parse_fail(path, e.what());
    }
    if (!doc.is_object()) parse_fail(path, "top-level object expected");

    static const std::set<std::string> known = {"n",     "edges",           "features",
                                                "roles", "edge_layer_mask", "targets"};
    for (const auto& [key, value] : doc.items())
        if (!known.count(key)) parse_fail(path, "unknown field '" + key + "'");
    for (const char* field : {"n", "edges", "features"})
        if (!doc.contains(field)) parse_fail(path, std::string("missing field '") + field + "'");

    const std::int64_t n = require_int(doc["n"], path, "n");
    if (n < 0) parse_fail(path, "n: must be non-negative");

    LoadedGraph out;
    out.graph = Graph(n);

    if (!doc["edges"].is_array()) parse_fail(path, "edges: array expected");
    std::size_t idx = 0;
    for (const auto& e : doc["edges"]) {
        const std::string where = "edges[" + std::to_string(idx++) + "]";
        if (!e.is_array() || e.size() != 2) parse_fail(path, where + ": [a, b] expected");
        const std::int64_t a = require_int(e[0], path, where);
        const std::int64_t b = require_int(e[1], path, where);
        if (a < 0 || b < 0 || a >= n || b >= n)
            parse_fail(path, where + ": endpoint out of range (n=" + std::to_string(n) + ")");
        if (a == b) parse_fail(path, where + ": self edge");
        if (a > b) parse_fail(path, where + ": endpoints must satisfy a < b");
        if (out.graph.has_edge(a, b)) parse_fail(path, where + ": duplicate edge");
        out.graph.add_edge(a, b);
    }

    if (!doc["features"].is_array() || static_cast<std::int64_t>(doc["features"].size()) != n)
        parse_fail(path, "features: " + std::to_string(n) + " integer arrays expected");
    for (NodeId v = 0; v < n; ++v) {
        const auto& f = doc["features"][static_cast<std::size_t>(v)];
        const std::string where = "features[" + std::to_string(v) + "]";
        if (!f.is_array()) parse_fail(path, where + ": integer array expected");
        Feature feat;
        for (const auto& x : f) feat.push_back(require_int(x, path, where));
        out.graph.set_feature(v, std::move(feat));
    }

    if (doc.contains("roles")) {
        const auto& roles = doc["roles"];
        if (!roles.is_array() || static_cast<std::int64_t>(roles.size()) != n)
            parse_fail(path, "roles: one role string per node expected");
        std::vector<Role> parsed;
        for (const auto& r : roles) {
            if (!r.is_string()) parse_fail(path, "roles: string expected");
            parsed.push_back(role_from_string(r.get<std::string>(), path));
        }
        out.roles = std::move(parsed);
    }

    if (doc.contains("edge_layer_mask")) {
        const auto& masks = doc["edge_layer_mask"];
        if (!masks.is_array()) parse_fail(path, "edge_layer_mask: array expected");
        idx = 0;
        for (const auto& m : masks) {
            const std::string where = "edge_layer_mask[" + std::to_string(idx++) + "]";
            if (!m.is_array() || m.size() != 3 || !m[2].is_array())
                parse_fail(path, where + ": [a, b, [layers...]] expected");
            const std::int64_t a = require_int(m[0], path, where);
            const std::int64_t b = require_int(m[1], path, where);
            if (a < 0 || b < 0 || a >= n || b >= n || a >= b || !out.graph.has_edge(a, b))
                parse_fail(path, where + ": not an edge of the graph");
            std::vector<std::int64_t> layers;
            for (const auto& l : m[2]) layers.push_back(require_int(l, path, where));
            std::sort(layers.begin(), layers.end());
            out.edge_masks[{a, b}] = std::move(layers);
        }
    }

    if (doc.contains("targets")) {
        const auto& targets = doc["targets"];
        if (!targets.is_array() || static_cast<std::int64_t>(targets.size()) != n)
            parse_fail(path, "targets: one integer per node expected");
        std::vector<std::int64_t> parsed;
        for (const auto& t : targets) parsed.push_back(require_int(t, path, "targets"));
        out.targets = std::move(parsed);
    }
    return out;
}

Graph load_graph(const std::string& path) {
    return load_graph_file(path).graph;
}

namespace {

json graph_to_json(const Graph& g) {
    json doc;
    doc["n"] = g.node_count();
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(json::array({a, b}));
    doc["edges"] = std::move(edges);
    json features = json::array();
    for (NodeId v = 0; v < g.node_count(); ++v) features.push_back(g.feature(v));
    doc["features"] = std::move(features);
    return doc;
}

void write_file(const json& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) raise(ErrorCode::IoError, "cannot write " + path);
    out << doc.dump(2) << "\n";
    if (!out) raise(ErrorCode::IoError, "write failed for " + path);
}

} // namespace

void save_graph(const Graph& g, const std::string& path) {
    write_file(graph_to_json(g), path);
}

void save_mpgraph(const MPGraph& mpg, const std::string& path) {
    json doc = graph_to_json(mpg.graph);
    json roles = json::array();
    for (Role r : mpg.roles) roles.push_back(role_name(r));
    doc["roles"] = std::move(roles);
    if (!mpg.edge_masks.empty()) {
        json masks = json::array();
        for (const auto& [edge, layers] : mpg.edge_masks)
            masks.push_back(json::array({edge.first, edge.second, layers}));
        doc["edge_layer_mask"] = std::move(masks);
    }
    write_file(doc, path);
}

Dataset load_dataset(const std::string& path) {
    namespace fs = std::filesystem;
    std::vector<std::string> files;
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.path().extension() == ".json") files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());
    } else {
        files.push_back(path);
    }
    if (files.empty()) raise(ErrorCode::EmptyDataset, "no .json graphs under " + path);

    Dataset ds;
    for (const std::string& file : files) {
        LoadedGraph loaded = load_graph_file(file);
        if (loaded.targets)
            ds.add(std::move(loaded.graph), std::move(*loaded.targets));
        else
            ds.add(std::move(loaded.graph));
    }
    return ds;
}

} // namespace mpcx
