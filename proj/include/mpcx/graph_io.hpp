#pragma once

#include <optional>
#include <string>

#include "mpcx/transform.hpp"
#include "mpcx/wl.hpp"

namespace mpcx {

// JSON graph file: object with fields
//   "n"        node count
//   "edges"    array of [a, b] with a < b
//   "features" array of integer arrays, one per node
// plus, optionally,
//   "roles"           per-node role strings (message passing graph export)
//   "edge_layer_mask" array of [a, b, [layers...]] for layer-gated edges
//   "targets"         per-node integer targets for WLC checks
// Unknown fields are rejected.
struct LoadedGraph {
    Graph graph;
    std::optional<std::vector<Role>> roles;
    std::map<std::pair<NodeId, NodeId>, std::vector<std::int64_t>> edge_masks;
    std::optional<std::vector<std::int64_t>> targets;
};

LoadedGraph load_graph_file(const std::string& path);
Graph load_graph(const std::string& path); // plain graph, extras ignored

void save_graph(const Graph& g, const std::string& path);
void save_mpgraph(const MPGraph& mpg, const std::string& path);

// Every *.json file of a directory (sorted by name), or the single file.
Dataset load_dataset(const std::string& path);

} // namespace mpcx
