#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mpcx/graph.hpp"
#include "mpcx/hash128.hpp"
#include "mpcx/sim_types.hpp"

namespace mpcx {

// Color refinement transcript: colors[l][v] is the 128-bit color of node v
// after l rounds. Layer 0 hashes the node's feature vector; layer l hashes
// (own previous color, sorted multiset of neighbor previous colors).
struct WlColoring {
    std::vector<std::vector<Hash128>> colors;

    std::int64_t layers() const noexcept { return static_cast<std::int64_t>(colors.size()) - 1; }
    const std::vector<Hash128>& final_colors() const { return colors.back(); }
};

WlColoring wl_refine(const Graph& g, std::int64_t layers);

// Refine until the induced node partition stops changing (at most n rounds);
// used as a parameter-free identity hash for whole graphs.
WlColoring wl_refine_stable(const Graph& g);

// Hash of the sorted multiset of final-layer colors; invariant under node
// relabeling.
Hash128 graph_hash(const WlColoring& coloring);
Hash128 graph_wl_hash(const Graph& g, std::int64_t layers);
Hash128 graph_identity_hash(const Graph& g);

struct Dataset {
    std::vector<Graph> graphs;
    std::vector<std::optional<std::vector<std::int64_t>>> targets; // per graph: one value per node

    void add(Graph g);
    void add(Graph g, std::vector<std::int64_t> node_targets);
    std::size_t size() const noexcept { return graphs.size(); }
};

// Fraction of graphs whose final-layer graph hash is unique within the
// dataset. Isomorphic duplicates are approximated by removing byte-identical
// graphs (after canonical serialization) before counting.
double uniqueness_fraction(const Dataset& ds, std::int64_t layers);

// Per (graph, node): 0 when the final WL color determines the node target
// within the dataset, infinite when some other (graph, node) pair shares the
// color but not the target.
std::vector<std::vector<MpcValue>> wlc(const Dataset& ds, std::int64_t layers);

} // namespace mpcx
