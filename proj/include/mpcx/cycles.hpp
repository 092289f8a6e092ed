#pragma once

#include <vector>

#include "mpcx/graph.hpp"

namespace mpcx {

// A simple cycle in canonical form: starts at its smallest node id, and the
// second element is the smaller of that node's two cycle neighbors. This
// fixes rotation and reflection, so equal cycles compare equal.
struct Cycle {
    std::vector<NodeId> nodes;

    std::int64_t length() const noexcept { return static_cast<std::int64_t>(nodes.size()); }
    bool contains(NodeId v) const;

    // Hops between two cycle members along the shorter arc.
    std::int64_t arc_distance(NodeId a, NodeId b) const;

    // The node path along the shorter arc from a to b (inclusive). Ties
    // between the two arcs resolve to the one whose second node is smaller.
    std::vector<NodeId> shorter_arc(NodeId a, NodeId b) const;

    auto operator<=>(const Cycle&) const = default;
};

Cycle canonical_cycle(std::vector<NodeId> nodes);

// All simple cycles of length 3..max_len, each once, in canonical form,
// sorted lexicographically. Depth-bounded DFS rooted at each minimal node.
std::vector<Cycle> enumerate_cycles(const Graph& g, std::int64_t max_len);

// Per-node counts of simple cycles of each length 3..max_len through the
// node; result[v][k] is the count for length k+3.
std::vector<std::vector<std::int64_t>> cycle_counts_per_node(const Graph& g, std::int64_t max_len);

} // namespace mpcx
