#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "mpcx/error.hpp"

namespace mpcx {

using NodeId = std::int64_t;
using Feature = std::vector<std::int64_t>;

// Undirected simple graph with an integer feature vector per node.
// Node ids are 0..node_count-1; no self-edges, no duplicate edges.
// Immutable in spirit: build it, then share freely across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::int64_t node_count);

    std::int64_t node_count() const noexcept { return static_cast<std::int64_t>(adj_.size()); }
    std::int64_t edge_count() const noexcept { return edge_count_; }

    void add_edge(NodeId a, NodeId b);
    bool has_edge(NodeId a, NodeId b) const;

    std::int64_t degree(NodeId v) const {
        check_node(v);
        return static_cast<std::int64_t>(adj_[static_cast<std::size_t>(v)].size());
    }

    const std::vector<NodeId>& neighbors(NodeId v) const {
        check_node(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    // Sorted list of (a, b) pairs with a < b.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    const Feature& feature(NodeId v) const {
        check_node(v);
        return features_[static_cast<std::size_t>(v)];
    }
    void set_feature(NodeId v, Feature f) {
        check_node(v);
        features_[static_cast<std::size_t>(v)] = std::move(f);
    }
    const std::vector<Feature>& features() const noexcept { return features_; }

    // Relabel nodes: node v of this graph becomes perm[v] in the result.
    Graph permuted(const std::vector<NodeId>& perm) const;

    bool operator==(const Graph& other) const;

    void check_node(NodeId v) const {
        if (v < 0 || v >= node_count())
            raise(ErrorCode::NodeOutOfRange,
                  "node " + std::to_string(v) + " out of range (n=" +
                      std::to_string(node_count()) + ")");
    }

private:
    std::vector<std::vector<NodeId>> adj_; // each list sorted ascending
    std::vector<Feature> features_;
    std::int64_t edge_count_ = 0;
};

// BFS hop distances from src; -1 marks unreachable nodes.
std::vector<std::int64_t> bfs_distances(const Graph& g, NodeId src);

// Hop distance, std::nullopt when u and v are disconnected.
std::optional<std::int64_t> shortest_path(const Graph& g, NodeId u, NodeId v);

} // namespace mpcx
