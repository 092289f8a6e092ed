#include "mpcx/graph.hpp"

#include <algorithm>
#include <deque>

namespace mpcx {

Graph::Graph(std::int64_t node_count) {
    if (node_count < 0) raise(ErrorCode::InvalidParameters, "negative node count");
    adj_.resize(static_cast<std::size_t>(node_count));
    features_.assign(static_cast<std::size_t>(node_count), Feature{0});
}

void Graph::add_edge(NodeId a, NodeId b) {
    check_node(a);
    check_node(b);
    if (a == b) raise(ErrorCode::InvalidParameters, "self edge (" + std::to_string(a) + ")");
    auto& la = adj_[static_cast<std::size_t>(a)];
    auto pos = std::lower_bound(la.begin(), la.end(), b);
    if (pos != la.end() && *pos == b)
        raise(ErrorCode::InvalidParameters,
              "duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    la.insert(pos, b);
    auto& lb = adj_[static_cast<std::size_t>(b)];
    lb.insert(std::lower_bound(lb.begin(), lb.end(), a), a);
    ++edge_count_;
}

bool Graph::has_edge(NodeId a, NodeId b) const {
    check_node(a);
    check_node(b);
    const auto& la = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(la.begin(), la.end(), b);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (NodeId a = 0; a < node_count(); ++a)
        for (NodeId b : adj_[static_cast<std::size_t>(a)])
            if (a < b) out.emplace_back(a, b);
    return out;
}

Graph Graph::permuted(const std::vector<NodeId>& perm) const {
    if (static_cast<std::int64_t>(perm.size()) != node_count())
        raise(ErrorCode::InvalidParameters, "permutation size mismatch");
    Graph out(node_count());
    for (const auto& [a, b] : edges()) out.add_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    for (NodeId v = 0; v < node_count(); ++v)
        out.set_feature(perm[static_cast<std::size_t>(v)], feature(v));
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return adj_ == other.adj_ && features_ == other.features_;
}

std::vector<std::int64_t> bfs_distances(const Graph& g, NodeId src) {
    g.check_node(src);
    std::vector<std::int64_t> dist(static_cast<std::size_t>(g.node_count()), -1);
    std::deque<NodeId> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!queue.empty()) {
        const NodeId v = queue.front();
        queue.pop_front();
        for (NodeId w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

std::optional<std::int64_t> shortest_path(const Graph& g, NodeId u, NodeId v) {
    g.check_node(u);
    g.check_node(v);
    if (u == v) return 0;
    const auto dist = bfs_distances(g, u);
    const std::int64_t d = dist[static_cast<std::size_t>(v)];
    if (d < 0) return std::nullopt;
    return d;
}

} // namespace mpcx
