#include "mpcx/cycles.hpp"

#include <algorithm>

namespace mpcx {

bool Cycle::contains(NodeId v) const {
    return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
}

std::int64_t Cycle::arc_distance(NodeId a, NodeId b) const {
    const auto ia = std::find(nodes.begin(), nodes.end(), a);
    const auto ib = std::find(nodes.begin(), nodes.end(), b);
    if (ia == nodes.end() || ib == nodes.end())
        raise(ErrorCode::InvalidParameters, "node not on cycle");
    const std::int64_t s = length();
    std::int64_t d = (std::distance(nodes.begin(), ib) - std::distance(nodes.begin(), ia) + s) % s;
    return std::min(d, s - d);
}

std::vector<NodeId> Cycle::shorter_arc(NodeId a, NodeId b) const {
    const auto ia = std::find(nodes.begin(), nodes.end(), a);
    const auto ib = std::find(nodes.begin(), nodes.end(), b);
    if (ia == nodes.end() || ib == nodes.end())
        raise(ErrorCode::InvalidParameters, "node not on cycle");
    const std::int64_t s = length();
    const std::int64_t pa = std::distance(nodes.begin(), ia);
    const std::int64_t pb = std::distance(nodes.begin(), ib);
    const std::int64_t fwd = (pb - pa + s) % s;
    const std::int64_t bwd = s - fwd;

    auto walk = [&](std::int64_t step, std::int64_t len) {
        std::vector<NodeId> path;
        path.reserve(static_cast<std::size_t>(len) + 1);
        for (std::int64_t i = 0; i <= len; ++i)
            path.push_back(nodes[static_cast<std::size_t>(((pa + i * step) % s + s) % s)]);
        return path;
    };
    if (fwd < bwd) return walk(+1, fwd);
    if (bwd < fwd) return walk(-1, bwd);
    // tie: pick the arc with the smaller second node
    auto f = walk(+1, fwd);
    auto r = walk(-1, bwd);
    return (f.size() > 1 && r.size() > 1 && r[1] < f[1]) ? r : f;
}

Cycle canonical_cycle(std::vector<NodeId> nodes) {
    if (nodes.size() < 3) raise(ErrorCode::InvalidParameters, "cycle needs >= 3 nodes");
    const std::size_t n = nodes.size();
    const auto min_it = std::min_element(nodes.begin(), nodes.end());
    std::rotate(nodes.begin(), min_it, nodes.end());
    if (nodes[n - 1] < nodes[1]) std::reverse(nodes.begin() + 1, nodes.end());
    return Cycle{std::move(nodes)};
}

std::vector<Cycle> enumerate_cycles(const Graph& g, std::int64_t max_len) {
    if (max_len < 3) raise(ErrorCode::InvalidParameters, "max_len must be >= 3");
    std::vector<Cycle> out;
    const std::int64_t n = g.node_count();
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);
    std::vector<NodeId> path;

    // Rooted at each start node, extend only through larger node ids so each
    // cycle is discovered exactly once from its minimal node; the direction
    // constraint path[1] < last kills the mirror image.
    auto dfs = [&](auto&& self, NodeId start, NodeId v) -> void {
        for (NodeId w : g.neighbors(v)) {
            if (w == start && path.size() >= 3 && path[1] < path.back()) {
                out.push_back(canonical_cycle(path));
                continue;
            }
            if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
            if (static_cast<std::int64_t>(path.size()) >= max_len) continue;
            on_path[static_cast<std::size_t>(w)] = true;
            path.push_back(w);
            self(self, start, w);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = false;
        }
    };

    for (NodeId start = 0; start < n; ++start) {
        on_path[static_cast<std::size_t>(start)] = true;
        path.assign(1, start);
        dfs(dfs, start, start);
        on_path[static_cast<std::size_t>(start)] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::int64_t>> cycle_counts_per_node(const Graph& g, std::int64_t max_len) {
    std::vector<std::vector<std::int64_t>> counts(
        static_cast<std::size_t>(g.node_count()),
        std::vector<std::int64_t>(static_cast<std::size_t>(max_len - 2), 0));
    for (const Cycle& c : enumerate_cycles(g, max_len))
        for (NodeId v : c.nodes)
            ++counts[static_cast<std::size_t>(v)][static_cast<std::size_t>(c.length() - 3)];
    return counts;
}

} // namespace mpcx
