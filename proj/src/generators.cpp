#include "mpcx/generators.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "mpcx/rng.hpp"

namespace mpcx {

Graph gen_random_regular(std::int64_t n, std::int64_t r, std::uint64_t seed, int max_attempts) {
    if (n < 0 || r < 0) raise(ErrorCode::InvalidParameters, "n and r must be non-negative");
    if (r >= n && !(n == 0 && r == 0))
        raise(ErrorCode::InvalidParameters, "degree r must be smaller than n");
    if ((n * r) % 2 != 0)
        raise(ErrorCode::InvalidParameters, "n*r must be even (odd stub count)");

    SplitMix rng(seed);
    std::vector<NodeId> stubs(static_cast<std::size_t>(n * r));
    for (std::int64_t i = 0; i < n * r; ++i) stubs[static_cast<std::size_t>(i)] = i / std::max<std::int64_t>(r, 1);

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        rng.shuffle(stubs.data(), stubs.size());
        Graph g(n);
        bool ok = true;
        std::set<std::pair<NodeId, NodeId>> seen;
        for (std::size_t i = 0; ok && i + 1 < stubs.size(); i += 2) {
            NodeId a = stubs[i], b = stubs[i + 1];
            if (a == b) { ok = false; break; }
            if (a > b) std::swap(a, b);
            if (!seen.emplace(a, b).second) { ok = false; break; }
        }
        if (!ok) continue;
        for (const auto& [a, b] : seen) g.add_edge(a, b);
        return g;
    }
    raise(ErrorCode::GenerationExhausted,
          "no simple pairing found in " + std::to_string(max_attempts) + " attempts");
}

Graph gen_erdos_renyi(std::int64_t n, double p, std::uint64_t seed) {
    if (n < 0) raise(ErrorCode::InvalidParameters, "negative node count");
    if (!(p >= 0.0 && p <= 1.0))
        raise(ErrorCode::InvalidParameters, "edge probability must lie in [0,1]");
    Graph g(n);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) {
            const std::uint64_t h = mix(mix(seed, static_cast<std::uint64_t>(i)),
                                        static_cast<std::uint64_t>(j));
            if (to_unit(h) < p) g.add_edge(i, j);
        }
    return g;
}

namespace {

// Exactly one cycle of length <= s lies inside the ceil(s/2)-hop ball of v,
// and it is a length-s cycle through v.
bool ball_condition(const Graph& g, const std::vector<Cycle>& cycles, NodeId v,
                    std::int64_t s, const Cycle** planted) {
    const std::int64_t radius = (s + 1) / 2;
    const auto dist = bfs_distances(g, v);
    const Cycle* found = nullptr;
    for (const Cycle& c : cycles) {
        bool inside = true;
        for (NodeId w : c.nodes) {
            const std::int64_t d = dist[static_cast<std::size_t>(w)];
            if (d < 0 || d > radius) { inside = false; break; }
        }
        if (!inside) continue;
        if (found != nullptr) return false; // second cycle in the ball
        found = &c;
    }
    if (found == nullptr || found->length() != s || !found->contains(v)) return false;
    *planted = found;
    return true;
}

} // namespace

PlantedRing gen_planted_ring(std::int64_t n, std::int64_t r, std::int64_t s,
                             std::uint64_t seed, int max_attempts) {
    if (s < 3) raise(ErrorCode::InvalidParameters, "ring size must be >= 3");

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g = gen_random_regular(n, r, mix(seed, static_cast<std::uint64_t>(attempt)));
        const auto cycles = enumerate_cycles(g, s);
        if (cycles.empty()) continue;
        for (NodeId v = 0; v < n; ++v) {
            const Cycle* planted = nullptr;
            if (!ball_condition(g, cycles, v, s, &planted)) continue;
            for (NodeId w = 0; w < n; ++w) g.set_feature(w, Feature{w + 1});
            return PlantedRing{std::move(g), v, *planted};
        }
    }
    raise(ErrorCode::GenerationExhausted,
          "no planted ring instance found in " + std::to_string(max_attempts) + " attempts");
}

Graph gen_cycle_graph(std::int64_t n) {
    if (n < 3) raise(ErrorCode::InvalidParameters, "cycle graph needs n >= 3");
    Graph g(n);
    for (NodeId i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph gen_path_graph(std::int64_t n) {
    if (n < 1) raise(ErrorCode::InvalidParameters, "path graph needs n >= 1");
    Graph g(n);
    for (NodeId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph gen_complete_graph(std::int64_t n) {
    Graph g(n);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

} // namespace mpcx
