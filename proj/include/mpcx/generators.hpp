#pragma once

#include <cstdint>

#include "mpcx/cycles.hpp"
#include "mpcx/graph.hpp"

namespace mpcx {

// Random r-regular simple graph via the configuration (pairing) model with
// whole-graph rejection of self-loops and multi-edges. Deterministic in
// (n, r, seed). Requires n*r even and 0 <= r < n.
Graph gen_random_regular(std::int64_t n, std::int64_t r, std::uint64_t seed,
                         int max_attempts = 10000);

// G(n, p): each unordered pair independently with probability p. The pair
// coin is keyed by (seed, i, j), so the sample is order-independent.
Graph gen_erdos_renyi(std::int64_t n, double p, std::uint64_t seed);

struct PlantedRing {
    Graph graph;
    NodeId v = 0;
    Cycle cycle;
};

// Random r-regular graph conditioned on a designated node v whose
// ceil(s/2)-hop ball contains exactly one cycle of length <= s: a cycle of
// length exactly s through v. Rejection sampling over gen_random_regular
// outputs, scanning every candidate v per attempt. Node features are set to
// unique labels 1..n. Feasibility depends strongly on (n, r, s): the
// acceptance probability vanishes when the ball covers most of the graph
// (see gen_planted_ring tests), so pick n comfortably larger than the ball.
PlantedRing gen_planted_ring(std::int64_t n, std::int64_t r, std::int64_t s,
                             std::uint64_t seed, int max_attempts = 10000);

// Small deterministic fixtures.
Graph gen_cycle_graph(std::int64_t n);
Graph gen_path_graph(std::int64_t n);
Graph gen_complete_graph(std::int64_t n);

} // namespace mpcx
