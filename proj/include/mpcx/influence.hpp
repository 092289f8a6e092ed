#pragma once

#include <cstdint>
#include <vector>

#include "mpcx/graph.hpp"

namespace mpcx {

// Per-directed-message survival probabilities. With unweighted graphs the
// receiver-side row of the normalized adjacency with self-loops is uniform,
// so all a->b channels of a receiver b share 1/(deg(b)+1); only the
// per-receiver denominator is stored. The self channel b->b always exists
// even when b is isolated (then it survives with probability 1).
class InfluenceModel {
public:
    InfluenceModel() = default;
    explicit InfluenceModel(std::vector<std::int64_t> degrees);

    std::int64_t size() const noexcept { return static_cast<std::int64_t>(denom_.size()); }

    double recv_prob(NodeId receiver) const {
        return 1.0 / static_cast<double>(denom_[static_cast<std::size_t>(receiver)]);
    }

    // deg(receiver)+1; exact integer for rational arithmetic.
    std::int64_t recv_denom(NodeId receiver) const {
        return denom_[static_cast<std::size_t>(receiver)];
    }

private:
    std::vector<std::int64_t> denom_;
};

InfluenceModel influence_matrix(const Graph& g);

// Survival of the channel sender->receiver; sender must be a neighbor of
// receiver or the receiver itself.
double survival(const Graph& g, const InfluenceModel& infl, NodeId sender, NodeId receiver);

// Dense L-step random walk probabilities: entry [v][u] is the probability
// that a walk from v, stepping uniformly over neighbors-plus-self of the
// current node, ends at u after L steps. L = 0 gives the identity.
std::vector<std::vector<double>> walk_probability(const Graph& g, std::int64_t L);

} // namespace mpcx
