#include "mpcx/influence.hpp"

#include <algorithm>

namespace mpcx {

InfluenceModel::InfluenceModel(std::vector<std::int64_t> degrees) {
    denom_ = std::move(degrees);
    for (auto& d : denom_) d += 1;
}

InfluenceModel influence_matrix(const Graph& g) {
    std::vector<std::int64_t> degrees(static_cast<std::size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v)
        degrees[static_cast<std::size_t>(v)] = g.degree(v);
    return InfluenceModel(std::move(degrees));
}

double survival(const Graph& g, const InfluenceModel& infl, NodeId sender, NodeId receiver) {
    g.check_node(receiver);
    if (sender != receiver && !g.has_edge(sender, receiver))
        raise(ErrorCode::UnknownChannel,
              "no channel " + std::to_string(sender) + "->" + std::to_string(receiver));
    return infl.recv_prob(receiver);
}

std::vector<std::vector<double>> walk_probability(const Graph& g, std::int64_t L) {
    if (L < 0) raise(ErrorCode::InvalidParameters, "negative layer count");
    const std::size_t n = static_cast<std::size_t>(g.node_count());

    std::vector<std::vector<double>> step(n, std::vector<double>(n, 0.0));
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const double p = 1.0 / static_cast<double>(g.degree(v) + 1);
        step[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = p;
        for (NodeId w : g.neighbors(v)) step[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = p;
    }

    std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1.0;

    for (std::int64_t l = 0; l < L; ++l) {
        std::vector<std::vector<double>> next(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const double x = out[i][k];
                if (x == 0.0) continue;
                const auto& row = step[k];
                for (std::size_t j = 0; j < n; ++j) next[i][j] += x * row[j];
            }
        out = std::move(next);
    }
    return out;
}

} // namespace mpcx
