#include "mpcx/exact.hpp"

#include <algorithm>
#include <unordered_map>

#include "mpcx/rng.hpp"

namespace mpcx {

namespace {

using Flags = std::vector<std::uint8_t>; // one per node

struct StateHash {
    std::size_t operator()(const std::vector<std::uint64_t>& s) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::uint64_t x : s) h = mix(h, x);
        return static_cast<std::size_t>(h);
    }
};

using Dist = std::unordered_map<std::vector<std::uint64_t>, Rational, StateHash>;

struct Channel {
    NodeId sender;
    std::uint32_t member_mask; // members the channel can matter for
};

} // namespace

ExactResult exact_success_prob(const MPGraph& mpg, const InfluenceModel& infl,
                               const std::vector<TaskInstance>& members, std::int64_t layers,
                               std::size_t cap) {
    if (layers < 0) raise(ErrorCode::InvalidParameters, "negative layer count");
    if (members.empty()) raise(ErrorCode::InvalidParameters, "no task instance given");
    if (members.size() > 32) raise(ErrorCode::InvalidParameters, "too many joint members");
    const std::size_t M = members.size();
    const std::int64_t n = mpg.graph.node_count();
    const std::size_t L = static_cast<std::size_t>(layers);
    for (const TaskInstance& inst : members) {
        if (inst.sources.empty()) raise(ErrorCode::InvalidParameters, "empty source set");
        for (NodeId s : inst.sources) mpg.graph.check_node(s);
        for (NodeId t : inst.targets) mpg.graph.check_node(t);
    }

    // Forward possibility and backward usefulness, per member per layer.
    std::vector<std::vector<Flags>> fwd(M), bwd(M);
    for (std::size_t i = 0; i < M; ++i) {
        fwd[i].assign(L + 1, Flags(static_cast<std::size_t>(n), 0));
        for (NodeId s : members[i].sources) fwd[i][0][static_cast<std::size_t>(s)] = 1;
        for (std::size_t l = 1; l <= L; ++l)
            for (NodeId a = 0; a < n; ++a) {
                if (!fwd[i][l - 1][static_cast<std::size_t>(a)]) continue;
                fwd[i][l][static_cast<std::size_t>(a)] = 1; // self channel
                for (NodeId b : mpg.graph.neighbors(a))
                    if (mpg.edge_active(a, b, static_cast<std::int64_t>(l)))
                        fwd[i][l][static_cast<std::size_t>(b)] = 1;
            }

        bwd[i].assign(L + 1, Flags(static_cast<std::size_t>(n), 0));
        for (NodeId t : members[i].targets) bwd[i][L][static_cast<std::size_t>(t)] = 1;
        for (std::size_t l = L; l-- > 0;)
            for (NodeId a = 0; a < n; ++a) {
                bool useful = bwd[i][l + 1][static_cast<std::size_t>(a)] != 0; // wait via self
                if (!useful)
                    for (NodeId b : mpg.graph.neighbors(a))
                        if (bwd[i][l + 1][static_cast<std::size_t>(b)] &&
                            mpg.edge_active(a, b, static_cast<std::int64_t>(l + 1))) {
                            useful = true;
                            break;
                        }
                bwd[i][l][static_cast<std::size_t>(a)] = useful ? 1 : 0;
            }
    }

    // Relevant channels, grouped by (layer, receiver).
    std::size_t total_channels = 0;
    std::vector<std::vector<std::vector<Channel>>> by_layer(L + 1);
    for (std::size_t l = 1; l <= L; ++l) {
        by_layer[l].assign(static_cast<std::size_t>(n), {});
        for (NodeId b = 0; b < n; ++b) {
            auto consider = [&](NodeId a) {
                if (a != b && !mpg.edge_active(a, b, static_cast<std::int64_t>(l))) return;
                std::uint32_t mask = 0;
                for (std::size_t i = 0; i < M; ++i)
                    if (fwd[i][l - 1][static_cast<std::size_t>(a)] &&
                        bwd[i][l][static_cast<std::size_t>(b)])
                        mask |= 1u << i;
                if (mask) {
                    by_layer[l][static_cast<std::size_t>(b)].push_back({a, mask});
                    ++total_channels;
                }
            };
            consider(b);
            for (NodeId a : mpg.graph.neighbors(b)) consider(a);
        }
    }
    if (total_channels > cap) throw EnumerationTooLargeError(total_channels, cap);
    // even under a raised cap, a single receiver may not fan out beyond the
    // branching the per-receiver enumeration can afford
    for (std::size_t l = 1; l <= L; ++l)
        for (NodeId b = 0; b < n; ++b)
            if (by_layer[l][static_cast<std::size_t>(b)].size() > 24)
                throw EnumerationTooLargeError(total_channels, cap);

    // Tracked nodes per member per layer: possible AND useful. State bits
    // index into these lists.
    std::vector<std::vector<std::vector<NodeId>>> tracked(M);
    std::vector<std::vector<std::vector<std::int32_t>>> pos(M);
    for (std::size_t i = 0; i < M; ++i) {
        tracked[i].resize(L + 1);
        pos[i].assign(L + 1, std::vector<std::int32_t>(static_cast<std::size_t>(n), -1));
        for (std::size_t l = 0; l <= L; ++l)
            for (NodeId v = 0; v < n; ++v)
                if (fwd[i][l][static_cast<std::size_t>(v)] && bwd[i][l][static_cast<std::size_t>(v)]) {
                    if (tracked[i][l].size() >= 64)
                        throw EnumerationTooLargeError(total_channels == 0 ? 65 : total_channels, cap);
                    pos[i][l][static_cast<std::size_t>(v)] =
                        static_cast<std::int32_t>(tracked[i][l].size());
                    tracked[i][l].push_back(v);
                }
    }

    std::vector<std::uint64_t> init(M, 0);
    for (std::size_t i = 0; i < M; ++i)
        for (NodeId s : members[i].sources) {
            const std::int32_t p = pos[i][0][static_cast<std::size_t>(s)];
            if (p >= 0) init[i] |= 1ULL << p;
        }

    Dist dist;
    dist.emplace(std::move(init), Rational(1));

    std::vector<NodeId> receivers;
    std::vector<Channel> live;
    for (std::size_t l = 1; l <= L; ++l) {
        Dist next_dist;
        for (const auto& [state, q] : dist) {
            // receivers with at least one live coin under this state
            receivers.clear();
            for (NodeId b = 0; b < n; ++b)
                if (!by_layer[l][static_cast<std::size_t>(b)].empty()) receivers.push_back(b);

            // per-receiver pattern distributions, then convolve receivers
            struct PatternDist {
                NodeId receiver;
                std::vector<std::pair<std::uint32_t, Rational>> patterns;
            };
            std::vector<PatternDist> pattern_dists;
            for (NodeId b : receivers) {
                live.clear();
                for (const Channel& c : by_layer[l][static_cast<std::size_t>(b)]) {
                    std::uint32_t live_mask = 0;
                    for (std::size_t i = 0; i < M; ++i) {
                        if (!(c.member_mask & (1u << i))) continue;
                        const std::int32_t p = pos[i][l - 1][static_cast<std::size_t>(c.sender)];
                        if (p >= 0 && (state[i] & (1ULL << p))) live_mask |= 1u << i;
                    }
                    if (live_mask) live.push_back({c.sender, live_mask});
                }
                if (live.empty()) continue;

                const std::int64_t denom = infl.recv_denom(b);
                const Rational p_hit(1, denom);
                const Rational p_miss(denom - 1, denom);
                std::unordered_map<std::uint32_t, Rational> acc;
                const std::size_t k = live.size();
                for (std::uint64_t assign = 0; assign < (1ULL << k); ++assign) {
                    std::uint32_t pattern = 0;
                    Rational prob(1);
                    for (std::size_t c = 0; c < k; ++c) {
                        if (assign & (1ULL << c)) {
                            pattern |= live[c].member_mask;
                            prob *= p_hit;
                        } else {
                            prob *= p_miss;
                        }
                    }
                    acc[pattern] += prob;
                }
                PatternDist pd;
                pd.receiver = b;
                pd.patterns.assign(acc.begin(), acc.end());
                std::sort(pd.patterns.begin(), pd.patterns.end(),
                          [](const auto& x, const auto& y) { return x.first < y.first; });
                pattern_dists.push_back(std::move(pd));
            }

            // depth-first product over receivers
            std::vector<std::uint64_t> out_state(M, 0);
            auto emit = [&](auto&& self, std::size_t idx, const Rational& prob) -> void {
                if (idx == pattern_dists.size()) {
                    next_dist[out_state] += q * prob;
                    return;
                }
                const auto& pd = pattern_dists[idx];
                for (const auto& [pattern, pprob] : pd.patterns) {
                    for (std::size_t i = 0; i < M; ++i)
                        if (pattern & (1u << i)) {
                            const std::int32_t p = pos[i][l][static_cast<std::size_t>(pd.receiver)];
                            out_state[i] |= 1ULL << p;
                        }
                    self(self, idx + 1, prob * pprob);
                    for (std::size_t i = 0; i < M; ++i)
                        if (pattern & (1u << i)) {
                            const std::int32_t p = pos[i][l][static_cast<std::size_t>(pd.receiver)];
                            out_state[i] &= ~(1ULL << p);
                        }
                }
            };
            emit(emit, 0, Rational(1));
        }
        dist = std::move(next_dist);
    }

    Rational success(0);
    for (const auto& [state, q] : dist) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < M; ++i) {
            const TaskInstance& inst = members[i];
            auto bit = [&](NodeId t) {
                const std::int32_t p = pos[i][L][static_cast<std::size_t>(t)];
                return p >= 0 && (state[i] & (1ULL << p));
            };
            if (inst.mode == ReachMode::All)
                ok = std::all_of(inst.targets.begin(), inst.targets.end(), bit);
            else
                ok = std::any_of(inst.targets.begin(), inst.targets.end(), bit);
        }
        if (ok) success += q;
    }
    return ExactResult{std::move(success), total_channels};
}

MpcValue mpc_from_rational(const Rational& p) {
    if (p == 0) return MpcValue::inf();
    return MpcValue::finite(-std::log(rational_to_double(p)));
}

double rational_to_double(const Rational& p) {
    return static_cast<double>(p);
}

} // namespace mpcx
