#include "mpcx/sim.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

#include "mpcx/rng.hpp"

namespace mpcx {

namespace {

// Flattened adjacency with per-neighbor mask ids; built once per estimate,
// shared read-only by all worker threads.
struct SimGraph {
    std::int64_t n = 0;
    std::vector<std::int64_t> offsets; // n+1
    std::vector<NodeId> neighbors;
    std::vector<std::int32_t> mask_of; // per flattened neighbor, -1 = always active
    std::vector<std::vector<std::int64_t>> masks;
    std::vector<double> recv_prob;

    SimGraph(const MPGraph& mpg, const InfluenceModel& infl) {
        n = mpg.graph.node_count();
        offsets.assign(static_cast<std::size_t>(n) + 1, 0);
        std::map<std::pair<NodeId, NodeId>, std::int32_t> mask_ids;
        for (const auto& [edge, mask] : mpg.edge_masks) {
            mask_ids[edge] = static_cast<std::int32_t>(masks.size());
            masks.push_back(mask);
        }
        for (NodeId v = 0; v < n; ++v) {
            offsets[static_cast<std::size_t>(v) + 1] =
                offsets[static_cast<std::size_t>(v)] + mpg.graph.degree(v);
            for (NodeId w : mpg.graph.neighbors(v)) {
                neighbors.push_back(w);
                const auto it = mask_ids.find({std::min(v, w), std::max(v, w)});
                mask_of.push_back(it == mask_ids.end() ? -1 : it->second);
            }
        }
        recv_prob.resize(static_cast<std::size_t>(n));
        for (NodeId v = 0; v < n; ++v)
            recv_prob[static_cast<std::size_t>(v)] = infl.recv_prob(v);
    }

    bool mask_allows(std::int32_t mask_id, std::int64_t layer) const {
        if (mask_id < 0) return true;
        const auto& m = masks[static_cast<std::size_t>(mask_id)];
        return std::binary_search(m.begin(), m.end(), layer);
    }
};

// Scratch buffers reused across trials by one worker.
struct TrialState {
    std::vector<std::uint8_t> active, next;
    std::vector<NodeId> frontier, next_frontier;

    explicit TrialState(std::int64_t n)
        : active(static_cast<std::size_t>(n), 0), next(static_cast<std::size_t>(n), 0) {}

    void reset(const std::vector<NodeId>& sources) {
        std::fill(active.begin(), active.end(), 0);
        frontier.clear();
        for (NodeId s : sources)
            if (!active[static_cast<std::size_t>(s)]) {
                active[static_cast<std::size_t>(s)] = 1;
                frontier.push_back(s);
            }
        std::sort(frontier.begin(), frontier.end());
    }

    // One layer of the percolation: each channel out of an active sender
    // delivers with the receiver's survival probability. Receivers already
    // activated this layer skip the coin lookup; since coins are pure
    // functions of (seed, sender, receiver, layer), skipping cannot change
    // the outcome.
    void step(const SimGraph& sg, std::uint64_t trial_seed, std::int64_t layer) {
        std::fill(next.begin(), next.end(), 0);
        next_frontier.clear();
        for (NodeId a : frontier) {
            if (!next[static_cast<std::size_t>(a)] &&
                channel_coin(trial_seed, static_cast<std::uint64_t>(a),
                             static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(layer),
                             sg.recv_prob[static_cast<std::size_t>(a)])) {
                next[static_cast<std::size_t>(a)] = 1;
                next_frontier.push_back(a);
            }
            const std::int64_t begin = sg.offsets[static_cast<std::size_t>(a)];
            const std::int64_t end = sg.offsets[static_cast<std::size_t>(a) + 1];
            for (std::int64_t i = begin; i < end; ++i) {
                const NodeId b = sg.neighbors[static_cast<std::size_t>(i)];
                if (next[static_cast<std::size_t>(b)]) continue;
                if (!sg.mask_allows(sg.mask_of[static_cast<std::size_t>(i)], layer)) continue;
                if (channel_coin(trial_seed, static_cast<std::uint64_t>(a),
                                 static_cast<std::uint64_t>(b), static_cast<std::uint64_t>(layer),
                                 sg.recv_prob[static_cast<std::size_t>(b)])) {
                    next[static_cast<std::size_t>(b)] = 1;
                    next_frontier.push_back(b);
                }
            }
        }
        active.swap(next);
        frontier.swap(next_frontier);
    }

    void run(const SimGraph& sg, const std::vector<NodeId>& sources, std::int64_t layers,
             std::uint64_t trial_seed) {
        reset(sources);
        for (std::int64_t l = 1; l <= layers; ++l) step(sg, trial_seed, l);
    }

    bool holds(const TaskInstance& inst) const {
        if (inst.mode == ReachMode::All) {
            for (NodeId t : inst.targets)
                if (!active[static_cast<std::size_t>(t)]) return false;
            return true;
        }
        for (NodeId t : inst.targets)
            if (active[static_cast<std::size_t>(t)]) return true;
        return false;
    }

    std::vector<NodeId> active_sorted() const {
        std::vector<NodeId> out;
        for (std::size_t v = 0; v < active.size(); ++v)
            if (active[v]) out.push_back(static_cast<NodeId>(v));
        return out;
    }
};

void validate_members(const MPGraph& mpg, const std::vector<TaskInstance>& members,
                      std::int64_t layers) {
    if (layers < 0) raise(ErrorCode::InvalidParameters, "negative layer count");
    if (members.empty()) raise(ErrorCode::InvalidParameters, "no task instance given");
    for (const TaskInstance& inst : members) {
        if (inst.sources.empty()) raise(ErrorCode::InvalidParameters, "empty source set");
        for (NodeId s : inst.sources) mpg.graph.check_node(s);
        for (NodeId t : inst.targets) mpg.graph.check_node(t);
    }
}

} // namespace

bool predicate_holds(const TaskInstance& inst, const std::vector<NodeId>& final_set) {
    auto contains = [&](NodeId t) {
        return std::binary_search(final_set.begin(), final_set.end(), t);
    };
    if (inst.mode == ReachMode::All)
        return std::all_of(inst.targets.begin(), inst.targets.end(), contains);
    return std::any_of(inst.targets.begin(), inst.targets.end(), contains);
}

ReachTrace simulate_reach(const MPGraph& mpg, const InfluenceModel& infl,
                          const std::vector<NodeId>& sources, std::int64_t layers,
                          std::uint64_t trial_seed) {
    validate_members(mpg, {TaskInstance{sources, {}, ReachMode::All}}, layers);
    const SimGraph sg(mpg, infl);
    TrialState state(sg.n);
    state.reset(sources);

    ReachTrace trace;
    trace.active_sets.push_back(state.active_sorted());
    for (std::int64_t l = 1; l <= layers; ++l) {
        state.step(sg, trial_seed, l);
        trace.active_sets.push_back(state.active_sorted());
    }
    return trace;
}

int resolve_thread_count(int threads) {
    if (threads > 0) return threads;
    if (const char* env = std::getenv("MPC_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

McEstimate make_estimate(std::uint64_t trials, std::uint64_t successes) {
    McEstimate est;
    est.trials = trials;
    est.successes = successes;
    est.p_hat = trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
    est.mpc = successes == 0 ? MpcValue::inf() : MpcValue::from_probability(est.p_hat);

    const double z = 1.959963984540054; // 97.5% normal quantile
    const double n = static_cast<double>(trials);
    const double p = est.p_hat;
    const double denom = 1.0 + z * z / n;
    const double center = (p + z * z / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z * z / (4.0 * n * n)) / denom;
    est.ci_lo = std::max(0.0, center - half);
    est.ci_hi = std::min(1.0, center + half);
    return est;
}

McEstimate mc_success_prob(const MPGraph& mpg, const InfluenceModel& infl,
                           const std::vector<TaskInstance>& members, std::int64_t layers,
                           std::uint64_t trials, std::uint64_t base_seed, int threads) {
    validate_members(mpg, members, layers);
    if (trials < 1) raise(ErrorCode::InvalidParameters, "trials must be >= 1");
    const SimGraph sg(mpg, infl);

    const int workers = std::min<int>(resolve_thread_count(threads),
                                      static_cast<int>(std::min<std::uint64_t>(trials, 256)));
    std::vector<std::uint64_t> success_per_worker(static_cast<std::size_t>(std::max(workers, 1)), 0);

    auto run_range = [&](std::uint64_t begin, std::uint64_t end, std::uint64_t* out) {
        TrialState state(sg.n);
        std::uint64_t successes = 0;
        for (std::uint64_t t = begin; t < end; ++t) {
            const std::uint64_t trial_seed = trial_seed_for(base_seed, t);
            bool ok = true;
            for (const TaskInstance& inst : members) {
                state.run(sg, inst.sources, layers, trial_seed);
                if (!state.holds(inst)) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++successes;
        }
        *out = successes;
    };

    if (workers <= 1) {
        run_range(0, trials, &success_per_worker[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk =
            (trials + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
            const std::uint64_t end = std::min(trials, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run_range, begin, end,
                              &success_per_worker[static_cast<std::size_t>(w)]);
        }
        for (auto& th : pool) th.join();
    }

    std::uint64_t successes = 0;
    for (std::uint64_t s : success_per_worker) successes += s;
    return make_estimate(trials, successes);
}

McEstimate mc_success_prob(const MPGraph& mpg, const InfluenceModel& infl,
                           const TaskInstance& inst, std::int64_t layers, std::uint64_t trials,
                           std::uint64_t base_seed, int threads) {
    return mc_success_prob(mpg, infl, std::vector<TaskInstance>{inst}, layers, trials, base_seed,
                           threads);
}

} // namespace mpcx
