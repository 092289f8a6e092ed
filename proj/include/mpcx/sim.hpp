#pragma once

#include <cstdint>
#include <vector>

#include "mpcx/influence.hpp"
#include "mpcx/sim_types.hpp"
#include "mpcx/transform.hpp"

namespace mpcx {

// One lossy run: a source set plus the success condition on the final
// active set. A trial of a joint task evaluates several runs against the
// same per-trial coin table.
enum class ReachMode { All, Any };

struct TaskInstance {
    std::vector<NodeId> sources;
    std::vector<NodeId> targets;
    ReachMode mode = ReachMode::All;
};

struct ReachTrace {
    std::vector<std::vector<NodeId>> active_sets; // sorted; [0] = sources
};

bool predicate_holds(const TaskInstance& inst, const std::vector<NodeId>& final_set);

// One trial of the lossy percolation process: a node joins layer l's active
// set when at least one channel from a layer l-1 active sender delivers.
// Channel coins are keyed by (trial_seed, sender, receiver, layer), so the
// trace is a pure function of its arguments.
ReachTrace simulate_reach(const MPGraph& mpg, const InfluenceModel& infl,
                          const std::vector<NodeId>& sources, std::int64_t layers,
                          std::uint64_t trial_seed);

// Monte Carlo estimate over independent trials with trial seeds derived
// from (base_seed, trial index). The success count, and therefore every
// output field, is bit-identical for any thread count.
//   threads = 0: MPC_THREADS env var, else hardware concurrency.
McEstimate mc_success_prob(const MPGraph& mpg, const InfluenceModel& infl,
                           const std::vector<TaskInstance>& members, std::int64_t layers,
                           std::uint64_t trials, std::uint64_t base_seed, int threads = 0);

McEstimate mc_success_prob(const MPGraph& mpg, const InfluenceModel& infl,
                           const TaskInstance& inst, std::int64_t layers, std::uint64_t trials,
                           std::uint64_t base_seed, int threads = 0);

// Estimate assembly (p_hat, -ln p, Wilson 95% interval); exposed for tests.
McEstimate make_estimate(std::uint64_t trials, std::uint64_t successes);

int resolve_thread_count(int threads);

} // namespace mpcx
