#pragma once

#include "mpcx/exact.hpp"
#include "mpcx/sim.hpp"
#include "mpcx/tasks.hpp"
#include "mpcx/transform.hpp"

namespace mpcx {

// Everything one measurement needs, assembled once: the lift, its influence
// model, the lift-level run instances, and the effective layer count (ring
// transfer under GSN propagates along the cycle arc, so the depth is the
// arc distance rather than the caller's L).
struct MpcRun {
    MPGraph mpg;
    InfluenceModel infl;
    std::vector<TaskInstance> instances;
    std::int64_t layers = 0;
};

// Raises NotSimulable for ring transfer under Mlp / Standard / VirtualNode:
// the success event there couples full-cycle traversal with self retention,
// with probability far below Monte Carlo reach; use bound_ring instead.
MpcRun build_run(const Graph& g, const Arch& arch, const TaskSpec& task, std::int64_t layers);

struct ExactMpc {
    Rational p;
    MpcValue mpc;
    std::size_t channels = 0;
};

McEstimate estimate_mpc(const Graph& g, const Arch& arch, const TaskSpec& task,
                        std::int64_t layers, std::uint64_t trials, std::uint64_t base_seed,
                        int threads = 0);

ExactMpc exact_mpc(const Graph& g, const Arch& arch, const TaskSpec& task, std::int64_t layers,
                   std::size_t cap = 24);

} // namespace mpcx
