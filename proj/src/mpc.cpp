#include "mpcx/mpc.hpp"

#include <algorithm>

namespace mpcx {

NodeId TaskSpec::target_of(std::size_t i) const {
    return std::visit([](const auto& t) { return t.v; }, members.at(i));
}

const char* TaskSpec::kind_name() const {
    if (members.size() != 1) return "joint";
    if (std::holds_alternative<RetainTask>(members[0])) return "retain";
    if (std::holds_alternative<PropagateTask>(members[0])) return "propagate";
    return "ring";
}

namespace {

void check_original(const Graph& g, NodeId v) {
    g.check_node(v); // lift keeps input ids 0..n-1 as Original nodes
}

TaskInstance ring_instance(const Arch& arch, const RingTransferTask& task,
                           std::int64_t& layers) {
    if (!task.cycle.contains(task.u) || !task.cycle.contains(task.v))
        raise(ErrorCode::InvalidParameters, "ring transfer nodes must lie on the cycle");
    switch (arch.kind) {
        case ArchKind::FragNet:
        case ArchKind::Cin:
            // cycle information is carried by the Fragment / RingCell a
            // two-layer route passes through; plain propagation on the lift
            return TaskInstance{{task.u}, {task.v}, ReachMode::All};
        case ArchKind::Gsn:
            // substructure features make detection local: propagate along
            // the cycle with depth = arc distance (<= ceil(s/2))
            layers = task.cycle.arc_distance(task.u, task.v);
            return TaskInstance{{task.u}, {task.v}, ReachMode::All};
        default:
            raise(ErrorCode::NotSimulable,
                  std::string("ring transfer under ") + arch_name(arch.kind) +
                      " is out of Monte Carlo reach; use bound_ring");
    }
}

} // namespace

MpcRun build_run(const Graph& g, const Arch& arch, const TaskSpec& task, std::int64_t layers) {
    if (layers < 0) raise(ErrorCode::InvalidParameters, "negative layer count");
    if (task.members.empty()) raise(ErrorCode::InvalidParameters, "empty task");

    MpcRun run;
    run.layers = layers;
    if (task.members.size() > 1) {
        const NodeId shared = task.target_of(0);
        for (std::size_t i = 1; i < task.members.size(); ++i)
            if (task.target_of(i) != shared)
                raise(ErrorCode::InvalidParameters, "joint members must share the target node");
    }

    for (const auto& member : task.members) {
        if (std::holds_alternative<RetainTask>(member)) {
            const auto& t = std::get<RetainTask>(member);
            check_original(g, t.v);
            run.instances.push_back(TaskInstance{{t.v}, {t.v}, ReachMode::All});
        } else if (std::holds_alternative<PropagateTask>(member)) {
            const auto& t = std::get<PropagateTask>(member);
            check_original(g, t.u);
            check_original(g, t.v);
            run.instances.push_back(TaskInstance{{t.u}, {t.v}, ReachMode::All});
        } else {
            const auto& t = std::get<RingTransferTask>(member);
            if (task.members.size() > 1)
                raise(ErrorCode::InvalidParameters, "ring transfer cannot be a joint member");
            check_original(g, t.u);
            check_original(g, t.v);
            run.instances.push_back(ring_instance(arch, t, run.layers));
        }
    }

    run.mpg = transform(g, arch);
    run.infl = mp_influence(run.mpg);
    return run;
}

McEstimate estimate_mpc(const Graph& g, const Arch& arch, const TaskSpec& task,
                        std::int64_t layers, std::uint64_t trials, std::uint64_t base_seed,
                        int threads) {
    const MpcRun run = build_run(g, arch, task, layers);
    return mc_success_prob(run.mpg, run.infl, run.instances, run.layers, trials, base_seed,
                           threads);
}

ExactMpc exact_mpc(const Graph& g, const Arch& arch, const TaskSpec& task, std::int64_t layers,
                   std::size_t cap) {
    const MpcRun run = build_run(g, arch, task, layers);
    ExactResult res = exact_success_prob(run.mpg, run.infl, run.instances, run.layers, cap);
    ExactMpc out;
    out.mpc = mpc_from_rational(res.p);
    out.p = std::move(res.p);
    out.channels = res.channels;
    return out;
}

} // namespace mpcx
