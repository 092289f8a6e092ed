#pragma once

#include <variant>
#include <vector>

#include "mpcx/cycles.hpp"
#include "mpcx/graph.hpp"

namespace mpcx {

// Node-level tasks whose message passing complexity is measured. All node
// ids refer to the input graph.
struct RetainTask {
    NodeId v;
};

struct PropagateTask {
    NodeId u; // marked source
    NodeId v; // target
};

// Recover the feature of node u on the length-s cycle through v. Well posed
// on planted-ring instances where that cycle is the only one near v.
struct RingTransferTask {
    NodeId v;
    Cycle cycle;
    NodeId u;
};

struct TaskSpec {
    using Member = std::variant<RetainTask, PropagateTask, RingTransferTask>;
    std::vector<Member> members; // >1 = joint task (outputs concatenated), sharing target v

    static TaskSpec retain(NodeId v) { return {{RetainTask{v}}}; }
    static TaskSpec propagate(NodeId u, NodeId v) { return {{PropagateTask{u, v}}}; }
    static TaskSpec ring_transfer(NodeId v, Cycle cycle, NodeId u) {
        return {{RingTransferTask{v, std::move(cycle), u}}};
    }
    static TaskSpec joint(std::vector<Member> ms) { return {std::move(ms)}; }

    NodeId target_of(std::size_t i) const;
    const char* kind_name() const;
};

} // namespace mpcx
