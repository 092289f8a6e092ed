#pragma once

#include <string>
#include <vector>

#include "mpcx/sim_types.hpp"
#include "mpcx/transform.hpp"

namespace mpcx {

enum class BoundDirection { Lower, Upper };

// PaperStated bounds carry the constants of the source lemmas verbatim;
// LiftAudited bounds recompute every survival probability from the degrees
// of the actually constructed lift, so soundness assertions only ever rely
// on the audited values.
enum class Provenance { PaperStated, LiftAudited };

struct Bound {
    BoundDirection direction = BoundDirection::Lower;
    MpcValue value;
    std::string formula_id;
    Provenance provenance = Provenance::LiftAudited;
};

struct Message {
    NodeId sender = 0;
    NodeId receiver = 0;
    std::int64_t layer = 1;
};
using MessageSet = std::vector<Message>;

// -sum(ln survival) over a certified sufficient (resp. necessary) message
// set; validates that each channel exists and is active at its layer.
Bound mpc_upper_from_sufficient(const MPGraph& mpg, const InfluenceModel& infl,
                                const MessageSet& set);
Bound mpc_lower_from_necessary(const MPGraph& mpg, const InfluenceModel& infl,
                               const MessageSet& set);

// The certified two-message (FragNet / Cin) or arc-path (Gsn) sufficient
// set for ring transfer on a planted lift.
MessageSet sufficient_set_ring(const MPGraph& mpg, const Arch& arch, const Cycle& cycle,
                               NodeId u, NodeId v);

// Retain lower bound L*ln(1/phi), phi = 1 - prod over channels (1 - survival).
Bound bound_retain(const MPGraph& mpg, const InfluenceModel& infl, std::int64_t layers);

// Propagation bounds in terms of (n, r, D); ring bounds in terms of (s, r).
std::vector<Bound> bound_transfer(ArchKind arch, std::int64_t n, std::int64_t r, std::int64_t D);
std::vector<Bound> bound_ring(ArchKind arch, std::int64_t s, std::int64_t r);

// -ln of the L-step walk probability entry (v, u); infinite when zero.
Bound rw_lower_bound(const Graph& g, std::int64_t layers, NodeId u, NodeId v);

const char* direction_name(BoundDirection d);
const char* provenance_name(Provenance p);

} // namespace mpcx
