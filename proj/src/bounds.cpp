#include "mpcx/bounds.hpp"

#include <cmath>

namespace mpcx {

const char* direction_name(BoundDirection d) {
    return d == BoundDirection::Lower ? "lower" : "upper";
}

const char* provenance_name(Provenance p) {
    return p == Provenance::PaperStated ? "paper_stated" : "lift_audited";
}

namespace {

double message_set_nats(const MPGraph& mpg, const InfluenceModel& infl, const MessageSet& set) {
    double nats = 0.0;
    for (const Message& m : set) {
        mpg.graph.check_node(m.receiver);
        if (m.sender != m.receiver && !mpg.graph.has_edge(m.sender, m.receiver))
            raise(ErrorCode::UnknownChannel, "no channel " + std::to_string(m.sender) + "->" +
                                                 std::to_string(m.receiver));
        if (m.layer < 1 || !mpg.edge_active(m.sender, m.receiver, m.layer))
            raise(ErrorCode::UnknownChannel,
                  "channel " + std::to_string(m.sender) + "->" + std::to_string(m.receiver) +
                      " inactive at layer " + std::to_string(m.layer));
        nats += std::log(static_cast<double>(infl.recv_denom(m.receiver)));
    }
    return nats;
}

Bound make(BoundDirection dir, double nats, std::string formula, Provenance prov) {
    return Bound{dir, MpcValue::finite(nats), std::move(formula), prov};
}

Bound make_inf(BoundDirection dir, std::string formula, Provenance prov) {
    return Bound{dir, MpcValue::inf(), std::move(formula), prov};
}

} // namespace

Bound mpc_upper_from_sufficient(const MPGraph& mpg, const InfluenceModel& infl,
                                const MessageSet& set) {
    return make(BoundDirection::Upper, message_set_nats(mpg, infl, set), "sufficient_set",
                Provenance::LiftAudited);
}

Bound mpc_lower_from_necessary(const MPGraph& mpg, const InfluenceModel& infl,
                               const MessageSet& set) {
    return make(BoundDirection::Lower, message_set_nats(mpg, infl, set), "necessary_set",
                Provenance::LiftAudited);
}

MessageSet sufficient_set_ring(const MPGraph& mpg, const Arch& arch, const Cycle& cycle,
                               NodeId u, NodeId v) {
    if (!cycle.contains(u) || !cycle.contains(v))
        raise(ErrorCode::InvalidParameters, "ring transfer nodes must lie on the cycle");

    switch (arch.kind) {
        case ArchKind::FragNet: {
            const NodeId frag = mpg.find_node(Role::Fragment, cycle.nodes);
            if (frag < 0) raise(ErrorCode::InvalidParameters, "cycle has no fragment node");
            return {Message{u, frag, 1}, Message{frag, v, 2}};
        }
        case ArchKind::Cin: {
            const NodeId ring = mpg.find_node(Role::RingCell, cycle.nodes);
            if (ring < 0) raise(ErrorCode::InvalidParameters, "cycle has no ring cell");
            // edge cell of the cycle edge at v with the smaller neighbor
            const auto arc = cycle.shorter_arc(v, u);
            NodeId c1 = arc.size() > 1 ? arc[1] : u;
            const NodeId cell = mpg.find_node(Role::EdgeCell, {std::min(v, c1), std::max(v, c1)});
            if (cell < 0) raise(ErrorCode::InvalidParameters, "cycle edge has no edge cell");
            return {Message{ring, cell, 1}, Message{cell, v, 2}};
        }
        case ArchKind::Gsn: {
            const auto path = cycle.shorter_arc(u, v);
            MessageSet set;
            for (std::size_t i = 0; i + 1 < path.size(); ++i)
                set.push_back(Message{path[i], path[i + 1], static_cast<std::int64_t>(i + 1)});
            return set;
        }
        default:
            raise(ErrorCode::UnsupportedArch,
                  std::string(arch_name(arch.kind)) + " has no certified ring sufficient set");
    }
}

Bound bound_retain(const MPGraph& mpg, const InfluenceModel& infl, std::int64_t layers) {
    if (layers < 0) raise(ErrorCode::InvalidParameters, "negative layer count");
    // log(1 - phi) = sum over channels of log(1 - survival); every node has
    // its self channel plus one channel per incident edge direction.
    double log_all_lost = 0.0;
    bool certain = false; // some channel survives with probability 1
    for (NodeId b = 0; b < mpg.graph.node_count(); ++b) {
        const std::int64_t denom = infl.recv_denom(b);
        const std::int64_t channels = mpg.graph.degree(b) + 1;
        if (denom == 1) {
            certain = true;
            break;
        }
        log_all_lost +=
            static_cast<double>(channels) *
            std::log(static_cast<double>(denom - 1) / static_cast<double>(denom));
    }
    if (certain)
        return make(BoundDirection::Lower, 0.0, "retain_linear_phi", Provenance::LiftAudited);
    const double phi = 1.0 - std::exp(log_all_lost);
    const double nats = phi <= 0.0 ? 0.0 : static_cast<double>(layers) * -std::log(phi);
    return make(BoundDirection::Lower, nats, "retain_linear_phi", Provenance::LiftAudited);
}

std::vector<Bound> bound_transfer(ArchKind arch, std::int64_t n, std::int64_t r, std::int64_t D) {
    if (D < 0 || r < 1 || n < 2) raise(ErrorCode::InvalidParameters, "need D >= 0, r >= 1, n >= 2");
    const double dn = static_cast<double>(n);
    const double dr = static_cast<double>(r);
    const double dD = static_cast<double>(D);

    switch (arch) {
        case ArchKind::Mlp:
            if (D == 0)
                return {make(BoundDirection::Lower, 0.0, "mlp_self_only", Provenance::LiftAudited)};
            return {make_inf(BoundDirection::Lower, "mlp_empty_graph", Provenance::LiftAudited)};
        case ArchKind::VirtualNode:
            return {
                make(BoundDirection::Upper, std::log(dn * (dr + 2.0)), "vn_pair_ln_n(r+2)",
                     Provenance::PaperStated),
                make(BoundDirection::Upper, 2.0 * std::log(dn), "vn_stated_2ln_n",
                     Provenance::PaperStated),
                make(BoundDirection::Upper, std::log((dn + 1.0) * (dr + 2.0)),
                     "vn_pair_ln_(n+1)(r+2)", Provenance::LiftAudited),
            };
        default:
            return {
                make(BoundDirection::Lower, dD * std::log(dr), "transfer_stated_Dln_r",
                     Provenance::PaperStated),
                make(BoundDirection::Lower, dD * std::log(dr + 1.0), "transfer_path_Dln_(r+1)",
                     Provenance::LiftAudited),
            };
    }
}

std::vector<Bound> bound_ring(ArchKind arch, std::int64_t s, std::int64_t r) {
    if (s < 3 || r < 2) raise(ErrorCode::InvalidParameters, "need s >= 3, r >= 2");
    const double ds = static_cast<double>(s);
    const double dr = static_cast<double>(r);

    switch (arch) {
        case ArchKind::FragNet:
            return {
                make(BoundDirection::Upper, std::log(ds * (dr + 2.0)), "fragnet_stated_ln_s(r+2)",
                     Provenance::PaperStated),
                make(BoundDirection::Upper, std::log((ds + 1.0) * (dr + 2.0)),
                     "fragnet_audited_ln_(s+1)(r+2)", Provenance::LiftAudited),
            };
        case ArchKind::Cin:
            return {
                make(BoundDirection::Upper, std::log((ds + 2.0) * (2.0 * dr + 1.0)),
                     "cin_stated_ln_(s+2)(2r+1)", Provenance::PaperStated),
                make(BoundDirection::Upper, std::log((ds + 3.0) * (2.0 * dr + 1.0)),
                     "cin_audited_ln_(s+3)(2r+1)", Provenance::LiftAudited),
            };
        case ArchKind::Gsn: {
            const double hops = static_cast<double>((s + 1) / 2);
            return {
                make(BoundDirection::Upper, hops * std::log(dr + 1.0),
                     "gsn_stated_ceil(s/2)ln_(r+1)", Provenance::PaperStated),
                make(BoundDirection::Upper, hops * std::log(dr + 1.0),
                     "gsn_audited_ceil(s/2)ln_(r+1)", Provenance::LiftAudited),
            };
        }
        default:
            return {
                make(BoundDirection::Lower, ds * std::log(dr), "ring_stated_sln_r",
                     Provenance::PaperStated),
                make(BoundDirection::Lower, ds * std::log(dr + 1.0), "ring_tight_sln_(r+1)",
                     Provenance::LiftAudited),
            };
    }
}

Bound rw_lower_bound(const Graph& g, std::int64_t layers, NodeId u, NodeId v) {
    g.check_node(u);
    g.check_node(v);
    const auto powers = walk_probability(g, layers);
    const double entry = powers[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
    if (entry <= 0.0)
        return make_inf(BoundDirection::Lower, "random_walk_power", Provenance::LiftAudited);
    return make(BoundDirection::Lower, -std::log(entry), "random_walk_power",
                Provenance::LiftAudited);
}

} // namespace mpcx
