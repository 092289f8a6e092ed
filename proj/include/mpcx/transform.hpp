#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mpcx/cycles.hpp"
#include "mpcx/graph.hpp"
#include "mpcx/influence.hpp"

namespace mpcx {

enum class ArchKind { Mlp, Standard, VirtualNode, Gsn, FragNet, Cin };

struct Arch {
    ArchKind kind = ArchKind::Standard;
    std::int64_t max_cycle = 6; // fragmentation size for Gsn / FragNet / Cin
    bool readout = false;

    static Arch mlp() { return {ArchKind::Mlp}; }
    static Arch standard() { return {ArchKind::Standard}; }
    static Arch virtual_node() { return {ArchKind::VirtualNode}; }
    static Arch gsn(std::int64_t max_cycle = 6) { return {ArchKind::Gsn, max_cycle}; }
    static Arch fragnet(std::int64_t max_cycle = 6) { return {ArchKind::FragNet, max_cycle}; }
    static Arch cin(std::int64_t max_cycle = 6) { return {ArchKind::Cin, max_cycle}; }
};

const char* arch_name(ArchKind kind);
ArchKind arch_from_name(const std::string& name);

enum class Role : std::uint8_t { Original, Virtual, EdgeCell, RingCell, Fragment, Readout };

const char* role_name(Role role);

// Sentinel label for nodes introduced by a transformation (virtual, readout,
// fragment markers). Input features are ordinary non-negative labels.
inline constexpr std::int64_t kSentinelLabel = -1;

// The transformed message passing graph a lossy simulation runs on.
// Original nodes keep their input ids (0..n-1); every added node records a
// role and, for cells and fragments, the input structure it lifts.
struct MPGraph {
    Graph graph;
    std::vector<Role> roles;
    std::vector<NodeId> origin;                 // Original node -> input node id (identity)
    std::vector<std::vector<NodeId>> provenance; // EdgeCell: {a,b}; Fragment/RingCell: cycle nodes
    // Layer masks: an edge listed here transmits only in the given layers;
    // all other edges are active in every layer. Keys are (a,b) with a<b.
    std::map<std::pair<NodeId, NodeId>, std::vector<std::int64_t>> edge_masks;

    NodeId find_node(Role role, const std::vector<NodeId>& prov) const; // -1 if absent
    bool edge_active(NodeId a, NodeId b, std::int64_t layer) const;
};

MPGraph transform(const Graph& g, const Arch& arch);

// Append a readout node adjacent to every existing node; those edges carry
// mask {layers+1}. Survival probabilities later derive from full degrees,
// masks only gate transmission.
MPGraph add_readout(MPGraph mpg, std::int64_t layers);

// Influence on the lift: survival into b is 1/(deg(b)+1) with degrees
// counted over all incident edges regardless of layer masks.
InfluenceModel mp_influence(const MPGraph& mpg);

} // namespace mpcx
